//! Small sketches: a binary product span, a single-arrow cone, and a cone
//! whose colimit glues an arrow into a loop.

use std::sync::Arc;

use crate::fcat::{FFunctor, FObject, FiniteFCategory};
use crate::fincat::{FiniteCategory, FiniteFunctor, ObjId};
use crate::sketch::{Model, Sketch, SketchCone};

use super::{cat, chain_obj, locally_discrete, poset_functor};

fn point_functor(hom: &Arc<FiniteCategory>, idx: usize) -> FiniteFunctor {
    let one = cat(FiniteCategory::terminal());
    FiniteFunctor::new(one, hom.clone(), vec![idx], vec![hom.identity(idx)]).expect("point")
}

fn terminal_weight(shape: &Arc<FiniteFCategory>) -> FFunctor<crate::fcat::FAmbient> {
    poset_functor(shape, &vec![FObject::terminal(); shape.num_objects()], |_| vec![0])
}

/// `P → A`, `P → B` with `P` declared the product of `A` and `B`.
pub fn span_sketch() -> Sketch {
    let carrier = locally_discrete(FiniteCategory::preorder_named(&["P", "A", "B"], |x, y| x == y || x == 0), |_| true);
    Sketch::new(carrier.clone(), vec![span_cone(&carrier, [1, 2])]).expect("span sketch")
}

/// The product cone over `(D 0, D 1)` with apex `P`.
pub fn span_cone(carrier: &Arc<FiniteFCategory>, legs: [ObjId; 2]) -> SketchCone {
    let shape = locally_discrete(FiniteCategory::discrete(2), |_| true);
    let diagram = FFunctor::build_unchecked(&shape, |j| legs[j], |f| carrier.unit(legs[f.src]), |a| {
        carrier.id_cell(&carrier.unit(legs[a.src]))
    });
    let gamma = (0..2).map(|j| point_functor(&carrier.hom_cat(0, legs[j]).cat, 0)).collect();
    SketchCone { weight: terminal_weight(&shape), diagram, apex: 0, gamma }
}

/// A model of the span carrier with the given values and projection maps.
pub fn span_model(sketch: &Sketch, values: [FObject; 3], p: Vec<ObjId>, q: Vec<ObjId>) -> Model {
    poset_functor(&sketch.carrier, &values, |f| if f.dst == 1 { p.clone() } else { q.clone() })
}

/// Span models: a product, a non-product, and a product up to equivalence.
pub fn span_models(sketch: &Sketch) -> Vec<(&'static str, Model)> {
    let sq = FObject::chordate(cat(FiniteCategory::product(&FiniteCategory::chain(2), &FiniteCategory::chain(2))));
    vec![
        ("product", span_model(sketch, [sq, chain_obj(2), chain_obj(2)], vec![0, 0, 1, 1], vec![0, 1, 0, 1])),
        ("diagonal", span_model(sketch, [chain_obj(2), chain_obj(2), chain_obj(2)], vec![0, 1], vec![0, 1])),
        (
            "chaotic-point",
            span_model(
                sketch,
                [FObject::chordate(cat(FiniteCategory::chaotic(2))), FObject::terminal(), FObject::terminal()],
                vec![0, 0],
                vec![0, 0],
            ),
        ),
    ]
}

/// `s → d` with `s` declared the limit of `d` over a point.
pub fn arrow_sketch() -> Sketch {
    let carrier = locally_discrete(FiniteCategory::walking_arrow(), |_| true);
    let shape = locally_discrete(FiniteCategory::terminal(), |_| true);
    let diagram = FFunctor::build_unchecked(&shape, |_| 1, |_| carrier.unit(1), |_| carrier.id_cell(&carrier.unit(1)));
    let gamma = vec![point_functor(&carrier.hom_cat(0, 1).cat, 0)];
    let cone = SketchCone { weight: terminal_weight(&shape), diagram, apex: 0, gamma };
    Sketch::new(carrier, vec![cone]).expect("arrow sketch")
}

pub fn arrow_models(sketch: &Sketch) -> Vec<(&'static str, Model)> {
    let m = |a: FObject, b: FObject, f: Vec<ObjId>| poset_functor(&sketch.carrier, &[a, b], move |_| f.clone());
    vec![
        ("identity", m(chain_obj(2), chain_obj(2), vec![0, 1])),
        ("collapse", m(chain_obj(2), chain_obj(2), vec![1, 1])),
        ("chaotic-point", m(FObject::chordate(cat(FiniteCategory::chaotic(2))), FObject::terminal(), vec![0, 0])),
    ]
}

/// One object, and a cone over the parallel pair whose weight sends the two
/// arrows to the endpoints of `0 → 1`; its colimit turns that arrow into a
/// free loop.
pub fn loop_sketch() -> Sketch {
    let carrier = locally_discrete(FiniteCategory::terminal(), |_| true);
    let shape = locally_discrete(FiniteCategory::parallel_pair(), |_| true);
    let weight = poset_functor(&shape, &[FObject::terminal(), chain_obj(2)], |f| vec![f.idx]);
    let diagram = FFunctor::build_unchecked(&shape, |_| 0, |_| carrier.unit(0), |_| carrier.id_cell(&carrier.unit(0)));
    let hom = carrier.hom_cat(0, 0).cat.clone();
    let gamma = vec![
        point_functor(&hom, 0),
        FiniteFunctor::constant(&cat(FiniteCategory::chain(2)), &hom, 0),
    ];
    let cone = SketchCone { weight, diagram, apex: 0, gamma };
    Sketch::new(carrier, vec![cone]).expect("loop sketch")
}

/// One object `t`, declared the limit of the empty diagram.
pub fn terminal_sketch() -> Sketch {
    let carrier = locally_discrete(FiniteCategory::terminal(), |_| true);
    let shape = locally_discrete(FiniteCategory::empty(), |_| true);
    let diagram = FFunctor::build_unchecked(&shape, |_| 0, |_| carrier.unit(0), |_| carrier.id_cell(&carrier.unit(0)));
    let cone = SketchCone { weight: terminal_weight(&shape), diagram, apex: 0, gamma: vec![] };
    Sketch::new(carrier, vec![cone]).expect("terminal sketch")
}

/// A point, a two-element chain, and a chaotic pair (terminal only up to equivalence).
pub fn terminal_models(sketch: &Sketch) -> Vec<(&'static str, Model)> {
    let m = |a: FObject| poset_functor(&sketch.carrier, &[a], |_| vec![]);
    vec![
        ("point", m(FObject::terminal())),
        ("chain", m(chain_obj(2))),
        ("chaotic", m(FObject::chordate(cat(FiniteCategory::chaotic(2))))),
    ]
}
