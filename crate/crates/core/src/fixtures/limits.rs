//! Diagrams for the limit constructions.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::fcat::{FAmbient, FFunctor, FObject, FiniteFCategory, OneCell, Weakness};
use crate::fincat::FiniteCategory;
use crate::limits::{DottedFCategory, MarkedTwoCategory};

use super::{arrow_obj, cat, chain_obj, idempotent_shape, locally_discrete, poset_functor, two_cell_shape};

pub struct DottedFixture {
    pub name: &'static str,
    pub shape: DottedFCategory,
    pub functor: FFunctor<FAmbient>,
    pub weakness: Weakness,
}

pub struct MarkedFixture {
    pub name: &'static str,
    pub shape: MarkedTwoCategory,
    pub functor: FFunctor<FAmbient>,
}

pub struct WeightedFixture {
    pub name: &'static str,
    pub weight: FFunctor<FAmbient>,
    pub diagram: FFunctor<FAmbient>,
}

fn set<T: Ord + Clone>(items: &[T]) -> BTreeSet<T> {
    items.iter().cloned().collect()
}

fn chaotic2() -> FObject {
    FObject::chordate(cat(FiniteCategory::chaotic(2)))
}

fn terminal_weight(shape: &Arc<FiniteFCategory>) -> FFunctor<FAmbient> {
    let objs = vec![FObject::terminal(); shape.num_objects()];
    poset_functor(shape, &objs, |_| vec![0])
}

/// `a → c ← b`.
fn cospan() -> FiniteCategory {
    FiniteCategory::preorder_named(&["a", "b", "c"], |x, y| x == y || y == 2)
}

fn non_unit(shape: &FiniteFCategory) -> Vec<OneCell> {
    shape.all_one_cells().into_iter().filter(|f| !shape.is_unit(f)).collect()
}

fn loose_arrow() -> Arc<FiniteFCategory> {
    locally_discrete(FiniteCategory::walking_arrow(), |_| false)
}

fn tight_arrow() -> Arc<FiniteFCategory> {
    locally_discrete(FiniteCategory::walking_arrow(), |_| true)
}

pub fn dotted_fixtures() -> Vec<DottedFixture> {
    let mut out = Vec::new();
    let la = loose_arrow();
    let both = || DottedFCategory::new(la.clone(), set(&[]), set(&[0, 1])).unwrap();
    let a = arrow_obj([true, false]);
    let to_top = poset_functor(&la, &[a.clone(), a.clone()], |_| vec![1, 1]);
    for (name, w) in [("loose-arrow-lax", Weakness::L), ("loose-arrow-colax", Weakness::C), ("loose-arrow-strict", Weakness::S)] {
        out.push(DottedFixture { name, shape: both(), functor: to_top.clone(), weakness: w });
    }
    let swap = poset_functor(&la, &[chaotic2(), chaotic2()], |_| vec![1, 0]);
    out.push(DottedFixture { name: "loose-arrow-pseudo", shape: both(), functor: swap, weakness: Weakness::P });

    let ta = tight_arrow();
    let marked = DottedFCategory::new(ta.clone(), set(&non_unit(&ta)), set(&[0, 1])).unwrap();
    let incl = poset_functor(&ta, &[a.clone(), chain_obj(2)], |_| vec![0, 1]);
    out.push(DottedFixture { name: "marked-tight-arrow", shape: marked, functor: incl, weakness: Weakness::L });

    let point = locally_discrete(FiniteCategory::terminal(), |_| true);
    out.push(DottedFixture {
        name: "point",
        shape: DottedFCategory::new(point.clone(), set(&[]), set(&[0])).unwrap(),
        functor: poset_functor(&point, &[a.clone()], |_| vec![]),
        weakness: Weakness::L,
    });

    let empty = locally_discrete(FiniteCategory::empty(), |_| true);
    out.push(DottedFixture {
        name: "empty",
        shape: DottedFCategory::unmarked(empty.clone()),
        functor: poset_functor(&empty, &[], |_| vec![]),
        weakness: Weakness::L,
    });

    let disc = locally_discrete(FiniteCategory::discrete(2), |_| true);
    out.push(DottedFixture {
        name: "discrete-two",
        shape: DottedFCategory::new(disc.clone(), set(&[]), set(&[0])).unwrap(),
        functor: poset_functor(&disc, &[arrow_obj([false, true]), chain_obj(2)], |_| vec![]),
        weakness: Weakness::L,
    });

    let cs = locally_discrete(cospan(), |_| true);
    out.push(DottedFixture {
        name: "cospan-strict",
        shape: DottedFCategory::strict(cs.clone()),
        functor: poset_functor(&cs, &[chain_obj(2), chain_obj(2), chain_obj(2)], |f| if f.src == 0 { vec![0, 1] } else { vec![1, 1] }),
        weakness: Weakness::L,
    });

    let tc = two_cell_shape([true, true]);
    let tcf = poset_functor(&tc, &[FObject::terminal(), chain_obj(2)], |f| vec![f.idx]);
    for (name, w) in [("two-cell-lax", Weakness::L), ("two-cell-colax", Weakness::C)] {
        out.push(DottedFixture { name, shape: DottedFCategory::unmarked(tc.clone()), functor: tcf.clone(), weakness: w });
    }

    let id = idempotent_shape();
    let closure = poset_functor(&id, &[a.clone()], |_| vec![1, 1]);
    for (name, w) in [("idempotent-lax", Weakness::L), ("idempotent-colax", Weakness::C)] {
        out.push(DottedFixture {
            name,
            shape: DottedFCategory::new(id.clone(), set(&[]), set(&[0])).unwrap(),
            functor: closure.clone(),
            weakness: w,
        });
    }
    out
}

pub fn marked_fixtures() -> Vec<MarkedFixture> {
    let mut out = Vec::new();
    let ta = tight_arrow();
    let u = poset_functor(&ta, &[chain_obj(2), chain_obj(3)], |_| vec![0, 2]);
    out.push(MarkedFixture { name: "arrow-unmarked", shape: MarkedTwoCategory::new(ta.clone(), set(&[])).unwrap(), functor: u.clone() });
    out.push(MarkedFixture {
        name: "arrow-marked",
        shape: MarkedTwoCategory::new(ta.clone(), set(&non_unit(&ta))).unwrap(),
        functor: u,
    });
    out.push(MarkedFixture {
        name: "constant-terminal",
        shape: MarkedTwoCategory::new(ta.clone(), set(&[])).unwrap(),
        functor: terminal_weight(&ta),
    });
    let disc = locally_discrete(FiniteCategory::discrete(2), |_| true);
    out.push(MarkedFixture {
        name: "discrete-product",
        shape: MarkedTwoCategory::new(disc.clone(), set(&[])).unwrap(),
        functor: poset_functor(&disc, &[chain_obj(2), chaotic2()], |_| vec![]),
    });
    let tc = two_cell_shape([true, true]);
    out.push(MarkedFixture {
        name: "two-cell",
        shape: MarkedTwoCategory::new(tc.clone(), set(&[])).unwrap(),
        functor: poset_functor(&tc, &[chain_obj(2), chain_obj(2)], |f| if f.idx == 0 { vec![0, 0] } else { vec![0, 1] }),
    });
    let pp = locally_discrete(FiniteCategory::parallel_pair(), |_| true);
    out.push(MarkedFixture {
        name: "parallel-marked",
        shape: MarkedTwoCategory::new(pp.clone(), set(&non_unit(&pp))).unwrap(),
        functor: poset_functor(&pp, &[chain_obj(3), chain_obj(3)], |f| if f.idx == 0 { vec![0, 1, 2] } else { vec![0, 2, 2] }),
    });
    out
}

pub fn weighted_fixtures() -> Vec<WeightedFixture> {
    let mut out = Vec::new();
    let point = locally_discrete(FiniteCategory::terminal(), |_| true);
    let at_point = |o: FObject| poset_functor(&point, &[o], |_| vec![]);
    out.push(WeightedFixture { name: "point", weight: terminal_weight(&point), diagram: at_point(chain_obj(2)) });
    out.push(WeightedFixture { name: "cotensor", weight: at_point(chain_obj(2)), diagram: at_point(arrow_obj([true, false])) });
    out.push(WeightedFixture {
        name: "cotensor-loose-weight",
        weight: at_point(arrow_obj([true, false])),
        diagram: at_point(chain_obj(2)),
    });
    let disc = locally_discrete(FiniteCategory::discrete(2), |_| true);
    out.push(WeightedFixture {
        name: "product",
        weight: terminal_weight(&disc),
        diagram: poset_functor(&disc, &[arrow_obj([true, false]), chain_obj(2)], |_| vec![]),
    });
    let ta = tight_arrow();
    out.push(WeightedFixture {
        name: "comma",
        weight: poset_functor(&ta, &[FObject::terminal(), chain_obj(2)], |_| vec![0]),
        diagram: poset_functor(&ta, &[chain_obj(2), chain_obj(2)], |_| vec![1, 1]),
    });
    let pp = locally_discrete(FiniteCategory::parallel_pair(), |_| true);
    out.push(WeightedFixture {
        name: "equalizer",
        weight: terminal_weight(&pp),
        diagram: poset_functor(&pp, &[chain_obj(3), chain_obj(3)], |f| if f.idx == 0 { vec![0, 1, 2] } else { vec![0, 2, 2] }),
    });
    let cs = locally_discrete(cospan(), |_| true);
    out.push(WeightedFixture {
        name: "pullback",
        weight: terminal_weight(&cs),
        diagram: poset_functor(&cs, &[chain_obj(2), chain_obj(2), chain_obj(2)], |f| if f.src == 0 { vec![0, 1] } else { vec![1, 1] }),
    });
    let la = loose_arrow();
    out.push(WeightedFixture {
        name: "loose-shape",
        weight: terminal_weight(&la),
        diagram: poset_functor(&la, &[arrow_obj([true, false]), arrow_obj([true, false])], |_| vec![1, 1]),
    });
    out
}
