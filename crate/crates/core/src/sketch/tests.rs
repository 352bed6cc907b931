use std::collections::BTreeSet;

use super::*;
use crate::error::Error;
use crate::fcat::{
    check_loose_natural, enumerate_loose_transformations, FFunctor, FObject, TransformationOptions, ViolationKind,
    Weakness, WeaknessPair,
};
use crate::fincat::DEFAULT_BOUND;
use crate::fixtures::monoidal::{
    enumerate_lax_monoidal, lax_monoidal_of, monoidal_fixture, monoidal_fixtures, ProductFragment,
};
use crate::fixtures::sketches::{arrow_models, arrow_sketch, loop_sketch, span_cone, span_models, span_sketch};

fn terminal_model(sketch: &Sketch) -> Model {
    FFunctor::constant(&sketch.carrier, &crate::fcat::FAmbient, &FObject::terminal())
}

#[test]
fn constant_terminal_functor_is_a_model() {
    let frag = ProductFragment::new();
    for sketch in [&frag.sketch, &span_sketch(), &arrow_sketch()] {
        let report = check_model(&terminal_model(sketch), sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
        assert!(report.is_model(), "{:?}", report.failing());
    }
}

#[test]
fn monoidal_categories_give_models() {
    let frag = ProductFragment::new();
    assert!(frag.sketch.tight_cones);
    for m in monoidal_fixtures() {
        let model = m.model(&frag);
        let report = check_model(&model, &frag.sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
        assert!(report.is_model(), "{}: {:?}", m.name, report.cones);
    }
}

#[test]
fn span_models_are_classified() {
    let sketch = span_sketch();
    let expected = [("product", true, true), ("diagonal", false, false), ("chaotic-point", false, true)];
    for ((name, model), (ename, iso, equiv)) in span_models(&sketch).into_iter().zip(expected) {
        assert_eq!(name, ename);
        let r = check_model(&model, &sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
        assert_eq!(r.is_model(), iso, "{name} iso");
        if !iso {
            assert_eq!(r.failing(), vec![0]);
        }
        let r = check_model(&model, &sketch, RClass::Equivalence, 2, DEFAULT_BOUND).unwrap();
        assert_eq!(r.is_model(), equiv, "{name} equivalence");
        assert_eq!(r.certified_up_to, Some(2));
    }
}

#[test]
fn comparison_map_of_a_product_is_bijective_on_objects() {
    let sketch = span_sketch();
    let (_, model) = span_models(&sketch).remove(0);
    let (lim, rho) = comparison_map(&model, &sketch.cones[0], DEFAULT_BOUND).unwrap();
    assert_eq!(lim.apex.loose.num_objects(), 4);
    assert!(rho.functor.is_isomorphism());
}

#[test]
fn identity_is_a_cone_preserving_and_reflecting_morphism() {
    for sketch in [span_sketch(), arrow_sketch(), ProductFragment::new().sketch] {
        let id = identity_morphism(&sketch.carrier);
        assert!(check_sketch_morphism(&id, &sketch, &sketch));
        assert!(check_cone_reflecting(&id, &sketch, &sketch, DEFAULT_BOUND).unwrap());
    }
}

#[test]
fn swapping_the_legs_does_not_preserve_the_cone() {
    let sketch = span_sketch();
    let c = &sketch.carrier;
    let swap = FFunctor::build(c, &**c, |x| [0, 2, 1][x], |f| crate::fcat::OneCell { src: [0, 2, 1][f.src], dst: [0, 2, 1][f.dst], idx: f.idx }, |a| {
        crate::fcat::TwoCell { src: [0, 2, 1][a.src], dst: [0, 2, 1][a.dst], idx: a.idx }
    })
    .unwrap();
    assert!(!check_sketch_morphism(&swap, &sketch, &sketch));
    let swapped = Sketch::new(c.clone(), vec![span_cone(c, [2, 1])]).unwrap();
    assert!(check_sketch_morphism(&swap, &sketch, &swapped));
}

#[test]
fn missing_cones_are_not_reflected() {
    let t = span_sketch();
    let s = Sketch::bare(t.carrier.clone());
    let id = identity_morphism(&t.carrier);
    assert!(check_sketch_morphism(&id, &s, &t));
    assert!(!check_cone_reflecting(&id, &s, &t, DEFAULT_BOUND).unwrap());
}

#[test]
fn tight_part_inclusion_preserves_and_reflects_cones() {
    let frag = ProductFragment::new();
    let (tau, incl) = tight_part_sketch(&frag.sketch, DEFAULT_BOUND).unwrap();
    assert_eq!(tau.cones.len(), frag.sketch.cones.len());
    assert!(tau.carrier.all_one_cells().iter().all(|f| tau.carrier.is_tight_cell(f)));
    assert!(check_sketch_morphism(&incl, &tau, &frag.sketch));
    assert!(check_cone_reflecting(&incl, &tau, &frag.sketch, DEFAULT_BOUND).unwrap());
    for m in monoidal_fixtures() {
        let restricted = restrict_model(&incl, &m.model(&frag), &tau, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
        assert_eq!(restricted.source, tau.carrier);
    }
}

#[test]
fn restriction_along_the_identity_is_the_model() {
    let sketch = span_sketch();
    let (_, model) = span_models(&sketch).remove(0);
    let id = identity_morphism(&sketch.carrier);
    assert_eq!(restrict_model(&id, &model, &sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap(), model);
}

#[test]
fn restriction_into_a_conefree_sketch_can_fail() {
    let s = span_sketch();
    let t = Sketch::bare(s.carrier.clone());
    let (_, model) = span_models(&s).remove(1);
    let id = identity_morphism(&s.carrier);
    let err = restrict_model(&id, &model, &s, RClass::Iso, 0, DEFAULT_BOUND).unwrap_err();
    assert!(matches!(err, Error::ModelCheckFailed(_)));
    assert!(check_model(&model, &t, RClass::Iso, 0, DEFAULT_BOUND).unwrap().is_model());
}

#[test]
fn restriction_is_functorial() {
    let frag = ProductFragment::new();
    let (tau, incl) = tight_part_sketch(&frag.sketch, DEFAULT_BOUND).unwrap();
    let id = identity_morphism(&tau.carrier);
    let m = monoidal_fixture("join2").model(&frag);
    let once = restrict_model(&incl, &m, &tau, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
    let twice = restrict_model(&id, &once, &tau, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
    let composite = id.then(&incl).unwrap();
    assert_eq!(twice, restrict_model(&composite, &m, &tau, RClass::Iso, 0, DEFAULT_BOUND).unwrap());
}

#[test]
fn terminal_models_have_one_transformation() {
    let frag = ProductFragment::new();
    let t = terminal_model(&frag.sketch);
    for w in [Weakness::S, Weakness::L, Weakness::C, Weakness::P] {
        assert_eq!(enumerate_model_transformations(&t, &t, w, DEFAULT_BOUND).unwrap().len(), 1);
    }
}

#[test]
fn lax_transformations_are_lax_monoidal_functors() {
    let frag = ProductFragment::new();
    for (a, b) in [("join2", "chain3-max"), ("z2", "join2"), ("meet2", "join2"), ("bz2", "chaotic2")] {
        let (ma, mb) = (monoidal_fixture(a), monoidal_fixture(b));
        let phis = enumerate_model_transformations(&ma.model(&frag), &mb.model(&frag), Weakness::L, DEFAULT_BOUND).unwrap();
        let mut got: Vec<_> = phis.iter().map(|p| lax_monoidal_of(&frag, &ma, p)).collect();
        got.sort();
        let expected = enumerate_lax_monoidal(&ma, &mb, DEFAULT_BOUND).unwrap();
        assert_eq!(got, expected, "{a} → {b}");
    }
}

#[test]
fn strict_transformations_are_strict_monoidal_functors() {
    let frag = ProductFragment::new();
    let (ma, mb) = (monoidal_fixture("join2"), monoidal_fixture("chain3-max"));
    let (m, n) = (ma.model(&frag), mb.model(&frag));
    let strict = enumerate_model_transformations(&m, &n, Weakness::S, DEFAULT_BOUND).unwrap();
    let mut got: Vec<_> = strict.iter().map(|p| lax_monoidal_of(&frag, &ma, p)).collect();
    got.sort();
    let expected: Vec<_> = enumerate_lax_monoidal(&ma, &mb, DEFAULT_BOUND)
        .unwrap()
        .into_iter()
        .filter(|l| l.mu.iter().chain([&l.eta]).all(|&c| mb.cat.is_identity(c)))
        .collect();
    assert_eq!(got, expected);
    let lax: BTreeSet<_> = enumerate_model_transformations(&m, &n, Weakness::L, DEFAULT_BOUND).unwrap().into_iter().collect();
    let colax: BTreeSet<_> = enumerate_model_transformations(&m, &n, Weakness::C, DEFAULT_BOUND).unwrap().into_iter().collect();
    for s in &strict {
        let mut as_lax = s.clone();
        as_lax.weakness = lax.iter().next().unwrap().weakness;
        assert!(lax.contains(&as_lax));
        as_lax.weakness = colax.iter().next().unwrap().weakness;
        assert!(colax.contains(&as_lax));
    }
}

#[test]
fn candidates_lax_at_a_projection_are_rejected() {
    let sketch = span_sketch();
    let (_, m) = span_models(&sketch).remove(0);
    let leg = sketch.carrier.one_cells(0, 1).next().unwrap();
    let loose = WeaknessPair { tight: Weakness::L, loose: Weakness::L };
    let all = enumerate_loose_transformations(&crate::fcat::FAmbient, &m, &m, loose, &TransformationOptions::default(), DEFAULT_BOUND).unwrap();
    let strict = enumerate_model_transformations(&m, &m, Weakness::L, DEFAULT_BOUND).unwrap();
    assert!(strict.len() < all.len());
    let bent: Vec<_> = all.iter().filter(|p| !p.cell(&leg).components.iter().all(|&c| m.obj(1).loose.is_identity(c))).collect();
    assert!(!bent.is_empty());
    let name = sketch.carrier.one_cell_name(&leg);
    for phi in bent {
        let mut candidate = phi.clone();
        candidate.weakness = WeaknessPair { tight: Weakness::S, loose: Weakness::L };
        let report = check_loose_natural(&crate::fcat::FAmbient, &candidate, &m, &m).unwrap();
        assert!(report.violations.iter().any(|v| v.kind == ViolationKind::NotStrictAtTight && v.at.contains(&name)));
    }
}

#[test]
fn sigma_over_a_point_is_precomposition() {
    let sketch = arrow_sketch();
    let sigma = sigma_map(&sketch, 0, DEFAULT_BOUND).unwrap();
    // value at d is 𝒮(d, d), a point; at s it is empty
    assert_eq!(sigma.values[1].cat.num_objects(), 1);
    assert_eq!(sigma.values[0].cat.num_objects(), 0);
    for (name, model) in arrow_models(&sketch) {
        for r in [RClass::Iso, RClass::Equivalence] {
            let orth = sigma.is_orthogonal(&model, r, DEFAULT_BOUND).unwrap();
            let check = check_model(&model, &sketch, r, 2, DEFAULT_BOUND).unwrap().is_model();
            assert_eq!(orth, check, "{name} {r:?}");
        }
    }
}

#[test]
fn sigma_of_a_product_cone_agrees_with_model_checking() {
    let sketch = span_sketch();
    let sigma = sigma_map(&sketch, 0, DEFAULT_BOUND).unwrap();
    assert_eq!(sigma.values[0].cat.num_objects(), 0);
    assert_eq!(sigma.values[1].cat.num_objects(), 1);
    for (name, model) in span_models(&sketch) {
        for r in [RClass::Iso, RClass::Equivalence] {
            let orth = sigma.is_orthogonal(&model, r, DEFAULT_BOUND).unwrap();
            let check = check_model(&model, &sketch, r, 2, DEFAULT_BOUND).unwrap().is_model();
            assert_eq!(orth, check, "{name} {r:?}");
        }
    }
}

#[test]
fn gluing_an_arrow_into_a_loop_is_not_finite() {
    let err = sigma_map(&loop_sketch(), 0, 50).unwrap_err();
    assert!(matches!(err, Error::FinitenessExceeded { bound: 50 }));
}

mod invariants {
    use proptest::prelude::*;

    use super::*;
    use crate::fixtures::chain_obj;
    use crate::fixtures::sketches::span_model;

    fn monotone(len: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(0..max, len).prop_map(|mut v| {
            v.sort();
            v
        })
    }

    fn chain_span() -> impl Strategy<Value = (usize, usize, usize, Vec<usize>, Vec<usize>)> {
        (1usize..=3, 1usize..=2, 1usize..=2)
            .prop_flat_map(|(p, a, b)| (Just(p), Just(a), Just(b), monotone(p, a), monotone(p, b)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn strict_transformations_are_lax_and_colax(x in chain_span(), y in chain_span()) {
            let sketch = span_sketch();
            let m = span_model(&sketch, [chain_obj(x.0), chain_obj(x.1), chain_obj(x.2)], x.3, x.4);
            let n = span_model(&sketch, [chain_obj(y.0), chain_obj(y.1), chain_obj(y.2)], y.3, y.4);
            let strict = enumerate_model_transformations(&m, &n, Weakness::S, DEFAULT_BOUND).unwrap();
            for w in [Weakness::L, Weakness::C] {
                let weak = enumerate_model_transformations(&m, &n, w, DEFAULT_BOUND).unwrap();
                prop_assert!(weak.len() >= strict.len());
                for s in &strict {
                    prop_assert!(weak.iter().any(|p| p.components == s.components && p.cells == s.cells));
                }
            }
        }

        #[test]
        fn restriction_along_identities_is_trivial(x in chain_span()) {
            let sketch = Sketch::bare(span_sketch().carrier);
            let m = span_model(&sketch, [chain_obj(x.0), chain_obj(x.1), chain_obj(x.2)], x.3, x.4);
            let id = identity_morphism(&sketch.carrier);
            let twice = id.then(&id).unwrap();
            let r = restrict_model(&id, &m, &sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
            prop_assert_eq!(&restrict_model(&id, &r, &sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap(), &m);
            prop_assert_eq!(restrict_model(&twice, &m, &sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap(), r);
        }

        #[test]
        fn products_of_chains_are_exactly_the_models(x in chain_span()) {
            let sketch = span_sketch();
            let m = span_model(&sketch, [chain_obj(x.0), chain_obj(x.1), chain_obj(x.2)], x.3.clone(), x.4.clone());
            let pairs: BTreeSet<(usize, usize)> = x.3.iter().copied().zip(x.4.iter().copied()).collect();
            // a chain is a product of chains only when one factor is a point and the other leg is bijective
            let bijective = pairs.len() == x.0 && pairs.len() == x.1 * x.2;
            let report = check_model(&m, &sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
            prop_assert_eq!(report.is_model(), bijective);
        }
    }
}
