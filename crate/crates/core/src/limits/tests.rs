use std::collections::BTreeSet;

use super::*;
use crate::fcat::{FAmbient, FObject, TransformationOptions, TwoCategory, Weakness, WeaknessPair};
use crate::fincat::{FiniteFunctor, DEFAULT_BOUND};
use crate::fixtures::limits::{dotted_fixtures, marked_fixtures, weighted_fixtures};

fn pair(w: Weakness) -> WeaknessPair {
    WeaknessPair { tight: w, loose: w }
}

#[test]
fn dotted_limits_are_certified_and_match_the_oracle_apex() {
    let tests = test_fobjects(3);
    for fx in dotted_fixtures() {
        let lim = dotted_lax_limit(&fx.shape, &fx.functor, fx.weakness, DEFAULT_BOUND).unwrap();
        let options = fx.shape.options();
        let cert = certify_cone(&FAmbient, &lim.apex, &lim.cone, pair(fx.weakness), &options, &tests, DEFAULT_BOUND).unwrap();
        assert!(cert.holds(), "{}: {:?}", fx.name, cert.failures);
        let oracle = oracle_apex(&fx.functor, pair(fx.weakness), &options, DEFAULT_BOUND).unwrap();
        assert!(lim.apex.isomorphism_to(&oracle).is_some(), "{}: apex differs from the oracle", fx.name);
    }
}

#[test]
fn marked_limits_are_certified() {
    let tests = test_categories(3);
    for fx in marked_fixtures() {
        let lim = marked_lax_limit(&fx.shape, &fx.functor, DEFAULT_BOUND).unwrap();
        assert!(lim.apex.is_chordate(), "{}", fx.name);
        let options = fx.shape.as_dotted().options();
        let cert = certify_cone(&FAmbient, &lim.apex, &lim.cone, pair(Weakness::L), &options, &tests, DEFAULT_BOUND).unwrap();
        assert!(cert.holds(), "{}: {:?}", fx.name, cert.failures);
    }
}

#[test]
fn weighted_limits_are_certified_and_match_the_oracle_apex() {
    let tests = test_fobjects(3);
    for fx in weighted_fixtures() {
        let lim = weighted_limit_end(&fx.weight, &fx.diagram, DEFAULT_BOUND).unwrap();
        let cert = check_weighted_limit_universal(&lim.cone, &fx.weight, &fx.diagram, &tests, DEFAULT_BOUND).unwrap();
        assert!(cert.holds(), "{}: {:?}", fx.name, cert.failures);
        let oracle = weighted_oracle_apex(&fx.weight, &fx.diagram, DEFAULT_BOUND).unwrap();
        assert!(lim.apex.isomorphism_to(&oracle).is_some(), "{}: apex differs from the oracle", fx.name);
    }
}

#[test]
fn limit_over_a_point_is_the_value() {
    let fx = weighted_fixtures().into_iter().find(|f| f.name == "point").unwrap();
    let lim = weighted_limit_end(&fx.weight, &fx.diagram, DEFAULT_BOUND).unwrap();
    assert!(lim.apex.isomorphism_to(fx.diagram.obj(0)).is_some());
}

#[test]
fn binary_product_has_product_size() {
    let fx = weighted_fixtures().into_iter().find(|f| f.name == "product").unwrap();
    let lim = weighted_limit_end(&fx.weight, &fx.diagram, DEFAULT_BOUND).unwrap();
    let (a, b) = (fx.diagram.obj(0), fx.diagram.obj(1));
    assert_eq!(lim.apex.loose.num_objects(), a.loose.num_objects() * b.loose.num_objects());
    assert_eq!(lim.apex.tight.num_objects(), a.tight.num_objects() * b.tight.num_objects());
}

#[test]
fn perturbed_leg_is_rejected() {
    let fx = weighted_fixtures().into_iter().find(|f| f.name == "product").unwrap();
    let lim = weighted_limit_end(&fx.weight, &fx.diagram, DEFAULT_BOUND).unwrap();
    let mut cone = lim.cone.clone();
    let leg = &cone.legs[0];
    cone.legs[0] = FiniteFunctor::constant(&leg.source, &leg.target, 0);
    let cert = check_weighted_limit_universal(&cone, &fx.weight, &fx.diagram, &test_fobjects(2), DEFAULT_BOUND).unwrap();
    assert!(!cert.holds());
}

#[test]
fn product_with_swapped_projections_is_still_universal() {
    let fx = weighted_fixtures().into_iter().find(|f| f.name == "product").unwrap();
    let lim = weighted_limit_end(&fx.weight, &fx.diagram, DEFAULT_BOUND).unwrap();
    let shape = &fx.diagram.source;
    let swapped = crate::fixtures::poset_functor(shape, &[fx.diagram.obj(1).clone(), fx.diagram.obj(0).clone()], |_| vec![]);
    let cone = AmbientCone { apex: lim.apex.clone(), legs: vec![lim.cone.legs[1].clone(), lim.cone.legs[0].clone()] };
    let cert = check_weighted_limit_universal(&cone, &fx.weight, &swapped, &test_fobjects(3), DEFAULT_BOUND).unwrap();
    assert!(cert.holds(), "{:?}", cert.failures);
}

#[test]
fn fully_marked_limit_agrees_with_the_end() {
    for name in ["arrow-marked", "parallel-marked"] {
        let fx = marked_fixtures().into_iter().find(|f| f.name == name).unwrap();
        let marked = marked_lax_limit(&fx.shape, &fx.functor, DEFAULT_BOUND).unwrap();
        let shape = &fx.functor.source;
        let w = crate::fixtures::poset_functor(shape, &vec![FObject::terminal(); shape.num_objects()], |_| vec![0]);
        let end = weighted_limit_end(&w, &fx.functor, DEFAULT_BOUND).unwrap();
        assert!(marked.apex.isomorphism_to(&end.apex).is_some(), "{name}");
    }
}

#[test]
fn strict_dotted_limit_agrees_with_the_end() {
    let fx = dotted_fixtures().into_iter().find(|f| f.name == "cospan-strict").unwrap();
    let dotted = dotted_lax_limit(&fx.shape, &fx.functor, Weakness::L, DEFAULT_BOUND).unwrap();
    let shape = &fx.functor.source;
    let w = crate::fixtures::poset_functor(shape, &vec![FObject::terminal(); shape.num_objects()], |_| vec![0]);
    let end = weighted_limit_end(&w, &fx.functor, DEFAULT_BOUND).unwrap();
    assert!(dotted.apex.isomorphism_to(&end.apex).is_some());
}

#[test]
fn empty_shape_gives_the_terminal_apex() {
    let fx = dotted_fixtures().into_iter().find(|f| f.name == "empty").unwrap();
    let lim = dotted_lax_limit(&fx.shape, &fx.functor, fx.weakness, DEFAULT_BOUND).unwrap();
    assert!(lim.apex.isomorphism_to(&FObject::terminal()).is_some());
}

#[test]
fn constant_terminal_marked_limit_is_terminal() {
    let fx = marked_fixtures().into_iter().find(|f| f.name == "constant-terminal").unwrap();
    let lim = marked_lax_limit(&fx.shape, &fx.functor, DEFAULT_BOUND).unwrap();
    assert!(lim.apex.isomorphism_to(&FObject::terminal()).is_some());
}

#[test]
fn unmarked_arrow_gives_the_lax_comma() {
    // objects: (a, b, u(a) → b)
    let fx = marked_fixtures().into_iter().find(|f| f.name == "arrow-unmarked").unwrap();
    let lim = marked_lax_limit(&fx.shape, &fx.functor, DEFAULT_BOUND).unwrap();
    let (a, b) = (fx.functor.obj(0).loose.clone(), fx.functor.obj(1).loose.clone());
    let u = fx.functor.one(&fx.functor.source.find_one_cell(0, 1, "0≤1").unwrap()).functor.clone();
    let expected: usize = (0..a.num_objects()).map(|x| (0..b.num_objects()).filter(|&y| !b.hom(u.obj(x), y).is_empty()).count()).sum();
    assert_eq!(lim.apex.loose.num_objects(), expected);
}

#[test]
fn factorization_inverts_precomposition() {
    let tests = test_fobjects(3);
    for fx in dotted_fixtures() {
        let lim = dotted_lax_limit(&fx.shape, &fx.functor, fx.weakness, DEFAULT_BOUND).unwrap();
        let options = TransformationOptions { strict_at: fx.shape.marked.clone(), tight_at: BTreeSet::new() };
        for k in &tests {
            let dk = crate::fcat::FFunctor::constant(&fx.functor.source, &FAmbient, k);
            let cones = crate::fcat::enumerate_loose_transformations(&FAmbient, &dk, &fx.functor, pair(fx.weakness), &options, DEFAULT_BOUND).unwrap();
            for c in cones {
                let h = lim.factor(k, &c).unwrap();
                assert_eq!(precompose_cone(&FAmbient, &lim.cone, &h).unwrap(), c, "{}", fx.name);
                assert_eq!(FAmbient.mor_src(&h), *k);
            }
        }
    }
}

mod pointwise {
    use super::*;
    use crate::fcat::{FFunctor, LooseTransformation};
    use crate::fixtures::monoidal::{loose_model_morphisms, monoidal_fixture, ProductFragment};
    use crate::sketch::{
        check_model, restrict_model, restrict_transformation, tight_part_sketch, Model, RClass,
    };

    /// `ev_T · S` for the loose arrow `φ`, built independently of the limit code.
    fn evaluated(phi: &LooseTransformation<FAmbient>, t: usize) -> FFunctor<FAmbient> {
        let shape = loose_arrow_shape();
        let (m, n) = (phi.source.obj(t).clone(), phi.target.obj(t).clone());
        let value = |c: &crate::fcat::OneCell| match (shape.cat.is_unit(c), c.src) {
            (false, _) => phi.components[t].clone(),
            (true, 0) => FAmbient.identity(&m),
            (true, _) => FAmbient.identity(&n),
        };
        FFunctor::build(&shape.cat, &FAmbient, |d| if d == 0 { m.clone() } else { n.clone() }, value, |a| {
            FAmbient.identity_cell(&value(&shape.cat.cell_source(a)))
        })
        .unwrap()
    }

    fn terminal(m: &Model) -> Model {
        FFunctor::constant(&m.source, &FAmbient, &FObject::terminal())
    }

    #[test]
    fn limits_of_loose_model_morphisms_are_models() {
        let frag = ProductFragment::with_arity(2);
        for w in [Weakness::C, Weakness::L] {
            let pairs = loose_model_morphisms(&frag, w, DEFAULT_BOUND).unwrap();
            assert!(pairs.len() >= 5, "{w}");
            for (name, phi) in pairs {
                let lim = pointwise_model_limit(&phi, DEFAULT_BOUND).unwrap();
                assert_eq!(lim.weakness, w.bar());
                let report = check_model(&lim.functor, &frag.sketch, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
                assert!(report.is_model(), "{name}: {:?}", report.cones);
                for t in 0..frag.carrier().num_objects() {
                    let oracle = oracle_apex(&evaluated(&phi, t), pair(w.bar()), &lim.shape.options(), DEFAULT_BOUND).unwrap();
                    assert!(lim.functor.obj(t).isomorphism_to(&oracle).is_some(), "{name} at {t}");
                }
                let tests = [terminal(&phi.source), phi.source.clone()];
                let cert = certify_pointwise_limit(&lim, &tests, DEFAULT_BOUND).unwrap();
                assert!(cert.holds(), "{name}: {:?}", cert.failures);
            }
        }
    }

    #[test]
    fn restriction_to_the_tight_part_commutes_with_the_limit() {
        let frag = ProductFragment::with_arity(2);
        let (tau, incl) = tight_part_sketch(&frag.sketch, DEFAULT_BOUND).unwrap();
        for w in [Weakness::C, Weakness::L] {
            for (name, phi) in loose_model_morphisms(&frag, w, DEFAULT_BOUND).unwrap() {
                let lim = pointwise_model_limit(&phi, DEFAULT_BOUND).unwrap();
                let restricted = restrict_model(&incl, &lim.functor, &tau, RClass::Iso, 0, DEFAULT_BOUND).unwrap();
                let direct = pointwise_model_limit(&restrict_transformation(&incl, &phi).unwrap(), DEFAULT_BOUND).unwrap();
                assert_eq!(restricted, direct.functor, "{name}");
            }
        }
    }

    #[test]
    fn limit_of_an_identity_is_the_lax_arrow_limit() {
        let frag = ProductFragment::with_arity(2);
        let m = monoidal_fixture("join2").model(&frag);
        let id = LooseTransformation::identity(&FAmbient, &m, WeaknessPair::strict_on_tight(Weakness::C));
        let lim = pointwise_model_limit(&id, DEFAULT_BOUND).unwrap();
        // (a, b, a ≤ b) in the chain 2: three points
        assert_eq!(lim.functor.obj(1).loose.num_objects(), 3);
        for t in 0..frag.carrier().num_objects() {
            let oracle = oracle_apex(&evaluated(&id, t), pair(Weakness::L), &lim.shape.options(), DEFAULT_BOUND).unwrap();
            assert!(lim.functor.obj(t).isomorphism_to(&oracle).is_some());
        }
        let projections: Vec<_> = (0..3).map(|t| (lim.eta_a.components[t].clone(), lim.eta_b.components[t].clone())).collect();
        assert!(projections.iter().all(|(a, b)| a.src == b.src));
    }

    #[test]
    fn over_a_point_the_limit_is_one_dotted_limit() {
        let point = crate::fixtures::locally_discrete(crate::fincat::FiniteCategory::terminal(), |_| true);
        let m = crate::fixtures::poset_functor(&point, &[crate::fixtures::chain_obj(2)], |_| vec![0, 1]);
        let n = crate::fixtures::poset_functor(&point, &[crate::fixtures::chain_obj(3)], |_| vec![0, 1, 2]);
        let map = crate::fixtures::poset_map(&m.obj(0).loose, &n.obj(0).loose, &[0, 2]);
        let map = crate::fcat::LooseMap::new(m.obj(0).clone(), n.obj(0).clone(), map).unwrap();
        let phi = LooseTransformation {
            weakness: WeaknessPair::strict_on_tight(Weakness::C),
            source: m.clone(),
            target: n.clone(),
            components: vec![map.clone()],
            cells: vec![vec![FAmbient.identity_cell(&map)]],
        };
        let lim = pointwise_model_limit(&phi, DEFAULT_BOUND).unwrap();
        let direct = dotted_lax_limit(&loose_arrow_shape(), &evaluated(&phi, 0), Weakness::L, DEFAULT_BOUND).unwrap();
        assert_eq!(lim.functor.obj(0), &direct.apex);
    }

    #[test]
    fn a_tampered_limit_cell_is_not_universal() {
        let frag = ProductFragment::with_arity(2);
        let (_, phi) = loose_model_morphisms(&frag, Weakness::C, DEFAULT_BOUND).unwrap().remove(3);
        let mut lim = pointwise_model_limit(&phi, DEFAULT_BOUND).unwrap();
        // an identity in place of the universal 2-cell forgets the arrow of each point
        for t in 0..lim.values.len() {
            lim.eta_f.components[t] = FAmbient.identity_cell(&lim.eta_f.components[t].src);
        }
        let tests = [terminal(&phi.source)];
        let cert = certify_pointwise_limit(&lim, &tests, DEFAULT_BOUND).unwrap();
        assert!(!cert.holds());
    }
}
