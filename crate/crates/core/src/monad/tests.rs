use crate::error::Error;
use crate::fcat::{
    check_loose_natural, materialize, AmbCell, Enumerable, FAmbient, FObject, LooseTransformation, TwoCategory, Weakness,
    WeaknessPair,
};
use crate::fincat::FiniteCategory;
use crate::fixtures::cat;
use crate::fixtures::monads::{
    adjunctions, galois_adjunction, identity_adjunction, identity_monad_fixture, idempotent_monad_fixture,
    monad_fixtures, pair_carrier, MonadFixture,
};

use super::*;

const BOUND: usize = 4096;
const WEAK: [Weakness; 4] = [Weakness::S, Weakness::P, Weakness::L, Weakness::C];

fn object(f: &MonadFixture, name: &str) -> usize {
    f.carrier.category.find_object(name).unwrap()
}

#[test]
fn fixture_monads_satisfy_the_laws() {
    for f in monad_fixtures(Weakness::L) {
        assert_eq!(check_monad(&f.monad).unwrap(), vec![], "{}", f.name);
    }
}

#[test]
fn a_wrong_multiplication_is_reported_where_it_fails() {
    let mut f = idempotent_monad_fixture(Weakness::L);
    let x = object(&f, "id2");
    let c = f.monad.carrier.clone();
    let wrong = c.one_cells(x, x).find(|g| *g != c.unit(x)).unwrap();
    f.monad.mu[x] = wrong;
    let violations = check_monad(&f.monad).unwrap();
    assert!(violations.iter().any(|v| v.law == "left unit" && v.at == "id2"), "{violations:?}");
    assert!(violations.iter().all(|v| v.at != "id1"));
}

#[test]
fn idempotent_algebras_sit_over_the_invertible_arrows() {
    let f = idempotent_monad_fixture(Weakness::L);
    let objects: Vec<&str> = enumerate_algebras(&f.monad).iter().map(|a| f.carrier.category.object_name(a.object)).collect();
    assert_eq!(objects, vec!["id1", "id2"]);
}

#[test]
fn identity_monad_algebras_are_the_objects() {
    let f = identity_monad_fixture(Weakness::L);
    let algebras = enumerate_algebras(&f.monad);
    assert_eq!(algebras.len(), f.carrier.objects.len());
    assert!(algebras.iter().all(|a| a.structure == f.monad.carrier.unit(a.object)));
}

#[test]
fn identity_morphisms_are_w_morphisms() {
    for f in monad_fixtures(Weakness::L) {
        for a in enumerate_algebras(&f.monad) {
            for w in WEAK {
                let cat = AlgebraCategory { monad: f.monad.clone(), weakness: w };
                assert_eq!(check_w_morphism(&f.monad, &cat.identity(&a)).unwrap(), Vec::<String>::new());
            }
        }
    }
}

#[test]
fn composition_is_unital_and_associative() {
    for f in monad_fixtures(Weakness::L) {
        for w in WEAK {
            let cat = AlgebraCategory { monad: f.monad.clone(), weakness: w };
            let algebras = enumerate_algebras(&f.monad);
            let mut all = Vec::new();
            for a in &algebras {
                for b in &algebras {
                    all.extend(cat.hom(a, b, BOUND).unwrap());
                }
            }
            for g in &all {
                assert_eq!(compose_w_morphisms(&f.monad, g, &cat.identity(&g.source)).unwrap(), *g);
                assert_eq!(compose_w_morphisms(&f.monad, &cat.identity(&g.target), g).unwrap(), *g);
                for h in all.iter().filter(|h| h.target == g.source) {
                    let gh = compose_w_morphisms(&f.monad, g, h).unwrap();
                    assert!(check_w_morphism(&f.monad, &gh).unwrap().is_empty());
                    for k in all.iter().filter(|k| k.target == h.source) {
                        let left = compose_w_morphisms(&f.monad, &gh, k).unwrap();
                        let right = compose_w_morphisms(&f.monad, g, &compose_w_morphisms(&f.monad, h, k).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}

#[test]
fn strict_composites_are_strict() {
    let f = idempotent_monad_fixture(Weakness::S);
    let cat = AlgebraCategory { monad: f.monad.clone(), weakness: Weakness::S };
    let algebras = enumerate_algebras(&f.monad);
    for a in &algebras {
        for b in &algebras {
            for g in cat.hom(a, b, BOUND).unwrap() {
                for h in algebras.iter().flat_map(|z| cat.hom(z, a, BOUND).unwrap()) {
                    assert!(cat.is_tight(&cat.compose(&g, &h).unwrap()));
                }
            }
        }
    }
}

#[test]
fn a_mistyped_structure_cell_is_rejected() {
    let f = idempotent_monad_fixture(Weakness::L);
    let c = f.monad.carrier.clone();
    let algebras = enumerate_algebras(&f.monad);
    let (a, b) = (algebras[0], algebras[1]);
    let maps: Vec<_> = c.one_cells(a.object, b.object).collect();
    let m = WTMorphism { weakness: Weakness::L, source: a, target: b, map: maps[0], cell: c.id_cell(&c.unit(a.object)) };
    assert_eq!(check_w_morphism(&f.monad, &m).unwrap(), vec!["structure cell type".to_string()]);
}

#[test]
fn algebras_form_a_finite_f_category() {
    for w in WEAK {
        for f in monad_fixtures(w) {
            let cat = AlgebraCategory { monad: f.monad.clone(), weakness: w };
            let algebras = enumerate_algebras(&f.monad);
            let names: Vec<String> = (0..algebras.len()).map(|i| format!("A{i}")).collect();
            let alg = materialize(&cat, &algebras, &names, BOUND).unwrap();
            alg.category.validate().unwrap();
            for g in alg.category.all_one_cells() {
                let key = alg.one_cell_key(&g);
                let strict = f.monad.carrier.is_tight_cell(&key.map) && f.monad.carrier.is_identity_cell(&key.cell);
                assert_eq!(alg.category.is_tight_cell(&g), strict);
            }
        }
    }
}

fn mate_oracle(d: &AdjunctionData, bar: &LooseTransformation<FAmbient>) {
    // Every value is a preorder, so a 2-cell is determined by its boundary:
    // check the boundary pointwise from the monotone maps alone.
    let (m, n) = (&d.alpha.source, &d.alpha.target);
    let s = &m.source;
    for t in s.all_one_cells() {
        let (bx, by) = (&d.beta[t.src], &d.beta[t.dst]);
        let (mt, nt) = (&m.one(&t).functor, &n.one(&t).functor);
        let cell = bar.cell(&t);
        let target = &m.obj(t.dst).loose;
        for v in 0..n.obj(t.src).loose.num_objects() {
            let left = mt.obj(bx.functor.obj(v));
            let right = by.functor.obj(nt.obj(v));
            let (from, to) = if d.weakness.is_colax() { (right, left) } else { (left, right) };
            assert_eq!(cell.src.functor.obj(v), from);
            assert_eq!(cell.dst.functor.obj(v), to);
            assert!(!target.hom(from, to).is_empty());
        }
    }
}

#[test]
fn galois_mates_match_the_pointwise_oracle() {
    for w in [Weakness::L, Weakness::C] {
        let d = galois_adjunction(w);
        let bar = mate_transformation(&d).unwrap();
        assert_eq!(bar.weakness, WeaknessPair::strict_on_tight(w));
        mate_oracle(&d, &bar);
        let s = &d.alpha.source.source;
        let (u, v) = (s.find_one_cell(0, 1, "u").unwrap(), s.find_one_cell(0, 1, "v").unwrap());
        assert!(FAmbient.is_identity_cell(bar.cell(&u)));
        assert!(!FAmbient.is_identity_cell(bar.cell(&v)), "{w}: the mate at the loose arrow should be proper");
    }
}

#[test]
fn mates_are_natural_and_strict_at_tight_cells() {
    for (name, d) in adjunctions() {
        let bar = mate_transformation(&d).unwrap();
        let report = check_loose_natural(&FAmbient, &bar, &d.alpha.target, &d.alpha.source).unwrap();
        assert!(report.is_valid(), "{name}");
        let s = &d.alpha.source.source;
        for t in s.all_one_cells().into_iter().filter(|t| s.is_tight_cell(t)) {
            assert!(FAmbient.is_identity_cell(bar.cell(&t)), "{name}");
        }
        mate_oracle(&d, &bar);
    }
}

#[test]
fn the_identity_adjunction_has_the_identity_mate() {
    let m = galois_adjunction(Weakness::L).alpha.source;
    for w in [Weakness::L, Weakness::C, Weakness::P] {
        let bar = mate_transformation(&identity_adjunction(&m, w)).unwrap();
        assert_eq!(bar, LooseTransformation::identity(&FAmbient, &m, WeaknessPair::strict_on_tight(w)));
    }
}

#[test]
fn mates_lift_the_adjunction() {
    for (name, d) in adjunctions() {
        let bar = mate_transformation(&d).unwrap();
        assert_eq!(check_doctrinal_lift(&d, &bar).unwrap(), Vec::<String>::new(), "{name}");
    }
}

#[test]
fn a_perturbed_mate_does_not_lift() {
    let d = galois_adjunction(Weakness::L);
    let mut bar = mate_transformation(&d).unwrap();
    let s = d.alpha.source.source.clone();
    let v = s.find_one_cell(0, 1, "v").unwrap();
    let k = s.num_objects();
    let cell = bar.cells[v.src * k + v.dst][v.idx].clone();
    bar.cells[v.src * k + v.dst][v.idx] = FAmbient.identity_cell(&cell.src);
    assert!(!check_doctrinal_lift(&d, &bar).unwrap().is_empty());
}

#[test]
fn a_twisted_unit_is_not_an_adjunction() {
    let z2 = cat(FiniteCategory::monoid(&["1", "s"], |a, b| a ^ b).unwrap());
    let obj = FObject::chordate(z2.clone());
    let carrier = pair_carrier();
    let m = poset_like_model(&carrier, &obj);
    let mut d = identity_adjunction(&m, Weakness::L);
    let id = FAmbient.identity(&obj);
    d.unit[0] = AmbCell { src: id.clone(), dst: id, components: vec![1] };
    match mate_transformation(&d) {
        Err(Error::NotAnAdjunction(at)) => assert!(at.ends_with("at 0"), "{at}"),
        other => panic!("expected NotAnAdjunction, got {other:?}"),
    }
}

fn poset_like_model(carrier: &std::sync::Arc<crate::fcat::FiniteFCategory>, obj: &FObject) -> crate::sketch::Model {
    // Every 1-cell goes to the identity, so 2-cells go to identity cells.
    crate::fcat::FFunctor::build(
        carrier,
        &FAmbient,
        |_| obj.clone(),
        |_| FAmbient.identity(obj),
        |_| FAmbient.identity_cell(&FAmbient.identity(obj)),
    )
    .unwrap()
}

#[test]
fn identity_monad_witnesses_models_as_algebras() {
    for w in [Weakness::L, Weakness::C] {
        let f = identity_monad_fixture(w);
        let r = equivalence_witness(&f.models, &f.inclusion, &f.carrier, &f.monad, &f.correspondence, w, BOUND).unwrap();
        assert!(r.certified, "{w}: {:?}", r.first_failure);
    }
}

#[test]
fn idempotent_monad_hom_counts_agree() {
    for w in [Weakness::L, Weakness::C] {
        let f = idempotent_monad_fixture(w);
        let r = equivalence_witness(&f.models, &f.inclusion, &f.carrier, &f.monad, &f.correspondence, w, BOUND).unwrap();
        assert!(r.certified, "{w}: {:?}", r.first_failure);
        assert_eq!(r.algebras, 2);
        assert!(r.comparisons.iter().any(|h| h.level == "loose" && h.models > 1));
        assert!(r.comparisons.iter().all(|h| h.models == h.algebras));
    }
}

#[test]
fn a_misassigned_algebra_breaks_commutation() {
    let mut f = idempotent_monad_fixture(Weakness::L);
    f.correspondence.algebras.swap(0, 1);
    let r = equivalence_witness(&f.models, &f.inclusion, &f.carrier, &f.monad, &f.correspondence, Weakness::L, BOUND);
    assert!(matches!(r, Err(Error::CommutationFailure(_))), "{r:?}");
}

#[test]
fn a_forgotten_model_leaves_an_algebra_unreached() {
    let mut f = idempotent_monad_fixture(Weakness::L);
    f.models.pop();
    f.correspondence.algebras.pop();
    let r = equivalence_witness(&f.models, &f.inclusion, &f.carrier, &f.monad, &f.correspondence, Weakness::L, BOUND).unwrap();
    assert!(!r.certified);
    assert_eq!(r.missed_algebras.len(), 1);
}
