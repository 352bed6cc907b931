use std::sync::Arc;

use super::*;
use crate::fincat::{FiniteCategory, FiniteFunctor, DEFAULT_BOUND};

fn chain(n: usize) -> Arc<FiniteCategory> {
    Arc::new(FiniteCategory::chain(n))
}

/// `0 → 1` with a loose arrow.
fn loose_arrow() -> Arc<FiniteFCategory> {
    let c = FiniteCategory::walking_arrow();
    let tight: Vec<bool> = (0..c.num_morphisms()).map(|f| c.is_identity(f)).collect();
    Arc::new(FiniteFCategory::locally_discrete(&c, &tight).unwrap())
}

/// One object, endo-1-cells `1` (tight) and `e` (loose, idempotent), one 2-cell `1 ⇒ e`.
fn idempotent() -> Arc<FiniteFCategory> {
    let hom = FiniteCategory::preorder_named(&["1", "e"], |a, b| a <= b);
    Arc::new(
        FiniteFCategory::new(
            vec!["*".into()],
            vec![HomCat { cat: Arc::new(hom), tight: vec![true, false] }],
            vec![0],
            |_, _, _, b, a| {
                let lvl = |m: usize| [(0, 0), (0, 1), (1, 1)][m];
                match (lvl(b).0.max(lvl(a).0), lvl(b).1.max(lvl(a).1)) {
                    (0, 0) => 0,
                    (0, 1) => 1,
                    _ => 2,
                }
            },
        )
        .unwrap(),
    )
}

/// Sends the arrow to `u : a → b`.
fn arrow_functor(s: &Arc<FiniteFCategory>, a: &FObject, b: &FObject, u: FiniteFunctor) -> FFunctor<FAmbient> {
    let map = LooseMap::new(a.clone(), b.clone(), u).unwrap();
    let objs = [a.clone(), b.clone()];
    FFunctor::build(
        s,
        &FAmbient,
        |x| objs[x].clone(),
        |f| if f.src == f.dst { FAmbient.identity(&objs[f.src]) } else { map.clone() },
        |c| {
            let f = s.cell_source(c);
            if f.src == f.dst {
                FAmbient.identity_cell(&FAmbient.identity(&objs[f.src]))
            } else {
                FAmbient.identity_cell(&map)
            }
        },
    )
    .unwrap()
}

/// Sends `e` to the constant functor at the top of a chain and `1 ⇒ e` to the unique cell.
fn closure_functor(s: &Arc<FiniteFCategory>, a: &FObject) -> FFunctor<FAmbient> {
    let top = a.loose.num_objects() - 1;
    let e = LooseMap::new(a.clone(), a.clone(), FiniteFunctor::constant(&a.loose, &a.loose, top)).unwrap();
    let id = FAmbient.identity(a);
    let eta = FAmbient.cells(&id, &e, DEFAULT_BOUND).unwrap().remove(0);
    FFunctor::build(
        s,
        &FAmbient,
        |_| a.clone(),
        |f| if f.idx == 0 { id.clone() } else { e.clone() },
        |c| match c.idx {
            0 => FAmbient.identity_cell(&id),
            1 => eta.clone(),
            _ => FAmbient.identity_cell(&e),
        },
    )
    .unwrap()
}

/// Every family of components and 2-components, filtered by the checker.
fn brute_force<B: Enumerable>(b: &B, m: &FFunctor<B>, n: &FFunctor<B>, w: WeaknessPair) -> Vec<LooseTransformation<B>> {
    let s = &m.source;
    let k = s.num_objects();
    let homs: Vec<Vec<B::Mor>> = (0..k).map(|x| b.hom(m.obj(x), n.obj(x), DEFAULT_BOUND).unwrap()).collect();
    let mut out = Vec::new();
    let mut comps: Vec<B::Mor> = Vec::new();
    fn objs<B: Enumerable>(
        b: &B,
        m: &FFunctor<B>,
        n: &FFunctor<B>,
        w: WeaknessPair,
        homs: &[Vec<B::Mor>],
        comps: &mut Vec<B::Mor>,
        out: &mut Vec<LooseTransformation<B>>,
    ) {
        if comps.len() == homs.len() {
            let s = &m.source;
            let ones = s.all_one_cells();
            let mut choices = Vec::new();
            for t in &ones {
                let (f, g) = super::transform::cell_type(b, m, n, comps, w, t).unwrap();
                choices.push(if b.mor_src(&f) == b.mor_src(&g) { b.cells(&f, &g, DEFAULT_BOUND).unwrap() } else { vec![] });
            }
            let total: usize = choices.iter().map(Vec::len).product();
            for mut code in 0..total {
                let k = s.num_objects();
                let mut cells: Vec<Vec<Option<B::Cell>>> =
                    (0..k * k).map(|h| vec![None; s.hom_cat(h / k, h % k).cat.num_objects()]).collect();
                for (t, ch) in ones.iter().zip(&choices) {
                    cells[t.src * k + t.dst][t.idx] = Some(ch[code % ch.len()].clone());
                    code /= ch.len();
                }
                let phi = LooseTransformation {
                    weakness: w,
                    source: m.clone(),
                    target: n.clone(),
                    components: comps.clone(),
                    cells: cells.into_iter().map(|r| r.into_iter().map(Option::unwrap).collect()).collect(),
                };
                if check_loose_natural(b, &phi, m, n).unwrap().is_valid() {
                    out.push(phi);
                }
            }
            return;
        }
        for c in &homs[comps.len()] {
            comps.push(c.clone());
            objs(b, m, n, w, homs, comps, out);
            comps.pop();
        }
    }
    objs(b, m, n, w, &homs, &mut comps, &mut out);
    out.sort();
    out
}

fn pairs() -> Vec<WeaknessPair> {
    let mut v = Vec::new();
    for t in Weakness::ALL {
        for l in Weakness::ALL {
            if let Ok(p) = WeaknessPair::new(t, l) {
                v.push(p);
            }
        }
    }
    v
}

fn arrow_fixtures() -> Vec<FFunctor<FAmbient>> {
    let s = loose_arrow();
    let a = FObject::chordate(chain(2));
    let b = FObject::from_mask(chain(2), &[true, false]);
    let mut out = Vec::new();
    for u in crate::fincat::enumerate_functors(&a.loose, &b.loose, DEFAULT_BOUND).unwrap() {
        out.push(arrow_functor(&s, &a, &b, u));
    }
    out
}

#[test]
fn enumeration_agrees_with_brute_force_on_arrow() {
    let fs = arrow_fixtures();
    for w in pairs() {
        for m in &fs {
            for n in &fs {
                let got =
                    enumerate_loose_transformations(&FAmbient, m, n, w, &TransformationOptions::default(), DEFAULT_BOUND)
                        .unwrap();
                assert_eq!(got, brute_force(&FAmbient, m, n, w), "weakness {w}");
            }
        }
    }
}

#[test]
fn enumeration_agrees_with_brute_force_on_idempotent() {
    let s = idempotent();
    let fs = [closure_functor(&s, &FObject::chordate(chain(2))), closure_functor(&s, &FObject::from_mask(chain(2), &[false, true]))];
    for w in pairs() {
        for m in &fs {
            for n in &fs {
                let got =
                    enumerate_loose_transformations(&FAmbient, m, n, w, &TransformationOptions::default(), DEFAULT_BOUND)
                        .unwrap();
                assert_eq!(got, brute_force(&FAmbient, m, n, w), "weakness {w}");
            }
        }
    }
}

#[test]
fn identity_is_valid_and_tight_for_every_weakness() {
    let s = idempotent();
    let m = closure_functor(&s, &FObject::chordate(chain(3)));
    for w in pairs() {
        let id = LooseTransformation::identity(&FAmbient, &m, w);
        let r = check_loose_natural(&FAmbient, &id, &m, &m).unwrap();
        assert!(r.is_valid() && r.tight);
    }
    let id = LooseTransformation::identity(&FAmbient, &m, WeaknessPair::strict_on_tight(Weakness::L));
    assert_eq!(classify_transformation(&FAmbient, &id).unwrap(), Level::Tight);
}

/// A direct check of F-naturality: tight components, commuting squares,
/// and naturality against every 2-cell.
fn is_f_natural_directly(m: &FFunctor<FAmbient>, n: &FFunctor<FAmbient>, comps: &[LooseMap]) -> bool {
    let s = &m.source;
    comps.iter().all(|c| c.is_tight())
        && s.all_one_cells().iter().all(|t| {
            FAmbient.compose(n.one(t), &comps[t.src]).unwrap() == FAmbient.compose(&comps[t.dst], m.one(t)).unwrap()
        })
        && s.all_two_cells().iter().all(|a| {
            FAmbient.whisker_right(n.two(a), &comps[a.src]).unwrap()
                == FAmbient.whisker_left(&comps[a.dst], m.two(a)).unwrap()
        })
}

#[test]
fn strict_pair_accepts_exactly_f_natural_families() {
    let s = idempotent();
    let fs = [closure_functor(&s, &FObject::chordate(chain(2))), closure_functor(&s, &FObject::from_mask(chain(3), &[true, false, true]))];
    let ss = WeaknessPair::new(Weakness::S, Weakness::S).unwrap();
    for m in &fs {
        for n in &fs {
            let got = enumerate_loose_transformations(&FAmbient, m, n, ss, &TransformationOptions::default(), DEFAULT_BOUND)
                .unwrap();
            let tight: Vec<_> = got.iter().filter(|p| p.components.iter().all(|c| c.is_tight())).collect();
            let direct: Vec<_> = FAmbient
                .hom(m.obj(0), n.obj(0), DEFAULT_BOUND)
                .unwrap()
                .into_iter()
                .filter(|c| is_f_natural_directly(m, n, std::slice::from_ref(c)))
                .collect();
            assert_eq!(tight.len(), direct.len());
            for p in tight {
                assert!(p.is_f_natural(&FAmbient));
            }
        }
    }
}

#[test]
fn pseudo_rejects_a_non_invertible_cell() {
    let fs = arrow_fixtures();
    let lax = WeaknessPair::strict_on_tight(Weakness::L);
    let mut found = false;
    for m in &fs {
        for n in &fs {
            for phi in enumerate_loose_transformations(&FAmbient, m, n, lax, &TransformationOptions::default(), DEFAULT_BOUND).unwrap() {
                if phi.cells.iter().flatten().any(|c| !FAmbient.is_invertible(c)) {
                    let pseudo = LooseTransformation { weakness: WeaknessPair::strict_on_tight(Weakness::P), ..phi.clone() };
                    let r = check_loose_natural(&FAmbient, &pseudo, m, n).unwrap();
                    assert!(r.violations.iter().any(|v| v.kind == ViolationKind::NotInvertible));
                    assert_eq!(classify_transformation(&FAmbient, &phi).unwrap(), Level::Loose);
                    found = true;
                }
            }
        }
    }
    assert!(found);
}

#[test]
fn fit_transformation_with_a_loose_component() {
    // the arrow fixtures into a target whose object 1 is loose
    let s = loose_arrow();
    let a = FObject::chordate(chain(2));
    let b = FObject::from_mask(chain(2), &[true, false]);
    let u = FiniteFunctor::identity(&a.loose);
    let m = arrow_functor(&s, &a, &b, u.clone());
    let ls = WeaknessPair::strict_on_tight(Weakness::L);
    let all = enumerate_loose_transformations(&FAmbient, &m, &m, ls, &TransformationOptions::default(), DEFAULT_BOUND).unwrap();
    let levels: Vec<Level> = all.iter().map(|p| classify_transformation(&FAmbient, p).unwrap()).collect();
    assert!(levels.contains(&Level::Tight));
    assert!(levels.contains(&Level::Fit));
}

#[test]
fn colax_check_agrees_with_lax_check_on_the_dual() {
    let s = idempotent();
    let s_co = Arc::new(s.co());
    let fs = [closure_functor(&s, &FObject::chordate(chain(2))), closure_functor(&s, &FObject::chordate(chain(3)))];
    let co = Co(FAmbient);
    for w in [Weakness::L, Weakness::C] {
        let pair = WeaknessPair::strict_on_tight(w);
        for m in &fs {
            for n in &fs {
                let (mc, nc) = (m.co(&s_co), n.co(&s_co));
                mc.validate(&co).unwrap();
                // every candidate family with arbitrary 2-components in either direction
                let mut candidates = brute_force(&FAmbient, m, n, pair);
                candidates.extend(brute_force(&co, &mc, &nc, pair.bar()).into_iter().map(|p| LooseTransformation {
                    weakness: pair,
                    source: m.clone(),
                    target: n.clone(),
                    components: p.components,
                    cells: p.cells,
                }));
                for phi in candidates {
                    let direct = check_loose_natural(&FAmbient, &phi, m, n).unwrap().is_valid();
                    let dual = co_transformation(&phi, &mc, &nc);
                    let via_dual = check_loose_natural(&co, &dual, &mc, &nc).unwrap().is_valid();
                    assert_eq!(direct, via_dual);
                }
            }
        }
    }
}

#[test]
fn modifications_between_lax_transformations() {
    let fs = arrow_fixtures();
    let lax = WeaknessPair::strict_on_tight(Weakness::L);
    for m in &fs {
        for n in &fs {
            let ts = enumerate_loose_transformations(&FAmbient, m, n, lax, &TransformationOptions::default(), DEFAULT_BOUND).unwrap();
            for phi in &ts {
                let ms = enumerate_modifications(&FAmbient, phi, phi, DEFAULT_BOUND).unwrap();
                assert!(ms.contains(&Modification::identity(&FAmbient, phi)));
                for psi in &ts {
                    for g in enumerate_modifications(&FAmbient, phi, psi, DEFAULT_BOUND).unwrap() {
                        assert!(check_modification(&FAmbient, &g).unwrap().is_empty());
                    }
                }
            }
        }
    }
}

#[test]
fn materialized_ambient_matches_hom_categories() {
    let objs = vec![
        FObject::chordate(chain(2)),
        FObject::from_mask(chain(2), &[true, false]),
        FObject::loose_only(chain(1)),
    ];
    let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let m = materialize(&FAmbient, &objs, &names, DEFAULT_BOUND).unwrap();
    for x in 0..3 {
        for y in 0..3 {
            let h = hom_ambient_f(&objs[x], &objs[y], DEFAULT_BOUND).unwrap();
            let local = m.category.hom_cat(x, y);
            assert_eq!(local.cat.num_objects(), h.loose.num_objects());
            assert_eq!(local.cat.num_morphisms(), h.loose.num_morphisms());
            assert_eq!(local.tight.iter().filter(|&&t| t).count(), h.tight.num_objects());
        }
    }
    m.inclusion().validate(&FAmbient).unwrap();
}

#[test]
fn functor_category_materializes() {
    let s = loose_arrow();
    let fs = arrow_fixtures();
    let w = WeaknessPair::new(Weakness::S, Weakness::L).unwrap();
    let fun = FunCategory::new(FAmbient, s.clone(), w);
    let names: Vec<String> = (0..fs.len()).map(|i| format!("F{i}")).collect();
    let m = materialize(&fun, &fs, &names, DEFAULT_BOUND).unwrap();
    for (i, x) in fs.iter().enumerate() {
        for (j, y) in fs.iter().enumerate() {
            let all = enumerate_loose_transformations(&FAmbient, x, y, w, &TransformationOptions::default(), DEFAULT_BOUND)
                .unwrap();
            assert_eq!(m.category.hom_cat(i, j).cat.num_objects(), all.len());
        }
    }
    m.inclusion().validate(&fun).unwrap();
}
