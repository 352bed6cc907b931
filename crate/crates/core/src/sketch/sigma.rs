//! The map `σ : W ∗ 𝒮(D-, –) → 𝒮(s, –)` of copresheaves on a sketch carrier.
//!
//! Everything here forgets tightness: the carrier is read as a 2-category and
//! models as 2-functors into Cat. The value of the weighted colimit at `a` is
//! the coend `∫^j W(j) × 𝒮(D j, a)`, glued with a bound on word length.
//! Precomposition with `σ` turns the Yoneda element map `F(s) → Nat(𝒮(s, –), F)`
//! into `F(s) → Nat(W ∗ 𝒮(D-, –), F)`, which is the comparison map of the cone.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fcat::{OneCell, TwoCell};
use crate::fincat::{
    build_category, check_naturality, glue_categories, search_functors, enumerate_nat_trans, FiniteCategory,
    FiniteFunctor, FunctorSearch, Glued, NatTrans, Place,
};

use super::{Model, RClass, Sketch, SketchCone};

/// `σ` for one cone, with the copresheaf structure of its source.
#[derive(Clone, Debug)]
pub struct SigmaMap {
    pub cone: usize,
    pub apex: usize,
    /// The source copresheaf at each carrier object.
    pub values: Vec<Glued>,
    /// Its action on 1-cells, by hom `a * n + b` then 1-cell index.
    pub one_actions: Vec<Vec<FiniteFunctor>>,
    /// Its action on 2-cells, by hom then 2-cell index.
    pub two_actions: Vec<Vec<NatTrans>>,
    /// `σ_a : values[a] → 𝒮(apex, a)`.
    pub components: Vec<FiniteFunctor>,
}

fn product(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> Arc<FiniteCategory> {
    Arc::new(FiniteCategory::product(a, b))
}

/// The coend at `a`, one component per shape object.
fn coend_at(sketch: &Sketch, cone: &SketchCone, a: usize, bound: usize) -> Result<Glued> {
    let s = &sketch.carrier;
    let shape = cone.shape();
    let wl = |j: usize| &cone.weight.obj(j).loose;
    let hom = |j: usize| &s.hom_cat(*cone.diagram.obj(j), a).cat;
    let comps: Vec<Arc<FiniteCategory>> = (0..shape.num_objects()).map(|j| product(wl(j), hom(j))).collect();
    let obj = |j: usize, w: usize, g: usize| (j, w * hom(j).num_objects() + g);
    let mor = |j: usize, u: usize, b: usize| (j, u * hom(j).num_morphisms() + b);
    let mut orel = Vec::new();
    let mut mrel = Vec::new();
    for t in shape.all_one_cells() {
        let (j, k) = (t.src, t.dst);
        let dt = cone.diagram.one(&t);
        let wt = &cone.weight.one(&t).functor;
        for w in 0..wl(j).num_objects() {
            for g in 0..hom(k).num_objects() {
                let g1 = OneCell { src: *cone.diagram.obj(k), dst: a, idx: g };
                orel.push((obj(k, wt.obj(w), g), obj(j, w, s.comp1(&g1, dt).idx)));
            }
        }
        for u in 0..wl(j).num_morphisms() {
            for b in 0..hom(k).num_morphisms() {
                let b2 = TwoCell { src: *cone.diagram.obj(k), dst: a, idx: b };
                mrel.push((mor(k, wt.mor(u), b), mor(j, u, s.hcell(&b2, &s.id_cell(dt)).idx)));
            }
        }
    }
    for al in shape.all_two_cells() {
        let (j, k) = (al.src, al.dst);
        let da = cone.diagram.two(&al);
        let wa = cone.weight.two(&al);
        for w in 0..wl(j).num_objects() {
            for g in 0..hom(k).num_objects() {
                let g1 = OneCell { src: *cone.diagram.obj(k), dst: a, idx: g };
                let lhs = mor(k, wa.components[w], hom(k).identity(g));
                let rhs = mor(j, wl(j).identity(w), s.hcell(&s.id_cell(&g1), da).idx);
                mrel.push((lhs, rhs));
            }
        }
    }
    glue_categories(&comps, &orel, &mrel, bound)
}

/// Splits a product place into its weight and hom parts.
fn split(cone: &SketchCone, sketch: &Sketch, a: usize, p: Place, objects: bool) -> (usize, usize, usize) {
    let j = p.0;
    let h = &sketch.carrier.hom_cat(*cone.diagram.obj(j), a).cat;
    let n = if objects { h.num_objects() } else { h.num_morphisms() };
    (j, p.1 / n, p.1 % n)
}

/// Computes `σ` for cone `i`; fails with `FinitenessExceeded` when a
/// colimit value does not close up within `bound` words.
pub fn sigma_map(sketch: &Sketch, i: usize, bound: usize) -> Result<SigmaMap> {
    let cone = sketch.cones.get(i).ok_or_else(|| Error::Invalid(format!("no cone {i}")))?;
    let s = &sketch.carrier;
    let n = s.num_objects();
    let values = (0..n).map(|a| coend_at(sketch, cone, a, bound)).collect::<Result<Vec<_>>>()?;
    let components = (0..n)
        .map(|a| {
            let target = s.hom_cat(cone.apex, a).cat.clone();
            values[a].functor_to(
                &target,
                |p| {
                    let (j, w, g) = split(cone, sketch, a, p, true);
                    let g1 = OneCell { src: *cone.diagram.obj(j), dst: a, idx: g };
                    s.comp1(&g1, &cone.leg(j, w)).idx
                },
                |p| {
                    let (j, u, b) = split(cone, sketch, a, p, false);
                    let b2 = TwoCell { src: *cone.diagram.obj(j), dst: a, idx: b };
                    s.hcell(&b2, &cone.leg_cell(j, u)).idx
                },
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let mut one_actions = Vec::with_capacity(n * n);
    let mut two_actions = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let row = s
                .one_cells(a, b)
                .map(|h| {
                    values[a].functor_to(
                        &values[b].cat,
                        |p| {
                            let (j, w, g) = split(cone, sketch, a, p, true);
                            let g1 = OneCell { src: *cone.diagram.obj(j), dst: a, idx: g };
                            let hg = s.comp1(&h, &g1).idx;
                            let nb = s.hom_cat(*cone.diagram.obj(j), b).cat.num_objects();
                            values[b].object_of[j][w * nb + hg]
                        },
                        |p| {
                            let (j, u, c) = split(cone, sketch, a, p, false);
                            let c2 = TwoCell { src: *cone.diagram.obj(j), dst: a, idx: c };
                            let hc = s.hcell(&s.id_cell(&h), &c2).idx;
                            let mb = s.hom_cat(*cone.diagram.obj(j), b).cat.num_morphisms();
                            values[b].morphism_of[j][u * mb + hc]
                        },
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            one_actions.push(row);
        }
    }
    for a in 0..n {
        for b in 0..n {
            let row = s
                .two_cells(a, b)
                .map(|th| {
                    let (h, h2) = (s.cell_source(&th), s.cell_target(&th));
                    let (src, dst) = (&one_actions[a * n + b][h.idx], &one_actions[a * n + b][h2.idx]);
                    let components = (0..values[a].cat.num_objects())
                        .map(|o| {
                            let (j, w, g) = split(cone, sketch, a, values[a].object_place(o), true);
                            let g1 = OneCell { src: *cone.diagram.obj(j), dst: a, idx: g };
                            let c = s.hcell(&th, &s.id_cell(&g1)).idx;
                            let wj = &cone.weight.obj(j).loose;
                            let mb = s.hom_cat(*cone.diagram.obj(j), b).cat.num_morphisms();
                            values[b].morphism_of[j][wj.identity(w) * mb + c]
                        })
                        .collect();
                    let t = NatTrans { source: src.clone(), target: dst.clone(), components };
                    if !check_naturality(&t)? {
                        return Err(Error::Invalid("2-cell action is not natural".into()));
                    }
                    Ok(t)
                })
                .collect::<Result<Vec<_>>>()?;
            two_actions.push(row);
        }
    }
    Ok(SigmaMap { cone: i, apex: cone.apex, values, one_actions, two_actions, components })
}

type Family = Vec<FiniteFunctor>;
type ModFamily = Vec<NatTrans>;

impl SigmaMap {
    fn natural(&self, f: &Model, tau: &[FiniteFunctor], upto: usize) -> bool {
        let s = &f.source;
        let n = s.num_objects();
        for a in 0..upto {
            for b in 0..upto {
                for h in s.one_cells(a, b) {
                    let fh = &f.one(&h).functor;
                    let ph = &self.one_actions[a * n + b][h.idx];
                    if fh.after(&tau[a]).ok() != tau[b].after(ph).ok() {
                        return false;
                    }
                }
                for th in s.two_cells(a, b) {
                    let fth = f.two(&th);
                    let pth = &self.two_actions[a * n + b][th.idx];
                    let ok = (0..self.values[a].cat.num_objects())
                        .all(|o| fth.components[tau[a].obj(o)] == tau[b].mor(pth.components[o]));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All 2-natural transformations from the source copresheaf to `f`.
    fn transformations(&self, f: &Model, bound: usize) -> Result<Vec<Family>> {
        let n = f.source.num_objects();
        let candidates = (0..n)
            .map(|a| search_functors(&self.values[a].cat, &f.obj(a).loose, &FunctorSearch::default(), bound))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        self.extend(f, &candidates, &mut current, &mut out, bound)?;
        Ok(out)
    }

    fn extend(
        &self,
        f: &Model,
        candidates: &[Vec<FiniteFunctor>],
        current: &mut Vec<FiniteFunctor>,
        out: &mut Vec<Family>,
        bound: usize,
    ) -> Result<()> {
        let k = current.len();
        if k == candidates.len() {
            out.push(current.clone());
            if out.len() > bound {
                return Err(Error::bound("transformations out of the colimit", bound));
            }
            return Ok(());
        }
        for c in &candidates[k] {
            current.push(c.clone());
            if self.natural(f, current, k + 1) {
                self.extend(f, candidates, current, out, bound)?;
            }
            current.pop();
        }
        Ok(())
    }

    fn modifications(&self, f: &Model, t: &Family, u: &Family, bound: usize) -> Result<Vec<ModFamily>> {
        let s = &f.source;
        let n = s.num_objects();
        let per_a = (0..n).map(|a| enumerate_nat_trans(&t[a], &u[a], &|_, _| true, bound)).collect::<Result<Vec<_>>>()?;
        let mut out: Vec<ModFamily> = vec![Vec::new()];
        for (a, options) in per_a.into_iter().enumerate() {
            let mut next = Vec::new();
            for prefix in &out {
                for m in &options {
                    let mut p = prefix.clone();
                    p.push(m.clone());
                    let ok = (0..=a).all(|x| {
                        (0..=a).all(|y| {
                            s.one_cells(x, y).all(|h| {
                                let fh = &f.one(&h).functor;
                                let ph = &self.one_actions[x * n + y][h.idx];
                                (0..self.values[x].cat.num_objects())
                                    .all(|o| fh.mor(p[x].components[o]) == p[y].components[ph.obj(o)])
                            })
                        })
                    });
                    if ok {
                        next.push(p);
                    }
                }
            }
            if next.len() > bound {
                return Err(Error::bound("modifications out of the colimit", bound));
            }
            out = next;
        }
        Ok(out)
    }

    /// `Nat(W ∗ 𝒮(D-, –), F)` and the precomposition map from `F(apex)`.
    pub fn precomposition(&self, f: &Model, bound: usize) -> Result<(Arc<FiniteCategory>, FiniteFunctor)> {
        let n = f.source.num_objects();
        let mut taus = self.transformations(f, bound)?;
        taus.sort();
        let mut mods = Vec::new();
        for (i, t) in taus.iter().enumerate() {
            for (j, u) in taus.iter().enumerate() {
                for m in self.modifications(f, t, u, bound)? {
                    mods.push((m, i, j));
                }
            }
        }
        let built = build_category(
            taus.clone(),
            mods,
            |x| taus[x].iter().map(NatTrans::identity).collect(),
            |g: &ModFamily, h: &ModFamily| g.iter().zip(h).map(|(a, b)| a.vcompose(b).expect("composable")).collect(),
            |_| "τ".into(),
            |_| "m".into(),
        )?;
        let fs = &f.obj(self.apex).loose;
        let leg = |a: usize, o: usize| OneCell { src: self.apex, dst: a, idx: self.components[a].obj(o) };
        let image = |x: usize| -> Result<Family> {
            (0..n)
                .map(|a| {
                    let v = &self.values[a].cat;
                    let objects = (0..v.num_objects()).map(|o| f.one(&leg(a, o)).functor.obj(x)).collect();
                    let morphisms = (0..v.num_morphisms())
                        .map(|q| {
                            let c = TwoCell { src: self.apex, dst: a, idx: self.components[a].mor(q) };
                            f.two(&c).components[x]
                        })
                        .collect();
                    FiniteFunctor::new(v.clone(), f.obj(a).loose.clone(), objects, morphisms)
                })
                .collect()
        };
        let images = (0..fs.num_objects()).map(image).collect::<Result<Vec<_>>>()?;
        let objects = images
            .iter()
            .map(|t| built.object_of(t).ok_or_else(|| Error::Invalid("Yoneda image is not natural".into())))
            .collect::<Result<Vec<_>>>()?;
        let morphisms = (0..fs.num_morphisms())
            .map(|m| {
                let (x, y) = (fs.src(m), fs.dst(m));
                let fam: ModFamily = (0..n)
                    .map(|a| NatTrans {
                        source: images[x][a].clone(),
                        target: images[y][a].clone(),
                        components: (0..self.values[a].cat.num_objects())
                            .map(|o| f.one(&leg(a, o)).functor.mor(m))
                            .collect(),
                    })
                    .collect();
                built.morphism_of(&fam).ok_or_else(|| Error::Invalid("Yoneda image is not a modification".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let phi = FiniteFunctor::new(fs.clone(), built.cat.clone(), objects, morphisms)?;
        Ok((built.cat, phi))
    }

    /// `F` is orthogonal to `σ` with respect to `r`.
    pub fn is_orthogonal(&self, f: &Model, r: RClass, bound: usize) -> Result<bool> {
        let (_, phi) = self.precomposition(f, bound)?;
        Ok(match r {
            RClass::Iso => phi.is_isomorphism(),
            RClass::Equivalence => phi.is_equivalence(),
        })
    }
}
