//! Limits of a loose morphism `φ : M ⇝ N` between F-functors `𝕋 → 𝔽`,
//! computed one object of `𝕋` at a time.
//!
//! `φ` is a loose `(s, w)`-transformation and the limit is the dotted
//! `w̄`-limit over two dotted objects joined by a loose arrow. At each `T`
//! the value `L_T` is the dotted limit of `φ_T`; a point is `(a, b, x)` with
//! `x : φ_T a → b` for a lax limit and `x : b → φ_T a` for a colax one.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fcat::{
    check_loose_natural, check_modification, enumerate_loose_transformations, enumerate_modifications, AmbCell,
    FAmbient, FFunctor, FiniteFCategory, LooseMap, LooseTransformation, Modification, OneCell, TransformationOptions,
    TwoCategory, TwoCell, Weakness, WeaknessPair,
};
use crate::fincat::{FiniteCategory, FiniteFunctor, MorId, ObjId};

use super::dotted::{dotted_lax_limit, ConeKey, ConeMorphism, DottedFCategory, DottedLimit};
use super::oracle::Certificate;

/// `L` with its universal cone `(η_Ȧ, η_Ḃ, η_f)`.
#[derive(Clone, Debug)]
pub struct PointwiseLimit {
    /// Weakness of the limit cones, `w̄`.
    pub weakness: Weakness,
    pub transformation: LooseTransformation<FAmbient>,
    pub shape: DottedFCategory,
    /// `L_T` for every object `T`.
    pub values: Vec<DottedLimit>,
    pub functor: FFunctor<FAmbient>,
    pub eta_a: LooseTransformation<FAmbient>,
    pub eta_b: LooseTransformation<FAmbient>,
    /// `φ·η_Ȧ ⇛ η_Ḃ` for a lax limit, `η_Ḃ ⇛ φ·η_Ȧ` for a colax one.
    pub eta_f: Modification<FAmbient>,
}

/// Two dotted objects and one loose arrow between them.
pub fn loose_arrow_shape() -> DottedFCategory {
    let c = FiniteCategory::walking_arrow();
    let tight: Vec<bool> = (0..c.num_morphisms()).map(|m| c.is_identity(m)).collect();
    let cat = Arc::new(FiniteFCategory::locally_discrete(&c, &tight).expect("walking arrow"));
    DottedFCategory::new(cat, BTreeSet::new(), BTreeSet::from([0, 1])).expect("both objects dotted")
}

/// Position of the loose arrow among the 1-cells of the shape.
fn arrow_cell(shape: &DottedFCategory) -> usize {
    shape.cat.all_one_cells().iter().position(|c| !shape.cat.is_unit(c)).expect("one loose arrow")
}

impl PointwiseLimit {
    pub fn is_lax(&self) -> bool {
        !self.weakness.is_colax()
    }
}

/// Builds `L` from `φ` pointwise.
pub fn pointwise_model_limit(phi: &LooseTransformation<FAmbient>, bound: usize) -> Result<PointwiseLimit> {
    if phi.weakness.tight != Weakness::S {
        return Err(Error::InvalidTransformation(format!("expected an (s, w) transformation, got {}", phi.weakness)));
    }
    let report = check_loose_natural(&FAmbient, phi, &phi.source, &phi.target)?;
    if !report.is_valid() {
        return Err(Error::InvalidTransformation(format!("{:?}", report.violations)));
    }
    let (m, n) = (&phi.source, &phi.target);
    let t_cat = &m.source;
    let w = phi.weakness.loose;
    let limit_weakness = w.bar();
    let lax_limit = !limit_weakness.is_colax();
    let shape = loose_arrow_shape();
    let fpos = arrow_cell(&shape);

    let values = (0..t_cat.num_objects())
        .map(|x| {
            let ev = FFunctor::build(
                &shape.cat,
                &FAmbient,
                |d| if d == 0 { m.obj(x).clone() } else { n.obj(x).clone() },
                |c| if shape.cat.is_unit(c) { FAmbient.identity(if c.src == 0 { m.obj(x) } else { n.obj(x) }) } else { phi.components[x].clone() },
                |a| {
                    let c = shape.cat.cell_source(a);
                    let g = if shape.cat.is_unit(&c) {
                        FAmbient.identity(if c.src == 0 { m.obj(x) } else { n.obj(x) })
                    } else {
                        phi.components[x].clone()
                    };
                    FAmbient.identity_cell(&g)
                },
            )?;
            dotted_lax_limit(&shape, &ev, limit_weakness, bound)
        })
        .collect::<Result<Vec<_>>>()?;

    // the arrow of L_t(a, b, x) in N T′
    let moved_arrow = |t: &OneCell, p: &ConeKey| -> Result<MorId> {
        let nt = n.one(t);
        let target = &n.obj(t.dst).loose;
        let x = nt.functor.mor(p.arrows[fpos]);
        let c = phi.cell(t).components[p.objects[0]];
        if lax_limit {
            // need φ_{T′}(M t a) → N t (φ_T a)
            let c = if w.is_colax() {
                c
            } else {
                target.inverse(c).ok_or_else(|| Error::InvalidTransformation("pseudo component is not invertible".into()))?
            };
            Ok(target.comp(x, c))
        } else {
            Ok(target.comp(c, x))
        }
    };
    let move_point = |t: &OneCell, p: &ConeKey| -> Result<ConeKey> {
        let mut arrows = p.arrows.clone();
        for (i, c) in shape.cat.all_one_cells().iter().enumerate() {
            arrows[i] = if i == fpos {
                moved_arrow(t, p)?
            } else {
                let obj = if c.src == 0 { m.obj(t.dst) } else { n.obj(t.dst) };
                obj.loose.identity(if c.src == 0 { m.one(t).functor.obj(p.objects[0]) } else { n.one(t).functor.obj(p.objects[1]) })
            };
        }
        Ok(ConeKey { objects: vec![m.one(t).functor.obj(p.objects[0]), n.one(t).functor.obj(p.objects[1])], arrows })
    };

    let mut one_cells: BTreeMap<OneCell, LooseMap> = BTreeMap::new();
    for t in t_cat.all_one_cells() {
        let (src, dst) = (&values[t.src], &values[t.dst]);
        let objects = src.points.iter().map(|p| dst.point_index(&move_point(&t, p)?)).collect::<Result<Vec<_>>>()?;
        let morphisms = src
            .morphisms
            .iter()
            .map(|u| {
                dst.morphism_index(&ConeMorphism {
                    src: objects[u.src],
                    dst: objects[u.dst],
                    components: vec![m.one(&t).functor.mor(u.components[0]), n.one(&t).functor.mor(u.components[1])],
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let functor = FiniteFunctor::new(src.apex.loose.clone(), dst.apex.loose.clone(), objects, morphisms)?;
        one_cells.insert(t, LooseMap::new(src.apex.clone(), dst.apex.clone(), functor)?);
    }
    let two_cell = |a: &TwoCell| -> Result<AmbCell> {
        let (t, u) = (t_cat.cell_source(a), t_cat.cell_target(a));
        let (lt, lu) = (&one_cells[&t], &one_cells[&u]);
        let (ma, na) = (m.two(a), n.two(a));
        let components = values[a.src]
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                values[a.dst].morphism_index(&ConeMorphism {
                    src: lt.functor.obj(i),
                    dst: lu.functor.obj(i),
                    components: vec![ma.components[p.objects[0]], na.components[p.objects[1]]],
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AmbCell { src: lt.clone(), dst: lu.clone(), components })
    };
    let mut two_cells = BTreeMap::new();
    for a in t_cat.all_two_cells() {
        two_cells.insert(a, two_cell(&a)?);
    }
    let functor = FFunctor::build(t_cat, &FAmbient, |x| values[x].apex.clone(), |t| one_cells[t].clone(), |a| two_cells[a].clone())?;

    let pair = WeaknessPair::strict_on_tight(w);
    let projection = |target: &FFunctor<FAmbient>, d: usize| -> Result<LooseTransformation<FAmbient>> {
        let components: Vec<LooseMap> = values.iter().map(|v| v.cone.components[d].clone()).collect();
        let k = t_cat.num_objects();
        let mut cells = Vec::with_capacity(k * k);
        for x in 0..k {
            for y in 0..k {
                let row = t_cat
                    .one_cells(x, y)
                    .map(|t| Ok(FAmbient.identity_cell(&FAmbient.compose(target.one(&t), &components[x])?)))
                    .collect::<Result<Vec<_>>>()?;
                cells.push(row);
            }
        }
        Ok(LooseTransformation { weakness: pair, source: functor.clone(), target: target.clone(), components, cells })
    };
    let eta_a = projection(m, 0)?;
    let eta_b = projection(n, 1)?;
    let via = eta_a.then(&FAmbient, phi)?;
    let components: Vec<AmbCell> = values
        .iter()
        .enumerate()
        .map(|(x, v)| {
            let arrows = v.points.iter().map(|p| p.arrows[fpos]).collect();
            let (s, d) = (via.components[x].clone(), eta_b.components[x].clone());
            let (src, dst) = if lax_limit { (s, d) } else { (d, s) };
            AmbCell { src, dst, components: arrows }
        })
        .collect();
    let eta_f = if lax_limit {
        Modification { source: via, target: eta_b.clone(), components }
    } else {
        Modification { source: eta_b.clone(), target: via, components }
    };

    for eta in [&eta_a, &eta_b] {
        let r = check_loose_natural(&FAmbient, eta, &eta.source, &eta.target)?;
        if !r.is_valid() {
            return Err(Error::InvalidTransformation(format!("limit projection: {:?}", r.violations)));
        }
    }
    let failures = check_modification(&FAmbient, &eta_f)?;
    if !failures.is_empty() {
        return Err(Error::InvalidTransformation(format!("limit 2-cell fails at {failures:?}")));
    }
    Ok(PointwiseLimit { weakness: limit_weakness, transformation: phi.clone(), shape, values, functor, eta_a, eta_b, eta_f })
}

/// A cone `(α, β, θ)` from a test functor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Cone {
    alpha: LooseTransformation<FAmbient>,
    beta: LooseTransformation<FAmbient>,
    theta: Vec<AmbCell>,
}

/// Brute-force universal property of `L` against the given test functors:
/// `(s, w)`-transformations `K ⇒ L` correspond to cones, tight ones to cones
/// with tight legs, and modifications to compatible pairs of modifications.
pub fn certify_pointwise_limit(lim: &PointwiseLimit, tests: &[FFunctor<FAmbient>], bound: usize) -> Result<Certificate> {
    let b = &FAmbient;
    let phi = &lim.transformation;
    let pair = phi.weakness;
    let options = TransformationOptions::default();
    let mut cert = Certificate::default();
    for k in tests {
        cert.tests += 1;
        let psis = enumerate_loose_transformations(b, k, &lim.functor, pair, &options, bound)?;
        let alphas = enumerate_loose_transformations(b, k, &phi.source, pair, &options, bound)?;
        let betas = enumerate_loose_transformations(b, k, &phi.target, pair, &options, bound)?;
        let mut cones = BTreeSet::new();
        for alpha in &alphas {
            let via = alpha.then(b, phi)?;
            for beta in &betas {
                let mods = if lim.is_lax() {
                    enumerate_modifications(b, &via, beta, bound)?
                } else {
                    enumerate_modifications(b, beta, &via, bound)?
                };
                for g in mods {
                    cones.insert(Cone { alpha: alpha.clone(), beta: beta.clone(), theta: g.components });
                }
            }
        }
        let image = |psi: &LooseTransformation<FAmbient>| -> Result<Cone> {
            let theta = lim
                .eta_f
                .components
                .iter()
                .zip(&psi.components)
                .map(|(c, p)| b.whisker_right(c, p))
                .collect::<Result<Vec<_>>>()?;
            Ok(Cone { alpha: psi.then(b, &lim.eta_a)?, beta: psi.then(b, &lim.eta_b)?, theta })
        };
        let images = psis.iter().map(|p| image(p)).collect::<Result<Vec<_>>>()?;
        cert.one_cells_checked += psis.len();
        let distinct: BTreeSet<&Cone> = images.iter().collect();
        if distinct.len() != images.len() {
            cert.fail(format!("test {}: two morphisms induce the same cone", cert.tests - 1));
        }
        if distinct.into_iter().cloned().collect::<BTreeSet<_>>() != cones {
            cert.fail(format!("test {}: {} morphisms but {} cones", cert.tests - 1, psis.len(), cones.len()));
            continue;
        }
        for (psi, c) in psis.iter().zip(&images) {
            if psi.is_f_natural(b) != (c.alpha.is_f_natural(b) && c.beta.is_f_natural(b)) {
                cert.fail(format!("test {}: tightness of a factorization differs from its cone", cert.tests - 1));
            }
        }
        for (p, cp) in psis.iter().zip(&images) {
            for (q, cq) in psis.iter().zip(&images) {
                let mods = enumerate_modifications(b, p, q, bound)?;
                cert.two_cells_checked += mods.len();
                let mut induced = BTreeSet::new();
                for g in &mods {
                    let ga = g.hthen(b, &Modification::identity(b, &lim.eta_a))?.components;
                    let gb = g.hthen(b, &Modification::identity(b, &lim.eta_b))?.components;
                    induced.insert((ga, gb));
                }
                let mut expected = BTreeSet::new();
                for ga in enumerate_modifications(b, &cp.alpha, &cq.alpha, bound)? {
                    for gb in enumerate_modifications(b, &cp.beta, &cq.beta, bound)? {
                        if compatible(lim, cp, cq, &ga.components, &gb.components)? {
                            expected.insert((ga.components.clone(), gb.components));
                        }
                    }
                }
                if induced.len() != mods.len() || induced != expected {
                    cert.fail(format!(
                        "test {}: {} modifications but {} compatible pairs",
                        cert.tests - 1,
                        mods.len(),
                        expected.len()
                    ));
                }
            }
        }
    }
    Ok(cert)
}

fn compatible(lim: &PointwiseLimit, c: &Cone, d: &Cone, ga: &[AmbCell], gb: &[AmbCell]) -> Result<bool> {
    let b = &FAmbient;
    for x in 0..ga.len() {
        let phi_ga = b.whisker_left(&lim.transformation.components[x], &ga[x])?;
        let ok = if lim.is_lax() {
            b.vcompose(&gb[x], &c.theta[x])? == b.vcompose(&d.theta[x], &phi_ga)?
        } else {
            b.vcompose(&phi_ga, &c.theta[x])? == b.vcompose(&d.theta[x], &gb[x])?
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sizes of each `L_T`, all points and tight ones.
#[derive(Clone, Debug, Serialize)]
pub struct PointwiseSummary {
    pub weakness: Weakness,
    pub objects: Vec<usize>,
    pub tight_objects: Vec<usize>,
}

impl PointwiseLimit {
    pub fn summary(&self) -> PointwiseSummary {
        PointwiseSummary {
            weakness: self.weakness,
            objects: self.values.iter().map(|v| v.apex.loose.num_objects()).collect(),
            tight_objects: self.values.iter().map(|v| v.apex.tight.num_objects()).collect(),
        }
    }

    /// The point `(a, b, x)` behind object `i` of `L_T`.
    pub fn point(&self, t: ObjId, i: ObjId) -> &ConeKey {
        &self.values[t].points[i]
    }
}
