//! Model checking: the comparison map `ρ : F(s) → {W, F·D}` of every cone.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fcat::{
    check_loose_natural, enumerate_loose_transformations, FAmbient, FObject, LooseMap, LooseTransformation,
    TransformationOptions, Weakness, WeaknessPair,
};
use crate::fincat::{functor_category, FiniteFunctor, FunctorCategory, MorId, NatTrans, ObjId};
use crate::limits::{test_fobjects, weighted_limit_end, WeightedLimit};

use super::{Model, RClass, Sketch, SketchCone};

/// The verdict for one cone.
#[derive(Clone, Debug, Serialize)]
pub struct ConeVerdict {
    pub cone: usize,
    pub holds: bool,
    pub reason: Option<String>,
    #[serde(skip)]
    pub rho: Option<LooseMap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelReport {
    pub class: RClass,
    pub cones: Vec<ConeVerdict>,
    /// For equivalences: the largest test object size used.
    pub certified_up_to: Option<usize>,
}

impl ModelReport {
    pub fn is_model(&self) -> bool {
        self.cones.iter().all(|c| c.holds)
    }

    pub fn failing(&self) -> Vec<usize> {
        self.cones.iter().filter(|c| !c.holds).map(|c| c.cone).collect()
    }
}

type PointKey = Vec<(Vec<ObjId>, Vec<MorId>)>;

fn point_key(p: &LooseTransformation<FAmbient>) -> PointKey {
    p.components.iter().map(|c| (c.functor.objects.clone(), c.functor.morphisms.clone())).collect()
}

/// The weighted limit `{W, F·D}` of a cone's image and the comparison map
/// from `F(apex)` into it.
pub fn comparison_map(f: &Model, cone: &SketchCone, bound: usize) -> Result<(WeightedLimit, LooseMap)> {
    let d = cone.diagram.then(f)?;
    let lim = weighted_limit_end(&cone.weight, &d, bound)?;
    let fs = f.obj(cone.apex);
    let index: BTreeMap<PointKey, ObjId> = lim.points.iter().enumerate().map(|(i, p)| (point_key(p), i)).collect();
    let shape = cone.shape();
    let nj = shape.num_objects();
    let legs: Vec<Vec<&LooseMap>> = (0..nj)
        .map(|j| (0..cone.weight.obj(j).loose.num_objects()).map(|w| f.one(&cone.leg(j, w))).collect())
        .collect();
    let objects = (0..fs.loose.num_objects())
        .map(|x| {
            let key: PointKey = (0..nj)
                .map(|j| {
                    let wj = &cone.weight.obj(j).loose;
                    let objs = legs[j].iter().map(|g| g.functor.obj(x)).collect();
                    let mors = (0..wj.num_morphisms()).map(|u| f.two(&cone.leg_cell(j, u)).components[x]).collect();
                    (objs, mors)
                })
                .collect();
            index
                .get(&key)
                .copied()
                .ok_or_else(|| Error::Invalid(format!("object {x} of the apex value does not induce a weighted cone")))
        })
        .collect::<Result<Vec<_>>>()?;
    let l = &lim.apex.loose;
    let ml = l.num_morphisms();
    let morphisms = (0..fs.loose.num_morphisms())
        .map(|m| {
            let (a, b) = (objects[fs.loose.src(m)], objects[fs.loose.dst(m)]);
            l.hom(a, b)
                .iter()
                .copied()
                .find(|&g| {
                    (0..nj).all(|j| {
                        let wj = &cone.weight.obj(j).loose;
                        (0..wj.num_objects())
                            .all(|w| lim.cone.legs[j].mor(wj.identity(w) * ml + g) == legs[j][w].functor.mor(m))
                    })
                })
                .ok_or_else(|| Error::Invalid(format!("morphism {m} of the apex value has no image in the limit")))
        })
        .collect::<Result<Vec<_>>>()?;
    let rho = FiniteFunctor::new(fs.loose.clone(), l.clone(), objects, morphisms)?;
    let rho = LooseMap::new(fs.clone(), lim.apex.clone(), rho)?;
    Ok((lim, rho))
}

/// `hom(K, X)` in 𝔽 together with its functor category keys.
fn hom_with_keys(k: &FObject, x: &FObject, bound: usize) -> Result<(FObject, FunctorCategory)> {
    let fc = functor_category(&k.loose, &x.loose, bound)?;
    let (km, xm) = (k.tight_mask(), x.tight_mask());
    let mask: Vec<bool> =
        fc.objects.iter().map(|g| (0..k.loose.num_objects()).all(|a| !km[a] || xm[g.obj(a)])).collect();
    Ok((FObject::from_mask(fc.cat.clone(), &mask), fc))
}

/// Whether `hom(K, ρ)` is an equivalence of F-objects; `None` when it is,
/// otherwise a description of the failure.
fn postcomposition_failure(rho: &LooseMap, k: &FObject, bound: usize) -> Result<Option<String>> {
    let (src, sfc) = hom_with_keys(k, &rho.src, bound)?;
    let (dst, dfc) = (hom_with_keys(k, &rho.dst, bound))?;
    let r = &rho.functor;
    let objects = sfc
        .objects
        .iter()
        .map(|g| dfc.object_of(&r.after(g)?).ok_or_else(|| Error::Invalid("postcomposite functor missing".into())))
        .collect::<Result<Vec<_>>>()?;
    let morphisms = sfc
        .morphisms
        .iter()
        .map(|t| {
            let img = NatTrans {
                source: r.after(&t.source)?,
                target: r.after(&t.target)?,
                components: t.components.iter().map(|&c| r.mor(c)).collect(),
            };
            dfc.morphism_of(&img).ok_or_else(|| Error::Invalid("postcomposite transformation missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let post = FiniteFunctor::new(src.loose.clone(), dst.loose.clone(), objects, morphisms)?;
    Ok(match LooseMap::new(src, dst, post)?.to_fmap() {
        None => Some("postcomposition does not preserve tight maps".into()),
        Some(m) if !m.is_equivalence() => Some("postcomposition is not an equivalence".into()),
        Some(_) => None,
    })
}

fn check_cone(f: &Model, i: usize, cone: &SketchCone, r: RClass, tests: &[FObject], bound: usize) -> Result<ConeVerdict> {
    let (_, rho) = comparison_map(f, cone, bound)?;
    let reason = match r {
        RClass::Iso => match rho.to_fmap() {
            None => Some("ρ does not preserve tight objects".into()),
            Some(m) if !m.is_isomorphism() => Some("ρ is not an isomorphism".into()),
            Some(_) => None,
        },
        RClass::Equivalence => {
            let mut reason = None;
            for k in tests {
                if let Some(why) = postcomposition_failure(&rho, k, bound)? {
                    reason = Some(format!("test object with {} objects: {why}", k.loose.num_objects()));
                    break;
                }
            }
            reason
        }
    };
    Ok(ConeVerdict { cone: i, holds: reason.is_none(), reason, rho: Some(rho) })
}

/// Checks every cone of `sketch` against `f`.
///
/// For `RClass::Equivalence` the comparison is tested hom-wise against the
/// test F-objects with at most `test_size` objects.
pub fn check_model(f: &Model, sketch: &Sketch, r: RClass, test_size: usize, bound: usize) -> Result<ModelReport> {
    if f.source != sketch.carrier {
        return Err(Error::ShapeMismatch("model is not defined on the sketch carrier".into()));
    }
    f.validate(&FAmbient)?;
    let tests = match r {
        RClass::Iso => Vec::new(),
        RClass::Equivalence => test_fobjects(test_size),
    };
    let cones = sketch
        .cones
        .iter()
        .enumerate()
        .map(|(i, c)| check_cone(f, i, c, r, &tests, bound))
        .collect::<Result<Vec<_>>>()?;
    let certified_up_to = (r == RClass::Equivalence).then_some(test_size);
    Ok(ModelReport { class: r, cones, certified_up_to })
}

/// `F·i`, revalidated as a model of `s`.
pub fn restrict_model(
    i: &crate::fcat::FFunctor<crate::fcat::FiniteFCategory>,
    f: &Model,
    s: &Sketch,
    r: RClass,
    test_size: usize,
    bound: usize,
) -> Result<Model> {
    let g = i.then(f)?;
    let report = check_model(&g, s, r, test_size, bound)?;
    if !report.is_model() {
        let c = &report.cones[report.failing()[0]];
        return Err(Error::ModelCheckFailed(format!(
            "cone {} of the restricted sketch: {}",
            c.cone,
            c.reason.clone().unwrap_or_default()
        )));
    }
    Ok(g)
}

/// `φ·i`: the components of `φ` at the images of `i`.
pub fn restrict_transformation(
    i: &crate::fcat::FFunctor<crate::fcat::FiniteFCategory>,
    phi: &LooseTransformation<FAmbient>,
) -> Result<LooseTransformation<FAmbient>> {
    let s = &i.source;
    let n = s.num_objects();
    let mut cells = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            cells.push(s.one_cells(x, y).map(|t| phi.cell(i.one(&t)).clone()).collect());
        }
    }
    Ok(LooseTransformation {
        weakness: phi.weakness,
        source: i.then(&phi.source)?,
        target: i.then(&phi.target)?,
        components: (0..n).map(|x| phi.components[*i.obj(x)].clone()).collect(),
        cells,
    })
}

/// All loose `(s, w)`-natural transformations between two models, each
/// revalidated.
pub fn enumerate_model_transformations(
    m: &Model,
    n: &Model,
    w: Weakness,
    bound: usize,
) -> Result<Vec<LooseTransformation<FAmbient>>> {
    let weakness = WeaknessPair { tight: Weakness::S, loose: w };
    let out = enumerate_loose_transformations(&FAmbient, m, n, weakness, &TransformationOptions::default(), bound)?;
    for phi in &out {
        let report = check_loose_natural(&FAmbient, phi, m, n)?;
        if !report.is_valid() {
            return Err(Error::InvalidTransformation(format!("enumerated candidate fails: {:?}", report.violations[0])));
        }
    }
    Ok(out)
}
