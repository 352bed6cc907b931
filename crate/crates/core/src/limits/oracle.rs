//! Brute-force certification of cone-shaped universal properties.
//!
//! A cone over `S : 𝔻 → B` with apex `L` is a transformation `Δ(L) ⇒ S`.
//! It is universal against a test object `K` when precomposition
//! `B(K, L) → Cones(K)` is a bijection on 1-cells and, for every pair of
//! 1-cells, on 2-cells. Tight 1-cells must correspond exactly to cones whose
//! components are tight at the required objects.

use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::fcat::{
    check_loose_natural, enumerate_loose_transformations, enumerate_modifications, Enumerable, FAmbient, FFunctor,
    FObject, FiniteFCategory, LooseTransformation, Modification, TransformationOptions, TwoCategory, WeaknessPair,
};
use crate::fincat::{build_category, FiniteCategory};

/// Outcome of a universal-property check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub tests: usize,
    pub one_cells_checked: usize,
    pub two_cells_checked: usize,
    pub failures: Vec<String>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }
}

/// Test objects of 𝔽 on at most three objects.
pub fn test_fobjects(max_objects: usize) -> Vec<FObject> {
    let c = |cat: FiniteCategory| Arc::new(cat);
    let all = vec![
        FObject::chordate(c(FiniteCategory::empty())),
        FObject::terminal(),
        FObject::loose_only(c(FiniteCategory::terminal())),
        FObject::chordate(c(FiniteCategory::walking_arrow())),
        FObject::from_mask(c(FiniteCategory::walking_arrow()), &[true, false]),
        FObject::from_mask(c(FiniteCategory::walking_arrow()), &[false, true]),
        FObject::chordate(c(FiniteCategory::discrete(2))),
        FObject::chordate(c(FiniteCategory::chaotic(2))),
        FObject::chordate(c(FiniteCategory::chain(3))),
    ];
    all.into_iter().filter(|k| k.loose.num_objects() <= max_objects).collect()
}

/// Chordate test objects, for limits in Cat.
pub fn test_categories(max_objects: usize) -> Vec<FObject> {
    test_fobjects(max_objects).into_iter().filter(|k| k.is_chordate()).collect()
}

/// `cone · h` for `h : K → L`.
pub fn precompose_cone<B: Enumerable>(
    b: &B,
    cone: &LooseTransformation<B>,
    h: &B::Mor,
) -> Result<LooseTransformation<B>> {
    let k = b.mor_src(h);
    let source = FFunctor::constant(&cone.source.source, b, &k);
    let components = cone.components.iter().map(|c| b.compose(c, h)).collect::<Result<_>>()?;
    let cells = cone
        .cells
        .iter()
        .map(|row| row.iter().map(|c| b.whisker_right(c, h)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok(LooseTransformation { weakness: cone.weakness, source, target: cone.target.clone(), components, cells })
}

/// The modification `cone * c` for a 2-cell `c : h ⇒ h′`.
pub fn precompose_cell<B: Enumerable>(
    b: &B,
    cone: &LooseTransformation<B>,
    c: &B::Cell,
) -> Result<Modification<B>> {
    Ok(Modification {
        source: precompose_cone(b, cone, &b.cell_src(c))?,
        target: precompose_cone(b, cone, &b.cell_dst(c))?,
        components: cone.components.iter().map(|p| b.whisker_left(p, c)).collect::<Result<_>>()?,
    })
}

/// Certifies `cone : Δ(apex) ⇒ S` against every object in `tests`.
///
/// Cones are transformations of weakness `weakness` with identity
/// 2-components at `options.strict_at`; a 1-cell into the apex must be tight
/// exactly when its cone is tight at `options.tight_at`.
pub fn certify_cone<B: Enumerable>(
    b: &B,
    apex: &B::Obj,
    cone: &LooseTransformation<B>,
    weakness: WeaknessPair,
    options: &TransformationOptions,
    tests: &[B::Obj],
    bound: usize,
) -> Result<Certificate> {
    let mut cert = Certificate::default();
    let s = &cone.target;
    let shape: &Arc<FiniteFCategory> = &s.source;
    let delta = FFunctor::constant(shape, b, apex);
    if cone.source != delta {
        cert.fail("cone source is not the constant functor at the apex".into());
        return Ok(cert);
    }
    let report = check_loose_natural(b, cone, &delta, s)?;
    if !report.violations.is_empty() {
        cert.fail(format!("cone is not a valid transformation: {:?}", report.violations[0]));
        return Ok(cert);
    }
    let loose_options = TransformationOptions { strict_at: options.strict_at.clone(), tight_at: Default::default() };
    if !cone_respects(b, cone, &loose_options) {
        cert.fail("cone is not strict at the marked 1-cells".into());
        return Ok(cert);
    }
    for k in tests {
        cert.tests += 1;
        let dk = FFunctor::constant(shape, b, k);
        let mut cones = enumerate_loose_transformations(b, &dk, s, weakness, &loose_options, bound)?;
        cones.sort();
        let maps = b.hom(k, apex, bound)?;
        let mut images = maps.iter().map(|h| precompose_cone(b, cone, h)).collect::<Result<Vec<_>>>()?;
        cert.one_cells_checked += maps.len();
        for (h, img) in maps.iter().zip(&images) {
            let tight_cone = options.tight_at.iter().all(|&d| b.is_tight(&img.components[d]));
            if b.is_tight(h) != tight_cone {
                cert.fail(format!("test {k:?}: tightness of {h:?} differs from that of its cone"));
            }
        }
        let pairs: Vec<(B::Mor, LooseTransformation<B>)> = maps.iter().cloned().zip(images.iter().cloned()).collect();
        images.sort();
        let distinct = {
            let mut d = images.clone();
            d.dedup();
            d.len()
        };
        if distinct != images.len() {
            cert.fail(format!("test {k:?}: two 1-cells induce the same cone"));
        }
        if images != cones {
            cert.fail(format!("test {k:?}: {} cones but {} induced by 1-cells into the apex", cones.len(), distinct));
            continue;
        }
        for (h, ph) in &pairs {
            for (g, pg) in &pairs {
                let cells = b.cells(h, g, bound)?;
                let mut mods = enumerate_modifications(b, ph, pg, bound)?;
                mods.sort();
                let mut induced = cells.iter().map(|c| precompose_cell(b, cone, c)).collect::<Result<Vec<_>>>()?;
                cert.two_cells_checked += cells.len();
                induced.sort();
                let n = induced.len();
                induced.dedup();
                if induced.len() != n || induced != mods {
                    cert.fail(format!(
                        "test {k:?}: {} modifications but {} 2-cells between the induced 1-cells",
                        mods.len(),
                        n
                    ));
                }
            }
        }
    }
    Ok(cert)
}

fn cone_respects<B: Enumerable>(b: &B, cone: &LooseTransformation<B>, options: &TransformationOptions) -> bool {
    options.strict_at.iter().all(|t| b.is_identity_cell(cone.cell(t)))
        && options.tight_at.iter().all(|&d| b.is_tight(&cone.components[d]))
}

/// The category of cones out of the terminal F-object, built by exhaustive
/// enumeration; tight cones are those tight at `options.tight_at`.
pub fn oracle_apex(
    s: &FFunctor<FAmbient>,
    weakness: WeaknessPair,
    options: &TransformationOptions,
    bound: usize,
) -> Result<FObject> {
    let b = &FAmbient;
    let one = FFunctor::constant(&s.source, b, &FObject::terminal());
    let loose_options = TransformationOptions { strict_at: options.strict_at.clone(), tight_at: Default::default() };
    let mut cones = enumerate_loose_transformations(b, &one, s, weakness, &loose_options, bound)?;
    cones.sort();
    let mut cells = Vec::new();
    for (i, p) in cones.iter().enumerate() {
        for (j, q) in cones.iter().enumerate() {
            for m in enumerate_modifications(b, p, q, bound)? {
                cells.push((m, i, j));
            }
        }
    }
    let ids: Vec<Modification<FAmbient>> = cones.iter().map(|p| Modification::identity(b, p)).collect();
    let built = build_category(
        cones.clone(),
        cells,
        |x| ids[x].clone(),
        |g, f| f.then(b, g).expect("composable by construction"),
        |p| format!("{:?}", p.components.iter().map(|c| c.functor.objects[0]).collect::<Vec<_>>()),
        |m| format!("{:?}", m.components.iter().map(|c| c.components[0]).collect::<Vec<_>>()),
    )?;
    let tight: Vec<bool> =
        cones.iter().map(|p| options.tight_at.iter().all(|&d| b.is_tight(&p.components[d]))).collect();
    Ok(FObject::from_mask(built.cat.clone(), &tight))
}
