//! Instance-level comparison of models of a sketch with algebras of a monad
//! on their restrictions.
//!
//! Hom-sets are compared as multisets of underlying data in the carrier of
//! the monad: a bijection commuting with restriction on one side and the
//! forgetful functor on the other exists exactly when these agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fcat::{
    enumerate_loose_transformations, enumerate_modifications, AmbCell, Enumerable, FAmbient, FFunctor,
    FiniteFCategory, FunCategory, LooseTransformation, Materialized, OneCell, TransformationOptions, TwoCategory,
    Weakness, WeaknessPair,
};
use crate::sketch::{restrict_transformation, Model};

use super::{check_algebra, enumerate_algebras, AlgebraCategory, EnhancedMonad, TAlgebra};

/// The algebra assigned to each model, in model order.
#[derive(Clone, Debug)]
pub struct Correspondence {
    pub algebras: Vec<TAlgebra>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomComparison {
    pub source: String,
    pub target: String,
    pub level: &'static str,
    pub models: usize,
    pub algebras: usize,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub weakness: Weakness,
    pub models: usize,
    pub algebras: usize,
    pub comparisons: Vec<HomComparison>,
    /// Algebras not isomorphic, by a strict T-isomorphism, to any assigned one.
    pub missed_algebras: Vec<String>,
    pub first_failure: Option<String>,
    pub certified: bool,
}

type CellKey = (OneCell, OneCell, Vec<AmbCell>);

fn locate(carrier: &Materialized<FunCategory<FAmbient>>, x: usize, y: usize, r: &LooseTransformation<FAmbient>) -> Option<OneCell> {
    let n = carrier.objects.len();
    carrier.keys.one_cells[x * n + y]
        .iter()
        .position(|k| k.components == r.components && k.cells == r.cells)
        .map(|idx| OneCell { src: x, dst: y, idx })
}

fn record<K: Ord>(out: &mut Vec<HomComparison>, source: &str, target: &str, level: &'static str, mut left: Vec<K>, mut right: Vec<K>) {
    left.sort();
    right.sort();
    out.push(HomComparison {
        source: source.into(),
        target: target.into(),
        level,
        models: left.len(),
        algebras: right.len(),
        matched: left == right,
    });
}

/// Compares `Mod_{s,w}` on `models` with `T-Alg_{s,w}` through `correspondence`.
///
/// `inclusion` is the functor along which models restrict, and `carrier`
/// materializes the restricted models; it must be the carrier of `monad`.
#[allow(clippy::too_many_arguments)]
pub fn equivalence_witness(
    models: &[(String, Model)],
    inclusion: &FFunctor<FiniteFCategory>,
    carrier: &Materialized<FunCategory<FAmbient>>,
    monad: &EnhancedMonad,
    correspondence: &Correspondence,
    weakness: Weakness,
    bound: usize,
) -> Result<EquivalenceReport> {
    if carrier.category.as_ref() != monad.carrier.as_ref() {
        return Err(Error::ShapeMismatch("the monad does not live on the materialized carrier".into()));
    }
    if correspondence.algebras.len() != models.len() {
        return Err(Error::ShapeMismatch("one algebra per model required".into()));
    }
    for ((name, m), a) in models.iter().zip(&correspondence.algebras) {
        let restricted = inclusion.then(m)?;
        let slot = carrier.objects.iter().position(|o| *o == restricted);
        if slot != Some(a.object) {
            return Err(Error::CommutationFailure(format!(
                "the algebra assigned to {name} does not lie over its restriction"
            )));
        }
        if let Some(v) = check_algebra(monad, a).first() {
            return Err(Error::Invalid(format!("the algebra assigned to {name} fails {v}")));
        }
    }
    let c = carrier.category.as_ref();
    let pair = WeaknessPair::strict_on_tight(weakness);
    let algebras = AlgebraCategory { monad: monad.clone(), weakness };
    let mut comparisons = Vec::new();
    for (j, (nj, mj)) in models.iter().enumerate() {
        for (k, (nk, mk)) in models.iter().enumerate() {
            let (aj, ak) = (&correspondence.algebras[j], &correspondence.algebras[k]);
            let loose = enumerate_loose_transformations(&FAmbient, mj, mk, pair, &TransformationOptions::default(), bound)?;
            let mut under = Vec::with_capacity(loose.len());
            for phi in &loose {
                let r = restrict_transformation(inclusion, phi)?;
                let key = locate(carrier, aj.object, ak.object, &r).ok_or_else(|| {
                    Error::CommutationFailure(format!("a restricted transformation {nj} ⇒ {nk} is missing from the carrier"))
                })?;
                under.push(key);
            }
            let morphisms = algebras.hom(aj, ak, bound)?;
            let tight_left: Vec<OneCell> =
                loose.iter().zip(&under).filter(|(p, _)| p.is_f_natural(&FAmbient)).map(|(_, u)| *u).collect();
            let tight_right: Vec<OneCell> =
                morphisms.iter().filter(|f| algebras.is_tight(f)).map(|f| f.map).collect();
            record(&mut comparisons, nj, nk, "tight", tight_left, tight_right);
            record(&mut comparisons, nj, nk, "loose", under.clone(), morphisms.iter().map(|f| f.map).collect());
            let mut cells_left: Vec<CellKey> = Vec::new();
            for (p, up) in loose.iter().zip(&under) {
                for (q, uq) in loose.iter().zip(&under) {
                    for g in enumerate_modifications(&FAmbient, p, q, bound)? {
                        let comps = (0..inclusion.source.num_objects()).map(|x| g.components[*inclusion.obj(x)].clone());
                        cells_left.push((*up, *uq, comps.collect()));
                    }
                }
            }
            let mut cells_right: Vec<CellKey> = Vec::new();
            for f in &morphisms {
                for g in &morphisms {
                    for r in algebras.cells(f, g, bound)? {
                        cells_right.push((f.map, g.map, carrier.two_cell_key(&r.cell).components.clone()));
                    }
                }
            }
            record(&mut comparisons, nj, nk, "2-cell", cells_left, cells_right);
        }
    }
    let strict = AlgebraCategory { monad: monad.clone(), weakness: Weakness::S };
    let all = enumerate_algebras(monad);
    let mut missed = Vec::new();
    for b in &all {
        let mut hit = false;
        for a in &correspondence.algebras {
            let there = strict.hom(a, b, bound)?;
            let back = strict.hom(b, a, bound)?;
            hit = there.iter().any(|f| {
                back.iter().any(|g| c.comp1(&g.map, &f.map) == c.unit(a.object) && c.comp1(&f.map, &g.map) == c.unit(b.object))
            });
            if hit {
                break;
            }
        }
        if !hit {
            missed.push(format!("{} via {}", c.object_name(b.object), c.one_cell_name(&b.structure)));
        }
    }
    let first_failure = comparisons
        .iter()
        .find(|h| !h.matched)
        .map(|h| format!("{} homs {} → {}: {} on the model side, {} on the algebra side", h.level, h.source, h.target, h.models, h.algebras))
        .or_else(|| missed.first().map(|m| format!("algebra {m} is not reached")));
    Ok(EquivalenceReport {
        weakness,
        models: models.len(),
        algebras: all.len(),
        certified: first_failure.is_none(),
        comparisons,
        missed_algebras: missed,
        first_failure,
    })
}
