//! Generalized left adjoints with respect to a class R.
//!
//! For `U : 𝔸 → 𝔹`, an object map `F₀`, an action of `F` on tight 1-cells
//! and tight `η_c : c → UFc`, the data is a generalized adjunction when the
//! `η_c` are natural and every composite
//! `𝔸(Fc, d) → 𝔹(UFc, Ud) → 𝔹(c, Ud)` lies in R.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fcat::{FFunctor, FMap, FiniteFCategory, OneCell, TwoCategory};
use crate::fincat::FiniteFunctor;
use crate::sketch::RClass;

use super::in_class;

#[derive(Clone, Debug)]
pub struct GeneralizedAdjunction {
    pub a: Arc<FiniteFCategory>,
    pub b: Arc<FiniteFCategory>,
    /// `U : 𝔸 → 𝔹`.
    pub u: FFunctor<FiniteFCategory>,
    /// `F₀`, indexed by objects of 𝔹.
    pub left: Vec<usize>,
    /// `F` on the tight 1-cells of 𝔹.
    pub left_one: BTreeMap<OneCell, OneCell>,
    /// `η_c`, indexed by objects of 𝔹.
    pub eta: Vec<OneCell>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GeneralizedAdjunctionReport {
    pub naturality_failures: Vec<String>,
    /// Pairs `(c, d)` whose composite is not in R.
    pub hom_failures: Vec<String>,
    pub pairs_checked: usize,
    pub certified: bool,
}

fn naturality_failures(adj: &GeneralizedAdjunction) -> Vec<String> {
    let (a, b) = (&adj.a, &adj.b);
    let mut out = Vec::new();
    for c in 0..b.num_objects() {
        let e = &adj.eta[c];
        if e.src != c || e.dst != *adj.u.obj(adj.left[c]) {
            out.push(format!("η at {} has the wrong type", b.object_name(c)));
        } else if !b.is_tight_cell(e) {
            out.push(format!("η at {} is not tight", b.object_name(c)));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in b.all_one_cells().into_iter().filter(|f| b.is_tight_cell(f)) {
        let name = b.one_cell_name(&f);
        let Some(ff) = adj.left_one.get(&f) else {
            out.push(format!("F undefined at {name}"));
            continue;
        };
        if (ff.src, ff.dst) != (adj.left[f.src], adj.left[f.dst]) || !a.is_tight_cell(ff) {
            out.push(format!("F at {name} has the wrong type"));
            continue;
        }
        if b.comp1(adj.u.one(ff), &adj.eta[f.src]) != b.comp1(&adj.eta[f.dst], &f) {
            out.push(format!("η naturality at {name}"));
        }
    }
    out
}

/// The composite `𝔸(Fc, d) → 𝔹(c, Ud)`, `f ↦ Uf · η_c`, as a map of F.
pub fn adjunction_composite(adj: &GeneralizedAdjunction, c: usize, d: usize) -> Result<FMap> {
    let (a, b) = (&adj.a, &adj.b);
    let fc = adj.left[c];
    let ud = *adj.u.obj(d);
    let eta = &adj.eta[c];
    let (from, to) = (a.hom_cat(fc, d), b.hom_cat(c, ud));
    let objects = a.one_cells(fc, d).map(|f| b.comp1(adj.u.one(&f), eta).idx).collect();
    let morphisms = a
        .two_cells(fc, d)
        .map(|x| Ok(b.whisker_right(adj.u.two(&x), eta)?.idx))
        .collect::<Result<Vec<_>>>()?;
    let loose = FiniteFunctor::new(from.cat.clone(), to.cat.clone(), objects, morphisms)?;
    FMap::from_loose(&a.hom_fobject(fc, d), &b.hom_fobject(c, ud), loose)
        .ok_or_else(|| Error::Invalid(format!("composite at ({}, {}) sends a tight 1-cell to a loose one", b.object_name(c), a.object_name(d))))
}

/// Checks naturality of `η` and that every composite lies in `r`. At most
/// `bound` pairs `(c, d)` are examined.
pub fn check_generalized_adjunction(adj: &GeneralizedAdjunction, r: RClass, bound: usize) -> Result<GeneralizedAdjunctionReport> {
    let (a, b) = (&adj.a, &adj.b);
    if adj.left.len() != b.num_objects() || adj.eta.len() != b.num_objects() || adj.u.source != *a {
        return Err(Error::ShapeMismatch("adjunction data does not match 𝔸 and 𝔹".into()));
    }
    adj.u.validate(b.as_ref())?;
    let pairs = a.num_objects() * b.num_objects();
    if pairs > bound {
        return Err(Error::bound("object pairs of a generalized adjunction", bound));
    }
    let mut report = GeneralizedAdjunctionReport { naturality_failures: naturality_failures(adj), ..Default::default() };
    if report.naturality_failures.iter().any(|m| m.contains("wrong type") || m.contains("not tight")) {
        return Ok(report);
    }
    for c in 0..b.num_objects() {
        for d in 0..a.num_objects() {
            let composite = adjunction_composite(adj, c, d)?;
            report.pairs_checked += 1;
            if !in_class(r, &composite) {
                report.hom_failures.push(format!("({}, {})", b.object_name(c), a.object_name(d)));
            }
        }
    }
    report.certified = report.naturality_failures.is_empty() && report.hom_failures.is_empty();
    Ok(report)
}
