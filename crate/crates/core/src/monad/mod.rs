//! Enhanced 2-monads on finite F-categories, their strict algebras and
//! w-morphisms, mates of adjunctions between models, and instance-level
//! comparison of models with algebras.

mod algebra;
mod equivalence;
mod mate;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fcat::{FFunctor, FiniteFCategory, OneCell, TwoCategory};

pub use algebra::{
    check_algebra, check_t_transformation, check_w_morphism, compose_w_morphisms, enumerate_algebras, AlgebraCategory,
    TAlgebra, TTransformation, WTMorphism,
};
pub use equivalence::{equivalence_witness, Correspondence, EquivalenceReport, HomComparison};
pub use mate::{check_doctrinal_lift, mate_transformation, AdjunctionData};

/// `(T, μ, η)` on a finite F-category. `μ` and `η` are F-natural, so they
/// are stored as their tight components.
#[derive(Clone, Debug)]
pub struct EnhancedMonad {
    pub carrier: Arc<FiniteFCategory>,
    pub functor: FFunctor<FiniteFCategory>,
    /// `μ_x : TTx → Tx`
    pub mu: Vec<OneCell>,
    /// `η_x : x → Tx`
    pub eta: Vec<OneCell>,
}

/// A violated monad law, located at an object or 1-cell of the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: String,
    pub at: String,
}

impl EnhancedMonad {
    pub fn identity(carrier: &Arc<FiniteFCategory>) -> Self {
        let c = carrier.as_ref();
        let functor = FFunctor::build_unchecked(carrier, |x| x, |f| *f, |a| *a);
        let units: Vec<OneCell> = (0..c.num_objects()).map(|x| c.unit(x)).collect();
        EnhancedMonad { carrier: carrier.clone(), functor, mu: units.clone(), eta: units }
    }

    pub fn obj(&self, x: usize) -> usize {
        *self.functor.obj(x)
    }

    pub fn one(&self, f: &OneCell) -> OneCell {
        *self.functor.one(f)
    }

    pub fn two(&self, a: &crate::fcat::TwoCell) -> crate::fcat::TwoCell {
        *self.functor.two(a)
    }
}

/// Every violated instance of the monad laws and of F-naturality of `μ`, `η`.
pub fn check_monad(t: &EnhancedMonad) -> Result<Vec<LawViolation>> {
    let c = t.carrier.as_ref();
    let n = c.num_objects();
    if t.functor.source.as_ref() != c || t.mu.len() != n || t.eta.len() != n {
        return Err(Error::ShapeMismatch("monad data does not match its carrier".into()));
    }
    t.functor.validate(c)?;
    let mut out = Vec::new();
    let mut report = |law: &str, at: String| out.push(LawViolation { law: law.into(), at });
    for x in 0..n {
        let (tx, ttx) = (t.obj(x), t.obj(t.obj(x)));
        let name = c.object_name(x).to_string();
        let (mu, eta) = (&t.mu[x], &t.eta[x]);
        if (mu.src, mu.dst) != (ttx, tx) || (eta.src, eta.dst) != (x, tx) {
            report("component type", name);
            continue;
        }
        if !c.is_tight_cell(mu) {
            report("mu tight", name.clone());
        }
        if !c.is_tight_cell(eta) {
            report("eta tight", name.clone());
        }
    }
    if !out.is_empty() {
        return Ok(out);
    }
    let mut out2 = Vec::new();
    let mut report = |law: &str, at: String| out2.push(LawViolation { law: law.into(), at });
    for x in 0..n {
        let name = c.object_name(x).to_string();
        let tx = t.obj(x);
        let (mu, mu_t) = (t.mu[x], t.mu[tx]);
        if c.comp1(&mu, &t.one(&mu)) != c.comp1(&mu, &mu_t) {
            report("associativity", name.clone());
        }
        if c.comp1(&mu, &t.one(&t.eta[x])) != c.unit(tx) {
            report("left unit", name.clone());
        }
        if c.comp1(&mu, &t.eta[tx]) != c.unit(tx) {
            report("right unit", name);
        }
    }
    for f in c.all_one_cells() {
        let name = c.one_cell_name(&f);
        let (tf, ttf) = (t.one(&f), t.one(&t.one(&f)));
        if c.comp1(&t.mu[f.dst], &ttf) != c.comp1(&tf, &t.mu[f.src]) {
            report("mu naturality", name.clone());
        }
        if c.comp1(&t.eta[f.dst], &f) != c.comp1(&tf, &t.eta[f.src]) {
            report("eta naturality", name);
        }
    }
    for a in c.all_two_cells() {
        let name = c.cell_name(&a);
        let (src, dst) = (c.cell_source(&a), c.cell_target(&a));
        let tta = t.two(&t.two(&a));
        if c.whisker_left(&t.mu[dst.dst], &tta)? != c.whisker_right(&t.two(&a), &t.mu[src.src])? {
            report("mu 2-naturality", name.clone());
        }
        if c.whisker_left(&t.eta[dst.dst], &a)? != c.whisker_right(&t.two(&a), &t.eta[src.src])? {
            report("eta 2-naturality", name);
        }
    }
    Ok(out2)
}

#[cfg(test)]
mod tests;
