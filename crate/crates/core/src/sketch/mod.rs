//! Limit sketches over finite F-categories and their models in 𝔽.
//!
//! A sketch is a finite F-category together with weighted cones
//! `(W, D, s, γ)`, where `γ_j : W(j) → 𝒮(s, D j)` is strictly natural in `j`.
//! A model is an F-functor into 𝔽 sending every chosen cone to a limit cone,
//! up to the chosen class of comparison maps.

mod model;
mod morphism;
mod sigma;
#[cfg(test)]
mod tests;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fcat::{FAmbient, FFunctor, FiniteFCategory, OneCell, TwoCell};
use crate::fincat::{FiniteFunctor, ObjId};

pub use model::{
    check_model, comparison_map, enumerate_model_transformations, restrict_model, restrict_transformation, ConeVerdict, ModelReport,
};
pub use morphism::{
    check_cone_reflecting, check_sketch_morphism, cone_lifts, identity_morphism, image_cone, tight_part_sketch,
};
pub use sigma::{sigma_map, SigmaMap};

/// A model of a sketch: an F-functor from its carrier into 𝔽.
pub type Model = FFunctor<FAmbient>;

/// Which comparison maps count as "limit": isomorphisms or equivalences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RClass {
    Iso,
    #[serde(alias = "equiv")]
    Equivalence,
}

impl RClass {
    pub fn parse(s: &str) -> Result<RClass> {
        match s {
            "iso" => Ok(RClass::Iso),
            "equiv" | "equivalence" => Ok(RClass::Equivalence),
            other => Err(Error::Parse(format!("unknown class {other:?}; expected iso or equiv"))),
        }
    }
}

/// A weighted cone in a sketch carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SketchCone {
    pub weight: FFunctor<FAmbient>,
    pub diagram: FFunctor<FiniteFCategory>,
    pub apex: ObjId,
    /// `gamma[j] : W(j)_λ → 𝒮(apex, D j)`, acting on 1-cell and 2-cell indices.
    pub gamma: Vec<FiniteFunctor>,
}

impl SketchCone {
    pub fn shape(&self) -> &Arc<FiniteFCategory> {
        &self.weight.source
    }

    /// The 1-cell `γ_j(w)`.
    pub fn leg(&self, j: usize, w: ObjId) -> OneCell {
        OneCell { src: self.apex, dst: *self.diagram.obj(j), idx: self.gamma[j].obj(w) }
    }

    /// The 2-cell `γ_j(u)`.
    pub fn leg_cell(&self, j: usize, u: usize) -> TwoCell {
        TwoCell { src: self.apex, dst: *self.diagram.obj(j), idx: self.gamma[j].mor(u) }
    }

    /// The first reason this is not a weighted cone in `carrier`, if any.
    pub fn violation(&self, carrier: &FiniteFCategory) -> Option<String> {
        let shape = self.shape();
        if self.diagram.source != *shape {
            return Some("weight and diagram have different shapes".into());
        }
        if let Err(e) = self.diagram.validate(carrier) {
            return Some(format!("diagram: {e}"));
        }
        if self.apex >= carrier.num_objects() {
            return Some(format!("apex {} out of range", self.apex));
        }
        if self.gamma.len() != shape.num_objects() {
            return Some("one γ component per shape object is required".into());
        }
        for j in 0..shape.num_objects() {
            let g = &self.gamma[j];
            let hom = carrier.hom_cat(self.apex, *self.diagram.obj(j));
            if g.source != self.weight.obj(j).loose || g.target != hom.cat {
                return Some(format!("γ_{j} has the wrong type"));
            }
            if let Err(e) = g.validate() {
                return Some(format!("γ_{j}: {e}"));
            }
            let wj = self.weight.obj(j);
            if let Some(w) = (0..wj.loose.num_objects()).find(|&w| wj.is_tight_object(w) && !hom.tight[g.obj(w)]) {
                return Some(format!("γ_{j} sends the tight object {w} to a loose 1-cell"));
            }
        }
        for t in shape.all_one_cells() {
            let (j, k) = (t.src, t.dst);
            let dt = self.diagram.one(&t);
            let wt = &self.weight.one(&t).functor;
            let wj = &self.weight.obj(j).loose;
            for w in 0..wj.num_objects() {
                if carrier.comp1(dt, &self.leg(j, w)) != self.leg(k, wt.obj(w)) {
                    return Some(format!("γ is not natural at {} on object {w}", shape.one_cell_name(&t)));
                }
            }
            for u in 0..wj.num_morphisms() {
                let lhs = carrier.hcell(&carrier.id_cell(dt), &self.leg_cell(j, u));
                if lhs != self.leg_cell(k, wt.mor(u)) {
                    return Some(format!("γ is not natural at {} on morphism {u}", shape.one_cell_name(&t)));
                }
            }
        }
        for a in shape.all_two_cells() {
            let (j, k) = (a.src, a.dst);
            let da = self.diagram.two(&a);
            let wa = self.weight.two(&a);
            for w in 0..self.weight.obj(j).loose.num_objects() {
                let lhs = carrier.hcell(da, &carrier.id_cell(&self.leg(j, w)));
                if lhs != self.leg_cell(k, wa.components[w]) {
                    return Some(format!("γ is not natural at the 2-cell {} on object {w}", shape.cell_name(&a)));
                }
            }
        }
        None
    }
}

/// A finite F-category with chosen weighted cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sketch {
    pub carrier: Arc<FiniteFCategory>,
    pub cones: Vec<SketchCone>,
    /// Every cone shape is chordate.
    pub tight_cones: bool,
}

impl Sketch {
    pub fn new(carrier: Arc<FiniteFCategory>, cones: Vec<SketchCone>) -> Result<Sketch> {
        for (i, c) in cones.iter().enumerate() {
            if let Some(v) = c.violation(&carrier) {
                return Err(Error::Invalid(format!("cone {i}: {v}")));
            }
        }
        let tight_cones = cones.iter().all(|c| c.shape().is_chordate());
        Ok(Sketch { carrier, cones, tight_cones })
    }

    /// The sketch with no cones.
    pub fn bare(carrier: Arc<FiniteFCategory>) -> Sketch {
        Sketch { carrier, cones: Vec::new(), tight_cones: true }
    }
}
