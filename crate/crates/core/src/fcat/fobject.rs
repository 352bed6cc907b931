//! Objects and morphisms of F: full embeddings of finite categories and
//! commuting squares between them.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{
    enumerate_nat_trans, first_functor, full_subcategory, search_functors, CategorySpec, FiniteCategory, FiniteFunctor,
    FunctorDoc, FunctorSearch, MorId, NatTrans, ObjId,
};

/// A full embedding `tight ↪ loose`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FObject {
    pub tight: Arc<FiniteCategory>,
    pub loose: Arc<FiniteCategory>,
    pub embedding: FiniteFunctor,
}

impl FObject {
    pub fn new(tight: Arc<FiniteCategory>, loose: Arc<FiniteCategory>, embedding: FiniteFunctor) -> Result<Self> {
        let o = FObject { tight, loose, embedding };
        o.validate()?;
        Ok(o)
    }

    pub fn validate(&self) -> Result<()> {
        self.tight.validate().map_err(Error::InvalidCategory)?;
        self.loose.validate().map_err(Error::InvalidCategory)?;
        self.embedding.validate()?;
        if self.embedding.source != self.tight || self.embedding.target != self.loose {
            return Err(Error::ShapeMismatch("embedding does not run from the tight to the loose part".into()));
        }
        if !self.embedding.is_full_embedding() {
            return Err(Error::Invalid("embedding is not a full embedding".into()));
        }
        Ok(())
    }

    /// The full subcategory of `loose` on the objects marked tight, listed
    /// in increasing order.
    pub fn from_mask(loose: Arc<FiniteCategory>, mask: &[bool]) -> Self {
        let keep: Vec<ObjId> = (0..loose.num_objects()).filter(|&x| mask[x]).collect();
        let (tight, embedding) = full_subcategory(&loose, &keep);
        FObject { tight, loose, embedding }
    }

    /// Every object tight.
    pub fn chordate(cat: Arc<FiniteCategory>) -> Self {
        let n = cat.num_objects();
        Self::from_mask(cat, &vec![true; n])
    }

    /// No object tight.
    pub fn loose_only(cat: Arc<FiniteCategory>) -> Self {
        let n = cat.num_objects();
        Self::from_mask(cat, &vec![false; n])
    }

    pub fn terminal() -> Self {
        Self::chordate(Arc::new(FiniteCategory::terminal()))
    }

    pub fn tight_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.loose.num_objects()];
        for &x in &self.embedding.objects {
            mask[x] = true;
        }
        mask
    }

    pub fn is_tight_object(&self, x: ObjId) -> bool {
        self.embedding.objects.contains(&x)
    }

    /// Same loose part and the same tight objects.
    pub fn same_up_to_embedding(&self, other: &FObject) -> bool {
        self.loose == other.loose && self.tight_mask() == other.tight_mask()
    }

    /// Rebuilds the tight part in the canonical form of [`FObject::from_mask`].
    pub fn canonical(&self) -> FObject {
        Self::from_mask(self.loose.clone(), &self.tight_mask())
    }

    pub fn is_chordate(&self) -> bool {
        self.tight_mask().iter().all(|&t| t)
    }

    /// An isomorphism of loose parts matching tight objects exactly.
    pub fn isomorphism_to(&self, other: &FObject) -> Option<FiniteFunctor> {
        let (a, b) = (&self.loose, &other.loose);
        if a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms() {
            return None;
        }
        let (ma, mb) = (self.tight_mask(), other.tight_mask());
        let object_ok = |x: ObjId, y: ObjId| ma[x] == mb[y] && a.hom(x, x).len() == b.hom(y, y).len();
        let search = FunctorSearch { object_ok: &object_ok, morphism_ok: &|_, _| true, injective: true };
        first_functor(a, b, &search)
    }
}

/// A commuting square between full embeddings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FMap {
    pub source: FObject,
    pub target: FObject,
    pub tight: FiniteFunctor,
    pub loose: FiniteFunctor,
}

impl FMap {
    pub fn validate(&self) -> Result<()> {
        self.tight.validate()?;
        self.loose.validate()?;
        if self.tight.source != self.source.tight
            || self.tight.target != self.target.tight
            || self.loose.source != self.source.loose
            || self.loose.target != self.target.loose
        {
            return Err(Error::ShapeMismatch("square components have the wrong boundary".into()));
        }
        if self.target.embedding.after(&self.tight)? != self.loose.after(&self.source.embedding)? {
            return Err(Error::CommutationFailure("square does not commute".into()));
        }
        Ok(())
    }

    /// The square with loose component `loose`, if it preserves tight objects.
    pub fn from_loose(source: &FObject, target: &FObject, loose: FiniteFunctor) -> Option<FMap> {
        let img_obj = |x: ObjId| target.embedding.objects.iter().position(|&y| y == x);
        let objects: Option<Vec<ObjId>> =
            source.embedding.objects.iter().map(|&x| img_obj(loose.obj(x))).collect();
        let objects = objects?;
        let tt = &target.tight;
        let morphisms = (0..source.tight.num_morphisms())
            .map(|f| {
                let g = loose.mor(source.embedding.mor(f));
                let (s, d) = (objects[source.tight.src(f)], objects[source.tight.dst(f)]);
                *tt.hom(s, d).iter().find(|&&h| target.embedding.mor(h) == g).expect("full embedding")
            })
            .collect();
        let tight = FiniteFunctor::new_unchecked(source.tight.clone(), target.tight.clone(), objects, morphisms);
        Some(FMap { source: source.clone(), target: target.clone(), tight, loose })
    }

    pub fn identity(x: &FObject) -> FMap {
        FMap {
            source: x.clone(),
            target: x.clone(),
            tight: FiniteFunctor::identity(&x.tight),
            loose: FiniteFunctor::identity(&x.loose),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FMap) -> Result<FMap> {
        Ok(FMap {
            source: first.source.clone(),
            target: self.target.clone(),
            tight: self.tight.after(&first.tight)?,
            loose: self.loose.after(&first.loose)?,
        })
    }

    /// Both components are isomorphisms.
    pub fn is_isomorphism(&self) -> bool {
        self.tight.is_isomorphism() && self.loose.is_isomorphism()
    }

    /// Both components are equivalences.
    pub fn is_equivalence(&self) -> bool {
        self.tight.is_equivalence() && self.loose.is_equivalence()
    }
}

/// All squares `x → y`.
pub fn enumerate_fmaps(x: &FObject, y: &FObject, bound: usize) -> Result<Vec<FMap>> {
    let ymask = y.tight_mask();
    let xmask = x.tight_mask();
    let object_ok = |a: ObjId, b: ObjId| !xmask[a] || ymask[b];
    let search = FunctorSearch { object_ok: &object_ok, morphism_ok: &|_, _| true, injective: false };
    let loose = search_functors(&x.loose, &y.loose, &search, bound)?;
    Ok(loose.into_iter().map(|f| FMap::from_loose(x, y, f).expect("tight objects preserved")).collect())
}

/// The internal hom of F: functors between loose parts, with the functors
/// preserving tight objects as the tight part.
pub fn hom_ambient_f(a: &FObject, b: &FObject, bound: usize) -> Result<FObject> {
    let fc = crate::fincat::functor_category(&a.loose, &b.loose, bound)?;
    let amask = a.tight_mask();
    let bmask = b.tight_mask();
    let mask: Vec<bool> = fc
        .objects
        .iter()
        .map(|f| (0..a.loose.num_objects()).all(|x| !amask[x] || bmask[f.obj(x)]))
        .collect();
    Ok(FObject::from_mask(fc.cat, &mask))
}

/// Natural transformations between the loose components of two squares.
pub fn enumerate_fmap_cells(f: &FMap, g: &FMap, bound: usize) -> Result<Vec<NatTrans>> {
    enumerate_nat_trans(&f.loose, &g.loose, &|_: ObjId, _: MorId| true, bound)
}

/// Three nested full embeddings `tight ↪ fit ↪ loose`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Hom {
    pub tight: Arc<FiniteCategory>,
    pub fit: Arc<FiniteCategory>,
    pub loose: Arc<FiniteCategory>,
    pub tight_to_fit: FiniteFunctor,
    pub fit_to_loose: FiniteFunctor,
}

impl F2Hom {
    pub fn validate(&self) -> Result<()> {
        for e in [&self.tight_to_fit, &self.fit_to_loose] {
            e.validate()?;
            if !e.is_full_embedding() {
                return Err(Error::Invalid("F₂ hom inclusion is not a full embedding".into()));
            }
        }
        if self.tight_to_fit.source != self.tight
            || self.tight_to_fit.target != self.fit
            || self.fit_to_loose.source != self.fit
            || self.fit_to_loose.target != self.loose
        {
            return Err(Error::ShapeMismatch("F₂ hom inclusions do not compose".into()));
        }
        if !self.fit_to_loose.after(&self.tight_to_fit)?.is_full_embedding() {
            return Err(Error::Invalid("composite inclusion is not a full embedding".into()));
        }
        Ok(())
    }

    /// Marks the tight and fit objects of `loose`; tight objects must be fit.
    pub fn from_masks(loose: Arc<FiniteCategory>, fit: &[bool], tight: &[bool]) -> Result<Self> {
        if tight.iter().zip(fit).any(|(&t, &f)| t && !f) {
            return Err(Error::Invalid("a tight object is not fit".into()));
        }
        let fit_obj = FObject::from_mask(loose.clone(), fit);
        let fit_keep = &fit_obj.embedding.objects;
        let tmask: Vec<bool> = fit_keep.iter().map(|&x| tight[x]).collect();
        let tight_obj = FObject::from_mask(fit_obj.tight.clone(), &tmask);
        Ok(F2Hom {
            tight: tight_obj.tight,
            fit: fit_obj.tight,
            loose,
            tight_to_fit: tight_obj.embedding,
            fit_to_loose: fit_obj.embedding,
        })
    }

    /// The F-object obtained by forgetting the tight level.
    pub fn fit_part(&self) -> FObject {
        FObject { tight: self.fit.clone(), loose: self.loose.clone(), embedding: self.fit_to_loose.clone() }
    }

    /// The F-object obtained by forgetting the fit level.
    pub fn tight_part(&self) -> Result<FObject> {
        FObject::new(self.tight.clone(), self.loose.clone(), self.fit_to_loose.after(&self.tight_to_fit)?)
    }
}

/// JSON form of an F-object.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FObjectDoc {
    pub tight_cat: CategorySpec,
    pub loose_cat: CategorySpec,
    pub embedding: FunctorDoc,
}

impl FObjectDoc {
    pub fn build(&self) -> Result<FObject> {
        let tight = Arc::new(self.tight_cat.build()?);
        let loose = Arc::new(self.loose_cat.build()?);
        let embedding = self.embedding.build(&tight, &loose)?;
        FObject::new(tight, loose, embedding)
    }

    pub fn from_fobject(x: &FObject) -> Self {
        FObjectDoc {
            tight_cat: CategorySpec::Full(crate::fincat::CategoryDoc::from_category(&x.tight)),
            loose_cat: CategorySpec::Full(crate::fincat::CategoryDoc::from_category(&x.loose)),
            embedding: FunctorDoc::from_functor(&x.embedding),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{enumerate_functors, find_isomorphism, DEFAULT_BOUND};

    fn arc(c: FiniteCategory) -> Arc<FiniteCategory> {
        Arc::new(c)
    }

    #[test]
    fn hom_of_terminals_is_terminal() {
        let t = FObject::terminal();
        let h = hom_ambient_f(&t, &t, DEFAULT_BOUND).unwrap();
        assert_eq!(h.loose.num_objects(), 1);
        assert!(h.is_chordate());
        h.validate().unwrap();
    }

    #[test]
    fn hom_of_chordate_objects_is_the_functor_category() {
        let a = FObject::chordate(arc(FiniteCategory::walking_arrow()));
        let b = FObject::chordate(arc(FiniteCategory::chain(3)));
        let h = hom_ambient_f(&a, &b, DEFAULT_BOUND).unwrap();
        assert!(h.is_chordate());
        assert_eq!(h.loose.num_objects(), enumerate_functors(&a.loose, &b.loose, DEFAULT_BOUND).unwrap().len());
    }

    #[test]
    fn hom_out_of_a_loose_only_object() {
        let a = FObject::loose_only(arc(FiniteCategory::walking_arrow()));
        let b = FObject::from_mask(arc(FiniteCategory::walking_arrow()), &[true, false]);
        let h = hom_ambient_f(&a, &b, DEFAULT_BOUND).unwrap();
        // every square out of an empty tight part is determined by its loose component
        assert!(h.is_chordate());
        assert_eq!(enumerate_fmaps(&a, &b, DEFAULT_BOUND).unwrap().len(), 3);
        let h2 = hom_ambient_f(&b, &b, DEFAULT_BOUND).unwrap();
        // functors fixing the tight object 0: id and const_0
        assert_eq!(h2.tight.num_objects(), 2);
        h2.validate().unwrap();
        assert!(find_isomorphism(&h2.loose, &arc(FiniteCategory::chain(3))).is_some());
    }

    #[test]
    fn from_loose_rejects_squares_that_lose_tightness() {
        let b = FObject::from_mask(arc(FiniteCategory::walking_arrow()), &[true, false]);
        let one = FObject::terminal();
        let c1 = FiniteFunctor::constant(&one.loose, &b.loose, 1);
        assert!(FMap::from_loose(&one, &b, c1).is_none());
        let c0 = FiniteFunctor::constant(&one.loose, &b.loose, 0);
        FMap::from_loose(&one, &b, c0).unwrap().validate().unwrap();
    }

    #[test]
    fn f2_hom_levels() {
        let h = F2Hom::from_masks(arc(FiniteCategory::chain(3)), &[true, true, false], &[true, false, false]).unwrap();
        h.validate().unwrap();
        assert_eq!(h.tight.num_objects(), 1);
        assert_eq!(h.fit.num_objects(), 2);
        assert!(F2Hom::from_masks(arc(FiniteCategory::chain(3)), &[true, false, false], &[false, true, false]).is_err());
    }
}
