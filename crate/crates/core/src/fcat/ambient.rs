//! The ambient enhanced 2-category 𝔽: F-objects, functors between loose
//! parts (tight when they preserve tight objects), natural transformations.

use crate::error::{Error, Result};
use crate::fincat::{enumerate_nat_trans, search_functors, FiniteFunctor, FunctorSearch, MorId, NatTrans, ObjId};

use super::fobject::{FMap, FObject};
use super::two_cat::{Enumerable, TwoCategory};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FAmbient;

/// A loose 1-cell of 𝔽.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LooseMap {
    pub src: FObject,
    pub dst: FObject,
    pub functor: FiniteFunctor,
}

impl LooseMap {
    pub fn new(src: FObject, dst: FObject, functor: FiniteFunctor) -> Result<Self> {
        if functor.source != src.loose || functor.target != dst.loose {
            return Err(Error::ShapeMismatch("functor does not act on the loose parts".into()));
        }
        Ok(LooseMap { src, dst, functor })
    }

    pub fn from_fmap(f: &FMap) -> Self {
        LooseMap { src: f.source.clone(), dst: f.target.clone(), functor: f.loose.clone() }
    }

    pub fn to_fmap(&self) -> Option<FMap> {
        FMap::from_loose(&self.src, &self.dst, self.functor.clone())
    }

    pub fn is_tight(&self) -> bool {
        let mask = self.dst.tight_mask();
        self.src.embedding.objects.iter().all(|&x| mask[self.functor.obj(x)])
    }
}

/// A 2-cell of 𝔽; `components[x] : src.functor(x) → dst.functor(x)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AmbCell {
    pub src: LooseMap,
    pub dst: LooseMap,
    pub components: Vec<MorId>,
}

impl AmbCell {
    pub fn from_nat_trans(src: &LooseMap, dst: &LooseMap, t: &NatTrans) -> Self {
        AmbCell { src: src.clone(), dst: dst.clone(), components: t.components.clone() }
    }

    pub fn to_nat_trans(&self) -> NatTrans {
        NatTrans { source: self.src.functor.clone(), target: self.dst.functor.clone(), components: self.components.clone() }
    }
}

impl TwoCategory for FAmbient {
    type Obj = FObject;
    type Mor = LooseMap;
    type Cell = AmbCell;

    fn mor_src(&self, f: &LooseMap) -> FObject {
        f.src.clone()
    }
    fn mor_dst(&self, f: &LooseMap) -> FObject {
        f.dst.clone()
    }
    fn identity(&self, x: &FObject) -> LooseMap {
        LooseMap { src: x.clone(), dst: x.clone(), functor: FiniteFunctor::identity(&x.loose) }
    }
    fn compose(&self, g: &LooseMap, f: &LooseMap) -> Result<LooseMap> {
        if f.dst != g.src {
            return Err(Error::NotComposable("loose maps with mismatched middle object".into()));
        }
        Ok(LooseMap { src: f.src.clone(), dst: g.dst.clone(), functor: g.functor.after(&f.functor)? })
    }
    fn is_tight(&self, f: &LooseMap) -> bool {
        f.is_tight()
    }
    fn cell_src(&self, a: &AmbCell) -> LooseMap {
        a.src.clone()
    }
    fn cell_dst(&self, a: &AmbCell) -> LooseMap {
        a.dst.clone()
    }
    fn identity_cell(&self, f: &LooseMap) -> AmbCell {
        let t = f.functor.target.clone();
        AmbCell { src: f.clone(), dst: f.clone(), components: f.functor.objects.iter().map(|&o| t.identity(o)).collect() }
    }
    fn vcompose(&self, b: &AmbCell, a: &AmbCell) -> Result<AmbCell> {
        if a.dst != b.src {
            return Err(Error::NotComposable("vertical composite with mismatched boundary".into()));
        }
        let t = &a.src.dst.loose;
        Ok(AmbCell {
            src: a.src.clone(),
            dst: b.dst.clone(),
            components: b.components.iter().zip(&a.components).map(|(&y, &x)| t.comp(y, x)).collect(),
        })
    }
    fn hcompose(&self, b: &AmbCell, a: &AmbCell) -> Result<AmbCell> {
        if a.src.dst != b.src.src {
            return Err(Error::NotComposable("horizontal composite with mismatched middle object".into()));
        }
        let c = &b.src.dst.loose;
        let components = (0..a.src.src.loose.num_objects())
            .map(|x| {
                let fx = a.src.functor.obj(x);
                c.comp(b.dst.functor.mor(a.components[x]), b.components[fx])
            })
            .collect();
        Ok(AmbCell { src: self.compose(&b.src, &a.src)?, dst: self.compose(&b.dst, &a.dst)?, components })
    }
    fn is_invertible(&self, a: &AmbCell) -> bool {
        let t = &a.src.dst.loose;
        a.components.iter().all(|&c| t.is_iso(c))
    }
    fn is_identity_cell(&self, a: &AmbCell) -> bool {
        a.src == a.dst && a.components.iter().all(|&c| a.src.dst.loose.is_identity(c))
    }
}

impl Enumerable for FAmbient {
    fn hom_with_post(
        &self,
        x: &FObject,
        y: &FObject,
        posts: &[(LooseMap, LooseMap)],
        bound: usize,
    ) -> Result<Vec<LooseMap>> {
        for (t, r) in posts {
            if t.src != *y || r.src != *x || r.dst != t.dst {
                return Err(Error::ShapeMismatch("postcomposition constraint of the wrong type".into()));
            }
        }
        let object_ok = |a: ObjId, b: ObjId| posts.iter().all(|(t, r)| t.functor.obj(b) == r.functor.obj(a));
        let morphism_ok = |f: MorId, g: MorId| posts.iter().all(|(t, r)| t.functor.mor(g) == r.functor.mor(f));
        let search = FunctorSearch { object_ok: &object_ok, morphism_ok: &morphism_ok, injective: false };
        Ok(search_functors(&x.loose, &y.loose, &search, bound)?
            .into_iter()
            .map(|functor| LooseMap { src: x.clone(), dst: y.clone(), functor })
            .collect())
    }

    fn cells_with_post(
        &self,
        f: &LooseMap,
        g: &LooseMap,
        posts: &[(LooseMap, AmbCell)],
        bound: usize,
    ) -> Result<Vec<AmbCell>> {
        if f.src != g.src || f.dst != g.dst {
            return Err(Error::ShapeMismatch("2-cells between 1-cells of different types".into()));
        }
        let ok = |x: ObjId, c: MorId| posts.iter().all(|(t, r)| t.functor.mor(c) == r.components[x]);
        Ok(enumerate_nat_trans(&f.functor, &g.functor, &ok, bound)?
            .into_iter()
            .map(|t| AmbCell { src: f.clone(), dst: g.clone(), components: t.components })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{FiniteCategory, DEFAULT_BOUND};
    use std::sync::Arc;

    #[test]
    fn tightness_and_composition() {
        let a = FObject::from_mask(Arc::new(FiniteCategory::walking_arrow()), &[true, false]);
        let homs = FAmbient.hom(&a, &a, DEFAULT_BOUND).unwrap();
        assert_eq!(homs.len(), 3);
        let tight: Vec<_> = homs.iter().filter(|f| FAmbient.is_tight(f)).collect();
        assert_eq!(tight.len(), 2);
        for f in &homs {
            for g in &homs {
                let gf = FAmbient.compose(g, f).unwrap();
                if f.is_tight() && g.is_tight() {
                    assert!(gf.is_tight());
                }
            }
        }
    }

    #[test]
    fn interchange_law() {
        let a = FObject::chordate(Arc::new(FiniteCategory::walking_arrow()));
        let homs = FAmbient.hom(&a, &a, DEFAULT_BOUND).unwrap();
        let mut cells = Vec::new();
        for f in &homs {
            for g in &homs {
                cells.extend(FAmbient.cells(f, g, DEFAULT_BOUND).unwrap());
            }
        }
        for a1 in &cells {
            for a2 in cells.iter().filter(|c| c.src == a1.dst) {
                for b1 in &cells {
                    for b2 in cells.iter().filter(|c| c.src == b1.dst) {
                        let lhs = FAmbient
                            .vcompose(&FAmbient.hcompose(b2, a2).unwrap(), &FAmbient.hcompose(b1, a1).unwrap())
                            .unwrap();
                        let rhs = FAmbient
                            .hcompose(&FAmbient.vcompose(b2, b1).unwrap(), &FAmbient.vcompose(a2, a1).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn post_constraints_filter() {
        let a = FObject::chordate(Arc::new(FiniteCategory::walking_arrow()));
        let homs = FAmbient.hom(&a, &a, DEFAULT_BOUND).unwrap();
        for t in &homs {
            for r in &homs {
                let got = FAmbient.hom_with_post(&a, &a, &[(t.clone(), r.clone())], DEFAULT_BOUND).unwrap();
                let want: Vec<_> =
                    homs.iter().filter(|h| FAmbient.compose(t, h).unwrap() == *r).cloned().collect();
                assert_eq!(got, want);
            }
        }
    }
}
