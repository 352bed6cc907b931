use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::category::{FiniteCategory, MorId, ObjId};
use crate::error::{Error, Result};

pub(crate) fn same_cat(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn cmp_cat(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> Ordering {
    if Arc::ptr_eq(a, b) {
        Ordering::Equal
    } else {
        (**a).cmp(&**b)
    }
}

#[derive(Clone, Debug)]
pub struct FiniteFunctor {
    pub source: Arc<FiniteCategory>,
    pub target: Arc<FiniteCategory>,
    pub objects: Vec<ObjId>,
    pub morphisms: Vec<MorId>,
}

impl PartialEq for FiniteFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && same_cat(&self.source, &other.source)
            && same_cat(&self.target, &other.target)
    }
}

impl Eq for FiniteFunctor {}

impl Ord for FiniteFunctor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.objects
            .cmp(&other.objects)
            .then_with(|| self.morphisms.cmp(&other.morphisms))
            .then_with(|| cmp_cat(&self.source, &other.source))
            .then_with(|| cmp_cat(&self.target, &other.target))
    }
}

impl PartialOrd for FiniteFunctor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for FiniteFunctor {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.objects.hash(state);
        self.morphisms.hash(state);
    }
}

impl FiniteFunctor {
    pub fn new(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        objects: Vec<ObjId>,
        morphisms: Vec<MorId>,
    ) -> Result<Self> {
        let f = Self::new_unchecked(source, target, objects, morphisms);
        f.validate()?;
        Ok(f)
    }

    pub fn new_unchecked(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        objects: Vec<ObjId>,
        morphisms: Vec<MorId>,
    ) -> Self {
        FiniteFunctor { source, target, objects, morphisms }
    }

    pub fn identity(cat: &Arc<FiniteCategory>) -> Self {
        FiniteFunctor {
            source: cat.clone(),
            target: cat.clone(),
            objects: (0..cat.num_objects()).collect(),
            morphisms: (0..cat.num_morphisms()).collect(),
        }
    }

    pub fn constant(source: &Arc<FiniteCategory>, target: &Arc<FiniteCategory>, x: ObjId) -> Self {
        FiniteFunctor {
            source: source.clone(),
            target: target.clone(),
            objects: vec![x; source.num_objects()],
            morphisms: vec![target.identity(x); source.num_morphisms()],
        }
    }

    /// The unique functor into the terminal category.
    pub fn to_terminal(source: &Arc<FiniteCategory>, terminal: &Arc<FiniteCategory>) -> Self {
        Self::constant(source, terminal, 0)
    }

    pub fn validate(&self) -> Result<()> {
        let (a, b) = (&self.source, &self.target);
        if self.objects.len() != a.num_objects() || self.morphisms.len() != a.num_morphisms() {
            return Err(Error::ShapeMismatch("functor maps do not cover the source".into()));
        }
        if self.objects.iter().any(|&o| o >= b.num_objects())
            || self.morphisms.iter().any(|&m| m >= b.num_morphisms())
        {
            return Err(Error::ShapeMismatch("functor maps into missing target cells".into()));
        }
        for f in 0..a.num_morphisms() {
            let g = self.morphisms[f];
            if b.src(g) != self.objects[a.src(f)] || b.dst(g) != self.objects[a.dst(f)] {
                return Err(Error::Invalid(format!("functor does not preserve the type of {}", a.morphism(f).name)));
            }
        }
        for x in 0..a.num_objects() {
            if self.morphisms[a.identity(x)] != b.identity(self.objects[x]) {
                return Err(Error::Invalid(format!("functor does not preserve the identity of {}", a.object_name(x))));
            }
        }
        for g in 0..a.num_morphisms() {
            for x in 0..a.num_objects() {
                for &f in a.hom(x, a.src(g)) {
                    if self.morphisms[a.comp(g, f)] != b.comp(self.morphisms[g], self.morphisms[f]) {
                        return Err(Error::Invalid(format!(
                            "functor does not preserve the composite {} ∘ {}",
                            a.morphism(g).name,
                            a.morphism(f).name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.objects[x]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.morphisms[f]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FiniteFunctor) -> Result<FiniteFunctor> {
        if !same_cat(&first.target, &self.source) {
            return Err(Error::NotComposable("functor target/source mismatch".into()));
        }
        Ok(FiniteFunctor {
            source: first.source.clone(),
            target: self.target.clone(),
            objects: first.objects.iter().map(|&o| self.objects[o]).collect(),
            morphisms: first.morphisms.iter().map(|&m| self.morphisms[m]).collect(),
        })
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.num_objects()];
        self.objects.iter().all(|&o| !std::mem::replace(&mut seen[o], true))
    }

    /// Bijective on every hom-set.
    pub fn is_fully_faithful(&self) -> bool {
        let (a, b) = (&self.source, &self.target);
        for x in 0..a.num_objects() {
            for y in 0..a.num_objects() {
                let target_hom = b.hom(self.objects[x], self.objects[y]);
                let src_hom = a.hom(x, y);
                if src_hom.len() != target_hom.len() {
                    return false;
                }
                let mut seen = vec![false; b.num_morphisms()];
                for &f in src_hom {
                    if std::mem::replace(&mut seen[self.morphisms[f]], true) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Full embedding: injective on objects and fully faithful.
    pub fn is_full_embedding(&self) -> bool {
        self.is_injective_on_objects() && self.is_fully_faithful()
    }

    pub fn is_essentially_surjective(&self) -> bool {
        let b = &self.target;
        (0..b.num_objects()).all(|y| {
            self.objects
                .iter()
                .any(|&fx| fx == y || b.hom(fx, y).iter().any(|&f| b.is_iso(f)))
        })
    }

    /// Bijective on objects and on morphisms; the inverse of a bijective
    /// functor is automatically a functor.
    pub fn is_isomorphism(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn inverse(&self) -> Option<FiniteFunctor> {
        let (a, b) = (&self.source, &self.target);
        if a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms() {
            return None;
        }
        let mut inv_obj = vec![usize::MAX; b.num_objects()];
        for (x, &y) in self.objects.iter().enumerate() {
            if inv_obj[y] != usize::MAX {
                return None;
            }
            inv_obj[y] = x;
        }
        let mut inv_mor = vec![usize::MAX; b.num_morphisms()];
        for (f, &g) in self.morphisms.iter().enumerate() {
            if inv_mor[g] != usize::MAX {
                return None;
            }
            inv_mor[g] = f;
        }
        let inv = FiniteFunctor::new_unchecked(b.clone(), a.clone(), inv_obj, inv_mor);
        inv.validate().ok()?;
        Some(inv)
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_fully_faithful() && self.is_essentially_surjective()
    }
}

/// A natural transformation between functors with a common source and target;
/// `components[x] : source(x) → target(x)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatTrans {
    pub source: FiniteFunctor,
    pub target: FiniteFunctor,
    pub components: Vec<MorId>,
}

impl NatTrans {
    pub fn identity(f: &FiniteFunctor) -> NatTrans {
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f.objects.iter().map(|&o| f.target.identity(o)).collect(),
        }
    }

    pub fn shape_ok(&self) -> Result<()> {
        let (f, g) = (&self.source, &self.target);
        if !same_cat(&f.source, &g.source) || !same_cat(&f.target, &g.target) {
            return Err(Error::ShapeMismatch("transformation between functors of different types".into()));
        }
        if self.components.len() != f.source.num_objects() {
            return Err(Error::ShapeMismatch("wrong number of components".into()));
        }
        for (x, &c) in self.components.iter().enumerate() {
            let t = &f.target;
            if c >= t.num_morphisms() || t.src(c) != f.obj(x) || t.dst(c) != g.obj(x) {
                return Err(Error::ShapeMismatch(format!("component at {} has the wrong type", f.source.object_name(x))));
            }
        }
        Ok(())
    }

    /// First morphism of the source whose naturality square fails.
    pub fn naturality_failure(&self) -> Result<Option<MorId>> {
        self.shape_ok()?;
        let (f, g) = (&self.source, &self.target);
        let a = &f.source;
        let b = &f.target;
        for m in 0..a.num_morphisms() {
            let (x, y) = (a.src(m), a.dst(m));
            if b.comp(g.mor(m), self.components[x]) != b.comp(self.components[y], f.mor(m)) {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    pub fn is_natural(&self) -> Result<bool> {
        Ok(self.naturality_failure()?.is_none())
    }

    /// `self ∘ first` (vertical).
    pub fn vcompose(&self, first: &NatTrans) -> Result<NatTrans> {
        if self.source != first.target {
            return Err(Error::NotComposable("vertical composite of transformations with mismatched boundary".into()));
        }
        let b = &self.source.target;
        Ok(NatTrans {
            source: first.source.clone(),
            target: self.target.clone(),
            components: self
                .components
                .iter()
                .zip(&first.components)
                .map(|(&s, &f)| b.comp(s, f))
                .collect(),
        })
    }

    /// Horizontal composite `self * first` where `first : F ⇒ F' : A → B`
    /// and `self : G ⇒ G' : B → C`; component `G'(first_a) ∘ self_{F a}`.
    pub fn hcompose(&self, first: &NatTrans) -> Result<NatTrans> {
        if !same_cat(&first.source.target, &self.source.source) {
            return Err(Error::NotComposable("horizontal composite of transformations with mismatched categories".into()));
        }
        let c = &self.source.target;
        let source = self.source.after(&first.source)?;
        let target = self.target.after(&first.target)?;
        let components = (0..first.source.source.num_objects())
            .map(|a| {
                let fa = first.source.obj(a);
                c.comp(self.target.mor(first.components[a]), self.components[fa])
            })
            .collect();
        Ok(NatTrans { source, target, components })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .components
                .iter()
                .enumerate()
                .all(|(x, &c)| c == self.source.target.identity(self.source.obj(x)))
    }

    pub fn is_invertible(&self) -> bool {
        self.components.iter().all(|&c| self.source.target.is_iso(c))
    }
}

/// True iff every naturality square of `alpha` commutes.
pub fn check_naturality(alpha: &NatTrans) -> Result<bool> {
    alpha.is_natural()
}

#[cfg(test)]
mod tests {
    use super::super::category::Morphism;
    use super::*;

    fn arc(c: FiniteCategory) -> Arc<FiniteCategory> {
        Arc::new(c)
    }

    #[test]
    fn isomorphism_examples() {
        let arrow = arc(FiniteCategory::walking_arrow());
        let one = arc(FiniteCategory::terminal());
        assert!(FiniteFunctor::identity(&arrow).is_isomorphism());
        assert!(!FiniteFunctor::to_terminal(&arrow, &one).is_isomorphism());
        // the parallel pair presented with its arrows listed in the other order
        let p = arc(FiniteCategory::parallel_pair());
        let q = arc(
            FiniteCategory::from_composition(
                vec!["b".into(), "a".into()],
                vec![
                    Morphism { name: "y".into(), src: 1, dst: 0 },
                    Morphism { name: "x".into(), src: 1, dst: 0 },
                    Morphism { name: "1b".into(), src: 0, dst: 0 },
                    Morphism { name: "1a".into(), src: 1, dst: 1 },
                ],
                vec![2, 3],
                |g, f| if g >= 2 { f } else { g },
            )
            .unwrap(),
        );
        let relabel = FiniteFunctor::new(p.clone(), q.clone(), vec![1, 0], vec![3, 2, 1, 0]).unwrap();
        assert!(relabel.is_isomorphism());
        let inv = relabel.inverse().unwrap();
        assert_eq!(inv.after(&relabel).unwrap(), FiniteFunctor::identity(&p));
        assert_eq!(relabel.after(&inv).unwrap(), FiniteFunctor::identity(&q));
    }

    #[test]
    fn equivalence_examples() {
        let chaotic = arc(FiniteCategory::chaotic(2));
        let one = arc(FiniteCategory::terminal());
        assert!(FiniteFunctor::identity(&chaotic).is_equivalence());
        let incl = FiniteFunctor::new(one.clone(), chaotic.clone(), vec![0], vec![chaotic.identity(0)]).unwrap();
        assert!(incl.is_equivalence());
        assert!(!incl.is_isomorphism());
        let two = arc(FiniteCategory::discrete(2));
        assert!(!FiniteFunctor::to_terminal(&two, &one).is_equivalence());
    }

    #[test]
    fn naturality_examples() {
        let arrow = arc(FiniteCategory::walking_arrow());
        let id = FiniteFunctor::identity(&arrow);
        assert!(check_naturality(&NatTrans::identity(&id)).unwrap());
        let two = arc(FiniteCategory::discrete(2));
        let f = FiniteFunctor::new(two.clone(), arrow.clone(), vec![0, 1], vec![arrow.identity(0), arrow.identity(1)]).unwrap();
        let g = FiniteFunctor::new(two.clone(), arrow.clone(), vec![1, 1], vec![arrow.identity(1), arrow.identity(1)]).unwrap();
        let a = arrow.hom(0, 1)[0];
        let t = NatTrans { source: f.clone(), target: g.clone(), components: vec![a, arrow.identity(1)] };
        assert!(check_naturality(&t).unwrap());
        let bad = NatTrans { source: f.clone(), target: g.clone(), components: vec![a] };
        assert!(matches!(check_naturality(&bad), Err(Error::ShapeMismatch(_))));
        // whiskering an identity keeps it an identity
        let w = NatTrans::identity(&id).hcompose(&NatTrans::identity(&f)).unwrap();
        assert!(w.is_identity() && check_naturality(&w).unwrap());
    }

    #[test]
    fn naturality_failure_is_located() {
        // identity components between the identity and the swap of u and v
        let p = arc(FiniteCategory::parallel_pair());
        let id = FiniteFunctor::identity(&p);
        let (u, v) = (p.find_morphism("u").unwrap(), p.find_morphism("v").unwrap());
        let swap = FiniteFunctor::new(p.clone(), p.clone(), vec![0, 1], vec![0, 1, v, u]).unwrap();
        let t = NatTrans { source: id.clone(), target: swap, components: vec![p.identity(0), p.identity(1)] };
        assert_eq!(t.naturality_failure().unwrap(), Some(u));
    }
}
