//! Lifting and orthogonality with respect to a class R of maps in F, gap
//! maps, the generating set of the factorization system on F, and
//! generalized adjunctions.
//!
//! Cat is handled as the chordate part of F: a functor is the square with
//! equal tight and loose components.

mod adjunction;
mod random;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fcat::{FMap, FObject};
use crate::fincat::{functor_category, pullback_category, FiniteCategory, FiniteFunctor, FunctorCategory, Pullback};
use crate::sketch::RClass;

pub use adjunction::{
    adjunction_composite, check_generalized_adjunction, GeneralizedAdjunction, GeneralizedAdjunctionReport,
};
pub use random::{random_category, random_fmap, random_fobject, random_pair};

/// The ambient a check runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Base {
    Cat,
    F,
}

impl Base {
    fn admits(self, x: &FObject) -> bool {
        self == Base::F || x.is_chordate()
    }
}

/// `R` as a predicate on maps of F.
pub fn in_class(r: RClass, f: &FMap) -> bool {
    match r {
        RClass::Iso => f.is_isomorphism(),
        RClass::Equivalence => f.is_equivalence(),
    }
}

/// The right class of the factorization system on F: both components invertible.
pub fn in_right_class(f: &FMap) -> bool {
    f.is_isomorphism()
}

/// The internal hom `[A, B]` with its objects and morphisms keyed.
#[derive(Clone, Debug)]
pub struct HomObject {
    pub object: FObject,
    pub keys: FunctorCategory,
}

pub fn hom_object(a: &FObject, b: &FObject, bound: usize) -> Result<HomObject> {
    let keys = functor_category(&a.loose, &b.loose, bound)?;
    let (amask, bmask) = (a.tight_mask(), b.tight_mask());
    let mask: Vec<bool> = keys
        .objects
        .iter()
        .map(|f| (0..a.loose.num_objects()).all(|x| !amask[x] || bmask[f.obj(x)]))
        .collect();
    Ok(HomObject { object: FObject::from_mask(keys.cat.clone(), &mask), keys })
}

fn lookup(found: Option<usize>, what: &str) -> Result<usize> {
    found.ok_or_else(|| Error::Invalid(format!("{what} outside the enumerated hom")))
}

/// `hom(f, C) : hom(B, C) → hom(A, C)` for `f : A → B`.
pub fn precompose(f: &FMap, from: &HomObject, to: &HomObject) -> Result<FMap> {
    let k = &from.keys;
    let mut objects = Vec::with_capacity(k.objects.len());
    for h in &k.objects {
        objects.push(lookup(to.keys.object_of(&h.after(&f.loose)?), "precomposite")?);
    }
    let mut morphisms = Vec::with_capacity(k.morphisms.len());
    for t in &k.morphisms {
        let whiskered = crate::fincat::NatTrans {
            source: t.source.after(&f.loose)?,
            target: t.target.after(&f.loose)?,
            components: (0..f.source.loose.num_objects()).map(|x| t.components[f.loose.obj(x)]).collect(),
        };
        morphisms.push(lookup(to.keys.morphism_of(&whiskered), "whiskered transformation")?);
    }
    square(from, to, objects, morphisms)
}

/// `hom(B, g) : hom(B, C) → hom(B, D)` for `g : C → D`.
pub fn postcompose(g: &FMap, from: &HomObject, to: &HomObject) -> Result<FMap> {
    let k = &from.keys;
    let mut objects = Vec::with_capacity(k.objects.len());
    for h in &k.objects {
        objects.push(lookup(to.keys.object_of(&g.loose.after(h)?), "postcomposite")?);
    }
    let mut morphisms = Vec::with_capacity(k.morphisms.len());
    for t in &k.morphisms {
        let whiskered = crate::fincat::NatTrans {
            source: g.loose.after(&t.source)?,
            target: g.loose.after(&t.target)?,
            components: t.components.iter().map(|&c| g.loose.mor(c)).collect(),
        };
        morphisms.push(lookup(to.keys.morphism_of(&whiskered), "whiskered transformation")?);
    }
    square(from, to, objects, morphisms)
}

fn square(from: &HomObject, to: &HomObject, objects: Vec<usize>, morphisms: Vec<usize>) -> Result<FMap> {
    let loose = FiniteFunctor::new(from.keys.cat.clone(), to.keys.cat.clone(), objects, morphisms)?;
    FMap::from_loose(&from.object, &to.object, loose)
        .ok_or_else(|| Error::Invalid("induced map does not preserve tight objects".into()))
}

/// `Sq(f, g)` and `⟨f, g⟩ : hom(B, C) → Sq(f, g)` for `f : A → B`, `g : C → D`.
#[derive(Clone, Debug)]
pub struct GapProblem {
    pub hom_bc: HomObject,
    pub hom_ac: HomObject,
    pub hom_bd: HomObject,
    pub hom_ad: HomObject,
    /// `hom(f, C)`
    pub pre_c: FMap,
    /// `hom(B, g)`
    pub post_b: FMap,
    pub pullback: Pullback,
    pub square: FObject,
    pub gap: FMap,
}

pub fn gap_map(f: &FMap, g: &FMap, base: Base, bound: usize) -> Result<GapProblem> {
    for x in [&f.source, &f.target, &g.source, &g.target] {
        if !base.admits(x) {
            return Err(Error::ShapeMismatch("a non-chordate object in Cat".into()));
        }
    }
    let (a, b, c, d) = (&f.source, &f.target, &g.source, &g.target);
    let hom_bc = hom_object(b, c, bound)?;
    let hom_ac = hom_object(a, c, bound)?;
    let hom_bd = hom_object(b, d, bound)?;
    let hom_ad = hom_object(a, d, bound)?;
    let pre_c = precompose(f, &hom_bc, &hom_ac)?;
    let post_b = postcompose(g, &hom_bc, &hom_bd)?;
    let post_a = postcompose(g, &hom_ac, &hom_ad)?;
    let pre_d = precompose(f, &hom_bd, &hom_ad)?;
    let pullback = pullback_category(&post_a.loose, &pre_d.loose)?;
    let (acm, bdm) = (hom_ac.object.tight_mask(), hom_bd.object.tight_mask());
    let mask: Vec<bool> = pullback.objects.iter().map(|&(x, y)| acm[x] && bdm[y]).collect();
    let square = FObject::from_mask(pullback.cat.clone(), &mask);
    let loose = pullback.mediate(&pre_c.loose, &post_b.loose)?;
    let gap = FMap::from_loose(&hom_bc.object, &square, loose)
        .ok_or_else(|| Error::Invalid("gap map does not preserve tight objects".into()))?;
    Ok(GapProblem { hom_bc, hom_ac, hom_bd, hom_ad, pre_c, post_b, pullback, square, gap })
}

/// `f ⧄ g` with respect to R: `⟨f, g⟩ ∈ R`.
pub fn has_lifting(f: &FMap, g: &FMap, r: RClass, base: Base, bound: usize) -> Result<bool> {
    Ok(in_class(r, &gap_map(f, g, base, bound)?.gap))
}

/// `K ⊥ m` with respect to R: `hom(m, K) ∈ R`.
pub fn is_orthogonal(k: &FObject, m: &FMap, r: RClass, base: Base, bound: usize) -> Result<bool> {
    if !base.admits(k) || !base.admits(&m.source) || !base.admits(&m.target) {
        return Err(Error::ShapeMismatch("a non-chordate object in Cat".into()));
    }
    let from = hom_object(&m.target, k, bound)?;
    let to = hom_object(&m.source, k, bound)?;
    Ok(in_class(r, &precompose(m, &from, &to)?))
}

/// The unique map to the terminal object.
pub fn to_terminal(k: &FObject) -> FMap {
    let t = FObject::terminal();
    FMap::from_loose(k, &t, FiniteFunctor::to_terminal(&k.loose, &t.loose)).expect("the terminal object is tight")
}

/// The outcome of one bridge comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeCheck {
    pub orthogonal: bool,
    pub lifting: bool,
    /// The left projection after `⟨m, !_K⟩` equals `hom(m, K)`.
    pub factorization: bool,
}

impl BridgeCheck {
    pub fn holds(&self) -> bool {
        self.orthogonal == self.lifting && self.factorization
    }
}

/// Both sides of `K ⊥ m ⇔ m ⧄ !_K`, computed independently.
pub fn verify_bridge(k: &FObject, m: &FMap, r: RClass, base: Base, bound: usize) -> Result<BridgeCheck> {
    let orthogonal = is_orthogonal(k, m, r, base, bound)?;
    let problem = gap_map(m, &to_terminal(k), base, bound)?;
    let lifting = in_class(r, &problem.gap);
    let factorization = problem.pullback.left.after(&problem.gap.loose)? == problem.pre_c.loose;
    Ok(BridgeCheck { orthogonal, lifting, factorization })
}

fn chordate(c: FiniteCategory) -> FObject {
    FObject::chordate(Arc::new(c))
}

fn loose_only(c: FiniteCategory) -> FObject {
    FObject::loose_only(Arc::new(c))
}

fn generator(a: FObject, b: FObject, objects: Vec<usize>, morphisms: Vec<usize>) -> FMap {
    let loose = FiniteFunctor::new(a.loose.clone(), b.loose.clone(), objects, morphisms).expect("generator functor");
    FMap::from_loose(&a, &b, loose).expect("generator square")
}

/// The eight generators: `∅ → 1`, `2 → [1]`, `⇉ → [1]`, `2 → 1`, first on
/// tight objects, then on loose objects only.
pub fn generators() -> Vec<(String, FMap)> {
    let arrow = FiniteCategory::walking_arrow;
    let pair = FiniteCategory::parallel_pair;
    let two = || FiniteCategory::discrete(2);
    let point = FiniteCategory::terminal;
    let empty = FiniteCategory::empty;
    let arrow_id = |x: usize| arrow().identity(x);
    let arrow_f = arrow().hom(0, 1)[0];
    let mut out = Vec::new();
    for (tag, mk) in [("tight", chordate as fn(FiniteCategory) -> FObject), ("loose", loose_only)] {
        let name = |s: &str| format!("{s} ({tag})");
        out.push((name("empty to point"), generator(mk(empty()), mk(point()), vec![], vec![])));
        out.push((
            name("two points to arrow"),
            generator(mk(two()), mk(arrow()), vec![0, 1], vec![arrow_id(0), arrow_id(1)]),
        ));
        out.push((
            name("parallel pair to arrow"),
            generator(mk(pair()), mk(arrow()), vec![0, 1], vec![arrow_id(0), arrow_id(1), arrow_f, arrow_f]),
        ));
        out.push((name("two points to point"), generator(mk(two()), mk(point()), vec![0, 0], vec![0, 0])));
    }
    out
}

/// Lifting against every generator, with the failing ones named.
pub fn generator_lifting(g: &FMap, bound: usize) -> Result<Vec<(String, bool)>> {
    generators().into_iter().map(|(n, gen)| Ok((n, has_lifting(&gen, g, RClass::Iso, Base::F, bound)?))).collect()
}
