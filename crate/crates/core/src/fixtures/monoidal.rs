//! The product-fragment sketch for monoids and its models from small strict
//! monoidal categories.
//!
//! The carrier has objects `1, M, M², M³`. A 1-cell `Mⁿ → Mᵏ` is a monotone
//! partial map `[n] ⇀ [k]`; output `j` is the tensor, in order, of the inputs
//! sent to `j`. Projections (every output hit exactly once) are tight.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fcat::{AmbCell, FAmbient, FFunctor, FObject, FiniteFCategory, LooseMap, LooseTransformation, OneCell, TwoCategory, Weakness};
use crate::fincat::{
    build_category, power, search_functors, tuple_index, tuple_parts, FiniteCategory, FiniteFunctor, FunctorSearch,
    MorId, ObjId,
};
use crate::sketch::{enumerate_model_transformations, Model, Sketch, SketchCone};

use super::{cat, locally_discrete, poset_functor};

pub const MAX_ARITY: usize = 3;

/// A monotone partial map `[src] ⇀ [dst]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialMap {
    pub src: usize,
    pub dst: usize,
    pub map: Vec<Option<usize>>,
}

impl PartialMap {
    fn then(&self, g: &PartialMap) -> PartialMap {
        PartialMap { src: self.src, dst: g.dst, map: self.map.iter().map(|i| i.and_then(|x| g.map[x])).collect() }
    }

    pub fn is_projection(&self) -> bool {
        (0..self.dst).all(|j| self.map.iter().filter(|&&i| i == Some(j)).count() == 1)
    }

    fn all(n: usize, k: usize) -> Vec<PartialMap> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p: Vec<Option<usize>>| {
                    let floor = p.iter().rev().find_map(|&x| x).unwrap_or(0);
                    std::iter::once(None).chain((floor..k).map(Some)).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|map| PartialMap { src: n, dst: k, map }).collect()
    }
}

/// The product-fragment sketch with its 1-cells labelled by partial maps.
pub struct ProductFragment {
    pub sketch: Sketch,
    /// Largest power of `M` in the carrier.
    pub arity: usize,
    maps: Vec<Vec<PartialMap>>,
}

impl ProductFragment {
    pub fn new() -> ProductFragment {
        Self::with_arity(MAX_ARITY)
    }

    /// The fragment on `1, M, …, Mᵏ`; below arity 3 associativity is not
    /// expressed.
    pub fn with_arity(arity: usize) -> ProductFragment {
        let n = arity + 1;
        let mut morphisms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                morphisms.extend(PartialMap::all(a, b).into_iter().map(|p| (p, a, b)));
            }
        }
        let built = build_category(
            (0..n).collect::<Vec<_>>(),
            morphisms,
            |x| PartialMap { src: x, dst: x, map: (0..x).map(Some).collect() },
            |g, f| f.then(g),
            |x| if *x == 0 { "1".into() } else if *x == 1 { "M".into() } else { format!("M{x}") },
            |p| format!("{:?}", p.map.iter().map(|i| i.map_or(-1, |x| x as i64)).collect::<Vec<_>>()),
        )
        .expect("partial maps form a category");
        let base = (*built.cat).clone();
        let carrier = locally_discrete(base, |m| built.morphisms[m].is_projection());
        let maps = (0..n * n)
            .map(|h| built.cat.hom(h / n, h % n).iter().map(|&m| built.morphisms[m].clone()).collect())
            .collect();
        let mut frag = ProductFragment { sketch: Sketch::bare(carrier.clone()), arity, maps };
        let cones = (0..=arity).filter(|&k| k != 1).map(|k| frag.product_cone(k)).collect();
        frag.sketch = Sketch::new(carrier, cones).expect("product cones");
        frag
    }

    pub fn carrier(&self) -> &Arc<FiniteFCategory> {
        &self.sketch.carrier
    }

    pub fn map_of(&self, f: &OneCell) -> &PartialMap {
        &self.maps[f.src * (self.arity + 1) + f.dst][f.idx]
    }

    pub fn find(&self, src: usize, dst: usize, map: &[Option<usize>]) -> OneCell {
        let idx = self.maps[src * (self.arity + 1) + dst].iter().position(|p| p.map == map).expect("monotone partial map");
        OneCell { src, dst, idx }
    }

    /// `M² → M`.
    pub fn tensor(&self) -> OneCell {
        self.find(2, 1, &[Some(0), Some(0)])
    }

    /// `1 → M`.
    pub fn unit(&self) -> OneCell {
        self.find(0, 1, &[])
    }

    /// `πⱼ : Mⁿ → M`.
    pub fn projection(&self, n: usize, j: usize) -> OneCell {
        let map: Vec<Option<usize>> = (0..n).map(|i| (i == j).then_some(0)).collect();
        self.find(n, 1, &map)
    }

    /// The cone exhibiting `Mⁿ` as an n-fold product of `M`.
    fn product_cone(&self, n: usize) -> SketchCone {
        let shape = locally_discrete(FiniteCategory::discrete(n), |_| true);
        let weight = poset_functor(&shape, &vec![FObject::terminal(); n], |_| vec![]);
        let c = self.carrier();
        let diagram = FFunctor::build_unchecked(&shape, |_| 1, |_| c.unit(1), |_| c.id_cell(&c.unit(1)));
        let one = Arc::new(FiniteCategory::terminal());
        let gamma = (0..n)
            .map(|j| {
                let pi = self.projection(n, j);
                let hom = self.carrier().hom_cat(n, 1).cat.clone();
                FiniteFunctor::new(one.clone(), hom.clone(), vec![pi.idx], vec![hom.identity(pi.idx)]).expect("γ")
            })
            .collect();
        SketchCone { weight, diagram, apex: n, gamma }
    }
}

impl Default for ProductFragment {
    fn default() -> Self {
        Self::new()
    }
}

/// A small strict monoidal category with a set of tight objects.
#[derive(Clone, Debug)]
pub struct MonoidalCategory {
    pub name: &'static str,
    pub cat: Arc<FiniteCategory>,
    pub tensor: FiniteFunctor,
    pub unit: ObjId,
    pub tight: Vec<bool>,
}

impl MonoidalCategory {
    pub fn new(
        name: &'static str,
        c: FiniteCategory,
        tensor_obj: impl Fn(ObjId, ObjId) -> ObjId,
        tensor_mor: impl Fn(MorId, MorId) -> MorId,
        unit: ObjId,
    ) -> Result<MonoidalCategory> {
        let c = cat(c);
        let sq = cat(FiniteCategory::product(&c, &c));
        let (n, m) = (c.num_objects(), c.num_morphisms());
        let objects = (0..n * n).map(|o| tensor_obj(o / n, o % n)).collect();
        let morphisms = (0..m * m).map(|f| tensor_mor(f / m, f % m)).collect();
        let tensor = FiniteFunctor::new(sq, c.clone(), objects, morphisms)?;
        let tight = vec![true; n];
        let mc = MonoidalCategory { name, cat: c, tensor, unit, tight };
        mc.validate()?;
        Ok(mc)
    }

    /// A thin monoidal category: the tensor on morphisms is forced.
    fn thin(name: &'static str, c: FiniteCategory, op: impl Fn(ObjId, ObjId) -> ObjId, unit: ObjId) -> MonoidalCategory {
        let c2 = c.clone();
        let mor = |f: MorId, g: MorId| {
            let (s, d) = (op(c2.src(f), c2.src(g)), op(c2.dst(f), c2.dst(g)));
            *c2.hom(s, d).first().expect("tensor is monotone")
        };
        MonoidalCategory::new(name, c, &op, mor, unit).expect("strict monoidal")
    }

    pub fn obj(&self, a: ObjId, b: ObjId) -> ObjId {
        self.tensor.obj(a * self.cat.num_objects() + b)
    }

    pub fn mor(&self, f: MorId, g: MorId) -> MorId {
        self.tensor.mor(f * self.cat.num_morphisms() + g)
    }

    /// Strict associativity and unitality.
    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.cat.num_objects(), self.cat.num_morphisms());
        let i = self.cat.identity(self.unit);
        for f in 0..m {
            if self.mor(i, f) != f || self.mor(f, i) != f {
                return Err(Error::Invalid(format!("{}: unit law fails", self.name)));
            }
            for g in 0..m {
                for h in 0..m {
                    if self.mor(self.mor(f, g), h) != self.mor(f, self.mor(g, h)) {
                        return Err(Error::Invalid(format!("{}: associativity fails", self.name)));
                    }
                }
            }
        }
        if self.tight.len() != n {
            return Err(Error::Invalid(format!("{}: tight mask has the wrong length", self.name)));
        }
        Ok(())
    }

    fn fold_obj(&self, xs: impl Iterator<Item = ObjId>) -> ObjId {
        xs.fold(self.unit, |acc, x| self.obj(acc, x))
    }

    fn fold_mor(&self, fs: impl Iterator<Item = MorId>) -> MorId {
        fs.fold(self.cat.identity(self.unit), |acc, f| self.mor(acc, f))
    }

    /// `Aⁿ` with the tuples of tight objects as tight part.
    pub fn power_obj(&self, n: usize) -> FObject {
        let p = cat(power(&self.cat, n));
        let k = self.cat.num_objects();
        let mask: Vec<bool> = (0..p.num_objects()).map(|o| tuple_parts(o, k, n).iter().all(|&x| self.tight[x])).collect();
        FObject::from_mask(p, &mask)
    }

    fn act(&self, p: &PartialMap, src: &FObject, dst: &FObject) -> LooseMap {
        let (k, m) = (self.cat.num_objects(), self.cat.num_morphisms());
        let objects = (0..src.loose.num_objects())
            .map(|o| {
                let parts = tuple_parts(o, k, p.src);
                let out: Vec<ObjId> = (0..p.dst)
                    .map(|j| self.fold_obj((0..p.src).filter(|&i| p.map[i] == Some(j)).map(|i| parts[i])))
                    .collect();
                tuple_index(&out, k)
            })
            .collect();
        let morphisms = (0..src.loose.num_morphisms())
            .map(|f| {
                let parts = tuple_parts(f, m, p.src);
                let out: Vec<MorId> = (0..p.dst)
                    .map(|j| self.fold_mor((0..p.src).filter(|&i| p.map[i] == Some(j)).map(|i| parts[i])))
                    .collect();
                tuple_index(&out, m)
            })
            .collect();
        let functor = FiniteFunctor::new(src.loose.clone(), dst.loose.clone(), objects, morphisms).expect("tensor action");
        LooseMap::new(src.clone(), dst.clone(), functor).expect("typed")
    }

    /// The model of the product fragment with value `A` at `M`.
    pub fn model(&self, frag: &ProductFragment) -> Model {
        let objs: Vec<FObject> = (0..=frag.arity).map(|n| self.power_obj(n)).collect();
        let c = frag.carrier();
        FFunctor::build(
            c,
            &FAmbient,
            |n| objs[n].clone(),
            |f| self.act(frag.map_of(f), &objs[f.src], &objs[f.dst]),
            |a| {
                let f = self.act(frag.map_of(&c.cell_source(a)), &objs[a.src], &objs[a.dst]);
                let components = (0..objs[a.src].loose.num_objects()).map(|x| objs[a.dst].loose.identity(f.functor.obj(x))).collect();
                AmbCell { src: f.clone(), dst: f, components }
            },
        )
        .expect("monoidal model")
    }
}

pub fn monoidal_fixtures() -> Vec<MonoidalCategory> {
    let add2 = |a: usize, b: usize| (a + b) % 2;
    let z2 = FiniteCategory::discrete(2);
    let bz2 = FiniteCategory::monoid(&["e", "g"], add2).expect("Z/2");
    vec![
        MonoidalCategory::thin("terminal", FiniteCategory::terminal(), |_, _| 0, 0),
        MonoidalCategory::thin("join2", FiniteCategory::chain(2), usize::max, 0),
        MonoidalCategory::thin("meet2", FiniteCategory::chain(2), usize::min, 1),
        MonoidalCategory::thin("z2", z2, add2, 0),
        MonoidalCategory::new("bz2", bz2, |_, _| 0, add2, 0).expect("strict monoidal"),
        MonoidalCategory::thin("chain3-max", FiniteCategory::chain(3), usize::max, 0),
        MonoidalCategory::thin("chain3-min", FiniteCategory::chain(3), usize::min, 2),
        MonoidalCategory::thin("chaotic2", FiniteCategory::chaotic(2), add2, 0),
    ]
}

pub fn monoidal_fixture(name: &str) -> MonoidalCategory {
    monoidal_fixtures().into_iter().find(|m| m.name == name).expect("known monoidal fixture")
}

/// A lax monoidal functor between strict monoidal categories.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LaxMonoidalFunctor {
    pub functor: FiniteFunctor,
    /// `F₂(a, b) : Fa ⊗ Fb → F(a ⊗ b)`, indexed by `a * |A| + b`.
    pub mu: Vec<MorId>,
    /// `F₀ : I → F(I)`.
    pub eta: MorId,
}

/// All lax monoidal functors `a → b`, by direct search over `(F, F₂, F₀)`.
pub fn enumerate_lax_monoidal(a: &MonoidalCategory, b: &MonoidalCategory, bound: usize) -> Result<Vec<LaxMonoidalFunctor>> {
    let mut out = Vec::new();
    let na = a.cat.num_objects();
    let bc = &b.cat;
    for f in search_functors(&a.cat, &b.cat, &FunctorSearch::default(), bound)? {
        let pairs: Vec<(ObjId, ObjId)> = (0..na).flat_map(|x| (0..na).map(move |y| (x, y))).collect();
        let options: Vec<Vec<MorId>> =
            pairs.iter().map(|&(x, y)| bc.hom(b.obj(f.obj(x), f.obj(y)), f.obj(a.obj(x, y))).to_vec()).collect();
        let etas = bc.hom(b.unit, f.obj(a.unit)).to_vec();
        let mut mus: Vec<Vec<MorId>> = vec![Vec::new()];
        for opt in &options {
            mus = mus
                .into_iter()
                .flat_map(|p| {
                    opt.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
            if mus.len() > bound {
                return Err(Error::bound("lax monoidal structures", bound));
            }
        }
        for mu in &mus {
            for &eta in &etas {
                let cand = LaxMonoidalFunctor { functor: f.clone(), mu: mu.clone(), eta };
                if is_lax_monoidal(a, b, &cand) {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The lax monoidal functor axioms.
pub fn is_lax_monoidal(a: &MonoidalCategory, b: &MonoidalCategory, l: &LaxMonoidalFunctor) -> bool {
    let na = a.cat.num_objects();
    let f = &l.functor;
    let bc = &b.cat;
    let mu = |x: ObjId, y: ObjId| l.mu[x * na + y];
    let id = |x: ObjId| bc.identity(f.obj(x));
    for u in 0..a.cat.num_morphisms() {
        for v in 0..a.cat.num_morphisms() {
            let (x, y) = (a.cat.src(u), a.cat.src(v));
            let (x2, y2) = (a.cat.dst(u), a.cat.dst(v));
            let lhs = bc.comp(mu(x2, y2), b.mor(f.mor(u), f.mor(v)));
            let rhs = bc.comp(f.mor(a.mor(u, v)), mu(x, y));
            if lhs != rhs {
                return false;
            }
        }
    }
    for x in 0..na {
        for y in 0..na {
            for z in 0..na {
                let lhs = bc.comp(mu(a.obj(x, y), z), b.mor(mu(x, y), id(z)));
                let rhs = bc.comp(mu(x, a.obj(y, z)), b.mor(id(x), mu(y, z)));
                if lhs != rhs {
                    return false;
                }
            }
        }
        if bc.comp(mu(a.unit, x), b.mor(l.eta, id(x))) != id(x) || bc.comp(mu(x, a.unit), b.mor(id(x), l.eta)) != id(x) {
            return false;
        }
    }
    true
}

/// Reads a transformation of monoidal models as lax monoidal functor data.
pub fn lax_monoidal_of(
    frag: &ProductFragment,
    a: &MonoidalCategory,
    phi: &crate::fcat::LooseTransformation<FAmbient>,
) -> LaxMonoidalFunctor {
    let na = a.cat.num_objects();
    let cell = phi.cell(&frag.tensor());
    let mu = (0..na * na).map(|o| cell.components[tuple_index(&[o / na, o % na], na)]).collect();
    LaxMonoidalFunctor { functor: phi.components[1].functor.clone(), mu, eta: phi.cell(&frag.unit()).components[0] }
}

/// Source and target fixtures joined by a non-strict colax transformation.
pub const COLAX_PAIRS: [(&str, &str); 6] = [
    ("meet2", "meet2"),
    ("join2", "meet2"),
    ("chain3-max", "meet2"),
    ("terminal", "meet2"),
    ("meet2", "chain3-min"),
    ("join2", "chain3-min"),
];

/// Source and target fixtures joined by a non-strict lax transformation.
pub const LAX_PAIRS: [(&str, &str); 6] = [
    ("join2", "join2"),
    ("meet2", "join2"),
    ("terminal", "join2"),
    ("join2", "chain3-max"),
    ("meet2", "chain3-max"),
    ("chain3-min", "join2"),
];

/// For each pair in [`COLAX_PAIRS`] (`w = c`) or [`LAX_PAIRS`] (otherwise),
/// the first loose `(s, w)` transformation between the two models that is
/// not strict, if any.
pub fn loose_model_morphisms(
    frag: &ProductFragment,
    w: Weakness,
    bound: usize,
) -> Result<Vec<(String, LooseTransformation<FAmbient>)>> {
    let mut out = Vec::new();
    let pairs = if w == Weakness::C { COLAX_PAIRS } else { LAX_PAIRS };
    for (a, b) in pairs {
        let (m, n) = (monoidal_fixture(a).model(frag), monoidal_fixture(b).model(frag));
        let found = enumerate_model_transformations(&m, &n, w, bound)?
            .into_iter()
            .find(|phi| !phi.cells.iter().flatten().all(|c| FAmbient.is_identity_cell(c)));
        if let Some(phi) = found {
            out.push((format!("{a}→{b}"), phi));
        }
    }
    Ok(out)
}
