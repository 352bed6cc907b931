//! Standard small categories and a keyed builder used by every construction
//! that produces a category of "things" (cones, functors, transformations).

use std::collections::BTreeMap;
use std::sync::Arc;

use super::category::{FiniteCategory, MorId, Morphism, ObjId};
use super::functor::FiniteFunctor;
use crate::error::{Error, Result};

/// A category built from keyed objects and morphisms, keeping the keys.
#[derive(Clone, Debug)]
pub struct Built<O, M> {
    pub cat: Arc<FiniteCategory>,
    pub objects: Vec<O>,
    pub morphisms: Vec<M>,
    obj_index: BTreeMap<O, ObjId>,
    mor_index: BTreeMap<M, MorId>,
}

impl<O: Ord + Clone, M: Ord + Clone> Built<O, M> {
    pub fn object_of(&self, key: &O) -> Option<ObjId> {
        self.obj_index.get(key).copied()
    }

    pub fn morphism_of(&self, key: &M) -> Option<MorId> {
        self.mor_index.get(key).copied()
    }
}

/// Builds a category whose objects and morphisms are arbitrary ordered keys.
///
/// `morphisms` must contain the identity of every object and be closed under
/// `compose`; composition is evaluated on keys and looked up.
pub fn build_category<O, M>(
    objects: Vec<O>,
    morphisms: Vec<(M, ObjId, ObjId)>,
    identity_of: impl Fn(ObjId) -> M,
    compose: impl Fn(&M, &M) -> M,
    obj_name: impl Fn(&O) -> String,
    mor_name: impl Fn(&M) -> String,
) -> Result<Built<O, M>>
where
    O: Ord + Clone,
    M: Ord + Clone,
{
    let obj_index: BTreeMap<O, ObjId> = objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
    if obj_index.len() != objects.len() {
        return Err(Error::Invalid("duplicate object keys".into()));
    }
    let mor_index: BTreeMap<M, MorId> =
        morphisms.iter().enumerate().map(|(i, (m, _, _))| (m.clone(), i)).collect();
    if mor_index.len() != morphisms.len() {
        return Err(Error::Invalid("duplicate morphism keys".into()));
    }
    let mut identities = Vec::with_capacity(objects.len());
    for x in 0..objects.len() {
        let id = identity_of(x);
        let i = *mor_index
            .get(&id)
            .ok_or_else(|| Error::Invalid(format!("identity of {} missing", obj_name(&objects[x]))))?;
        identities.push(i);
    }
    let n = morphisms.len();
    let mut table = vec![None; n * n];
    for g in 0..n {
        for f in 0..n {
            if morphisms[f].2 == morphisms[g].1 {
                let key = compose(&morphisms[g].0, &morphisms[f].0);
                let gf = *mor_index.get(&key).ok_or_else(|| {
                    Error::Invalid(format!(
                        "composite {} ∘ {} is not among the listed morphisms",
                        mor_name(&morphisms[g].0),
                        mor_name(&morphisms[f].0)
                    ))
                })?;
                table[g * n + f] = Some(gf);
            }
        }
    }
    let cat = FiniteCategory::from_raw_parts(
        objects.iter().map(&obj_name).collect(),
        morphisms
            .iter()
            .map(|(m, s, d)| Morphism { name: mor_name(m), src: *s, dst: *d })
            .collect(),
        identities,
        table,
    );
    cat.validate().map_err(Error::InvalidCategory)?;
    Ok(Built { cat: Arc::new(cat), objects, morphisms: morphisms.into_iter().map(|m| m.0).collect(), obj_index, mor_index })
}

fn id_name(o: &str) -> String {
    format!("id_{o}")
}

impl FiniteCategory {
    pub fn empty() -> FiniteCategory {
        FiniteCategory::from_raw_parts(vec![], vec![], vec![], vec![])
    }

    pub fn terminal() -> FiniteCategory {
        Self::discrete_named(&["*"])
    }

    pub fn discrete(n: usize) -> FiniteCategory {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::discrete_named(&names.iter().map(String::as_str).collect::<Vec<_>>())
    }

    pub fn discrete_named(names: &[&str]) -> FiniteCategory {
        Self::preorder_named(names, |a, b| a == b)
    }

    /// `0 → 1`.
    pub fn walking_arrow() -> FiniteCategory {
        Self::chain(2)
    }

    /// The total order `0 < 1 < … < n-1` as a category.
    pub fn chain(n: usize) -> FiniteCategory {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::preorder_named(&names.iter().map(String::as_str).collect::<Vec<_>>(), |a, b| a <= b)
    }

    /// Every hom-set a singleton.
    pub fn chaotic(n: usize) -> FiniteCategory {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::preorder_named(&names.iter().map(String::as_str).collect::<Vec<_>>(), |_, _| true)
    }

    /// A preorder; `leq` must be reflexive and transitive.
    pub fn preorder_named(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> FiniteCategory {
        let n = names.len();
        let mut morphisms = Vec::new();
        let mut index = vec![usize::MAX; n * n];
        let mut identities = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    index[a * n + b] = morphisms.len();
                    if a == b {
                        identities[a] = morphisms.len();
                    }
                    let name = if a == b { id_name(names[a]) } else { format!("{}≤{}", names[a], names[b]) };
                    morphisms.push(Morphism { name, src: a, dst: b });
                }
            }
        }
        let srcs: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.src, m.dst)).collect();
        FiniteCategory::from_composition(names.iter().map(|s| s.to_string()).collect(), morphisms, identities, |g, f| {
            index[srcs[f].0 * n + srcs[g].1]
        })
        .expect("preorder relation must be reflexive and transitive")
    }

    /// Two parallel arrows `u, v : 0 ⇉ 1`.
    pub fn parallel_pair() -> FiniteCategory {
        FiniteCategory::from_composition(
            vec!["0".into(), "1".into()],
            vec![
                Morphism { name: "id_0".into(), src: 0, dst: 0 },
                Morphism { name: "id_1".into(), src: 1, dst: 1 },
                Morphism { name: "u".into(), src: 0, dst: 1 },
                Morphism { name: "v".into(), src: 0, dst: 1 },
            ],
            vec![0, 1],
            |g, f| if g <= 1 { f } else { g },
        )
        .expect("parallel pair")
    }

    /// A one-object category from a monoid multiplication table; element 0 is the unit.
    pub fn monoid(names: &[&str], mult: impl Fn(usize, usize) -> usize) -> Result<FiniteCategory> {
        let morphisms = names
            .iter()
            .map(|n| Morphism { name: n.to_string(), src: 0, dst: 0 })
            .collect();
        FiniteCategory::from_composition(vec!["*".into()], morphisms, vec![0], mult)
    }

    /// Cartesian product with object names `(a,b)`.
    pub fn product(a: &FiniteCategory, b: &FiniteCategory) -> FiniteCategory {
        let (na, nb) = (a.num_objects(), b.num_objects());
        let (ma, mb) = (a.num_morphisms(), b.num_morphisms());
        let objects = (0..na)
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", a.object_name(x), b.object_name(y)))
            .collect();
        let mut morphisms = Vec::with_capacity(ma * mb);
        for f in 0..ma {
            for g in 0..mb {
                morphisms.push(Morphism {
                    name: format!("({},{})", a.morphism(f).name, b.morphism(g).name),
                    src: a.src(f) * nb + b.src(g),
                    dst: a.dst(f) * nb + b.dst(g),
                });
            }
        }
        let identities = (0..na)
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .map(|(x, y)| a.identity(x) * mb + b.identity(y))
            .collect();
        FiniteCategory::from_composition(objects, morphisms, identities, |p, q| {
            a.comp(p / mb, q / mb) * mb + b.comp(p % mb, q % mb)
        })
        .expect("product of categories")
    }
}

/// Projections out of [`FiniteCategory::product`].
pub fn product_projections(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    prod: &Arc<FiniteCategory>,
) -> (FiniteFunctor, FiniteFunctor) {
    let nb = b.num_objects();
    let mb = b.num_morphisms();
    let p1 = FiniteFunctor::new_unchecked(
        prod.clone(),
        a.clone(),
        (0..prod.num_objects()).map(|o| o / nb).collect(),
        (0..prod.num_morphisms()).map(|m| m / mb).collect(),
    );
    let p2 = FiniteFunctor::new_unchecked(
        prod.clone(),
        b.clone(),
        (0..prod.num_objects()).map(|o| o % nb).collect(),
        (0..prod.num_morphisms()).map(|m| m % mb).collect(),
    );
    (p1, p2)
}

/// Iterated product `A^n`; `A^0` is terminal. Objects of `A^n` are indexed in
/// lexicographic order of tuples, matching [`tuple_index`].
pub fn power(a: &FiniteCategory, n: usize) -> FiniteCategory {
    let mut acc = FiniteCategory::terminal();
    for i in 0..n {
        acc = if i == 0 { a.clone() } else { FiniteCategory::product(&acc, a) };
    }
    acc
}

/// Index of a tuple of indices in a lexicographically ordered power.
pub fn tuple_index(parts: &[usize], base: usize) -> usize {
    parts.iter().fold(0, |acc, &p| acc * base + p)
}

/// Inverse of [`tuple_index`].
pub fn tuple_parts(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut parts = vec![0; len];
    for slot in parts.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    parts
}

/// The full subcategory on `keep` (in the given order) with its inclusion.
pub fn full_subcategory(cat: &Arc<FiniteCategory>, keep: &[ObjId]) -> (Arc<FiniteCategory>, FiniteFunctor) {
    let n = cat.num_objects();
    let mut new_index = vec![usize::MAX; n];
    for (i, &x) in keep.iter().enumerate() {
        new_index[x] = i;
    }
    let mut mors = Vec::new();
    for f in 0..cat.num_morphisms() {
        let (s, d) = (cat.src(f), cat.dst(f));
        if new_index[s] != usize::MAX && new_index[d] != usize::MAX {
            mors.push(f);
        }
    }
    let mut mor_index = vec![usize::MAX; cat.num_morphisms()];
    for (i, &f) in mors.iter().enumerate() {
        mor_index[f] = i;
    }
    let m = mors.len();
    let mut table = vec![None; m * m];
    for (gi, &g) in mors.iter().enumerate() {
        for (fi, &f) in mors.iter().enumerate() {
            if cat.dst(f) == cat.src(g) {
                table[gi * m + fi] = Some(mor_index[cat.comp(g, f)]);
            }
        }
    }
    let sub = FiniteCategory::from_raw_parts(
        keep.iter().map(|&x| cat.object_name(x).to_string()).collect(),
        mors.iter()
            .map(|&f| Morphism { name: cat.morphism(f).name.clone(), src: new_index[cat.src(f)], dst: new_index[cat.dst(f)] })
            .collect(),
        keep.iter().map(|&x| mor_index[cat.identity(x)]).collect(),
        table,
    );
    let sub = Arc::new(sub);
    let incl = FiniteFunctor::new_unchecked(sub.clone(), cat.clone(), keep.to_vec(), mors);
    (sub, incl)
}
