//! JSON form of finite categories and functors.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::category::{FiniteCategory, Morphism};
use super::functor::FiniteFunctor;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub id: String,
    pub src: String,
    pub dst: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeDoc {
    pub g: String,
    pub f: String,
    pub gf: String,
}

/// A category written out in full.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub compose: Vec<ComposeDoc>,
    /// object → identity morphism id
    pub identities: BTreeMap<String, String>,
}

/// Either a full document or the name of a standard category, such as
/// `"walking-arrow"`, `"chain:3"`, `"discrete:2"`, `"chaotic:2"`,
/// `"terminal"`, `"empty"` or `"parallel-pair"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategorySpec {
    Named(String),
    Full(CategoryDoc),
}

impl CategorySpec {
    pub fn build(&self) -> Result<FiniteCategory> {
        match self {
            CategorySpec::Named(n) => named_category(n),
            CategorySpec::Full(doc) => doc.build(),
        }
    }
}

pub fn named_category(name: &str) -> Result<FiniteCategory> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => {
            (h, Some(a.parse::<usize>().map_err(|_| Error::Parse(format!("bad size in {name:?}")))?))
        }
        None => (name, None),
    };
    Ok(match (head, arg) {
        ("empty", None) => FiniteCategory::empty(),
        ("terminal", None) => FiniteCategory::terminal(),
        ("walking-arrow", None) => FiniteCategory::walking_arrow(),
        ("parallel-pair", None) => FiniteCategory::parallel_pair(),
        ("three-chain", None) => FiniteCategory::chain(3),
        ("chain", Some(n)) => FiniteCategory::chain(n),
        ("discrete", Some(n)) => FiniteCategory::discrete(n),
        ("chaotic", Some(n)) => FiniteCategory::chaotic(n),
        _ => return Err(Error::Parse(format!("unknown category {name:?}"))),
    })
}

impl CategoryDoc {
    /// Builds and validates the category, reporting the first violated axiom.
    pub fn build(&self) -> Result<FiniteCategory> {
        let cat = self.build_unchecked()?;
        cat.validate().map_err(Error::InvalidCategory)?;
        Ok(cat)
    }

    /// Resolves names without checking the category axioms.
    pub fn build_unchecked(&self) -> Result<FiniteCategory> {
        let obj = |name: &str| {
            self.objects
                .iter()
                .position(|o| o == name)
                .ok_or_else(|| Error::Parse(format!("unknown object {name:?}")))
        };
        let mor = |name: &str| {
            self.morphisms
                .iter()
                .position(|m| m.id == name)
                .ok_or_else(|| Error::Parse(format!("unknown morphism {name:?}")))
        };
        let mut morphisms = Vec::with_capacity(self.morphisms.len());
        for m in &self.morphisms {
            morphisms.push(Morphism { name: m.id.clone(), src: obj(&m.src)?, dst: obj(&m.dst)? });
        }
        let mut identities = Vec::with_capacity(self.objects.len());
        for o in &self.objects {
            let id = self
                .identities
                .get(o)
                .ok_or_else(|| Error::InvalidCategory(super::CategoryViolation::MissingIdentity { object: o.clone() }))?;
            identities.push(mor(id)?);
        }
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for c in &self.compose {
            let (g, f, gf) = (mor(&c.g)?, mor(&c.f)?, mor(&c.gf)?);
            if table[g * m + f].replace(gf).is_some_and(|old| old != gf) {
                return Err(Error::Parse(format!("conflicting entries for {} ∘ {}", c.g, c.f)));
            }
        }
        Ok(FiniteCategory::from_raw_parts(self.objects.clone(), morphisms, identities, table))
    }

    pub fn from_category(cat: &FiniteCategory) -> CategoryDoc {
        let name = |f: usize| cat.morphism(f).name.clone();
        let mut compose = Vec::new();
        for (i, entry) in cat.raw_table().iter().enumerate() {
            if let Some(gf) = entry {
                let (g, f) = (i / cat.num_morphisms(), i % cat.num_morphisms());
                compose.push(ComposeDoc { g: name(g), f: name(f), gf: name(*gf) });
            }
        }
        CategoryDoc {
            objects: cat.objects().to_vec(),
            morphisms: cat
                .morphisms()
                .iter()
                .map(|m| MorphismDoc {
                    id: m.name.clone(),
                    src: cat.object_name(m.src).to_string(),
                    dst: cat.object_name(m.dst).to_string(),
                })
                .collect(),
            compose,
            identities: (0..cat.num_objects())
                .map(|x| (cat.object_name(x).to_string(), name(cat.identity(x))))
                .collect(),
        }
    }
}

/// A functor given by object and morphism name maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorDoc {
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

impl FunctorDoc {
    /// Resolves the maps against `source` and `target`. Identities may be
    /// omitted from the morphism map.
    pub fn build(&self, source: &Arc<FiniteCategory>, target: &Arc<FiniteCategory>) -> Result<FiniteFunctor> {
        let tobj = |n: &str| target.find_object(n).ok_or_else(|| Error::Parse(format!("unknown object {n:?}")));
        let tmor = |n: &str| target.find_morphism(n).ok_or_else(|| Error::Parse(format!("unknown morphism {n:?}")));
        let mut objects = Vec::with_capacity(source.num_objects());
        for x in 0..source.num_objects() {
            let name = source.object_name(x);
            let y = self.objects.get(name).ok_or_else(|| Error::Parse(format!("object {name:?} is not mapped")))?;
            objects.push(tobj(y)?);
        }
        let mut morphisms = Vec::with_capacity(source.num_morphisms());
        for f in 0..source.num_morphisms() {
            let name = &source.morphism(f).name;
            morphisms.push(match self.morphisms.get(name) {
                Some(g) => tmor(g)?,
                None if source.is_identity(f) => target.identity(objects[source.src(f)]),
                None => return Err(Error::Parse(format!("morphism {name:?} is not mapped"))),
            });
        }
        FiniteFunctor::new(source.clone(), target.clone(), objects, morphisms)
    }

    pub fn from_functor(f: &FiniteFunctor) -> FunctorDoc {
        let (a, b) = (&f.source, &f.target);
        FunctorDoc {
            objects: (0..a.num_objects())
                .map(|x| (a.object_name(x).to_string(), b.object_name(f.obj(x)).to_string()))
                .collect(),
            morphisms: (0..a.num_morphisms())
                .map(|m| (a.morphism(m).name.clone(), b.morphism(f.mor(m)).name.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for name in ["walking-arrow", "parallel-pair", "chain:4", "chaotic:3", "empty"] {
            let cat = named_category(name).unwrap();
            let doc = CategoryDoc::from_category(&cat);
            let text = serde_json::to_string(&doc).unwrap();
            let back: CategorySpec = serde_json::from_str(&text).unwrap();
            assert_eq!(back.build().unwrap(), cat);
        }
    }

    #[test]
    fn missing_composite_is_reported() {
        let mut doc = CategoryDoc::from_category(&FiniteCategory::walking_arrow());
        doc.compose.pop();
        assert!(matches!(doc.build(), Err(Error::InvalidCategory(_))));
    }
}
