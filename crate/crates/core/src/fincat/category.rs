use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ObjId = usize;
pub type MorId = usize;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub name: String,
    pub src: ObjId,
    pub dst: ObjId,
}

/// A located failure of the category axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryViolation {
    DanglingMorphism { morphism: String },
    MissingIdentity { object: String },
    IdentityWrongType { object: String, morphism: String },
    MissingComposite { g: String, f: String },
    CompositeWrongType { g: String, f: String, gf: String },
    SpuriousComposite { g: String, f: String },
    LeftIdentity { f: String },
    RightIdentity { f: String },
    Associativity { h: String, g: String, f: String },
    TableSize { expected: usize, found: usize },
}

impl fmt::Display for CategoryViolation {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CategoryViolation::*;
        match self {
            DanglingMorphism { morphism } => write!(fm, "morphism {morphism} has an unknown endpoint"),
            MissingIdentity { object } => write!(fm, "object {object} has no identity"),
            IdentityWrongType { object, morphism } => {
                write!(fm, "identity {morphism} of {object} is not an endomorphism of it")
            }
            MissingComposite { g, f } => write!(fm, "composite {g}∘{f} is undefined"),
            CompositeWrongType { g, f, gf } => write!(fm, "composite {g}∘{f} = {gf} has the wrong type"),
            SpuriousComposite { g, f } => write!(fm, "composite {g}∘{f} is defined on a non-composable pair"),
            LeftIdentity { f } => write!(fm, "left identity law fails at {f}"),
            RightIdentity { f } => write!(fm, "right identity law fails at {f}"),
            Associativity { h, g, f } => write!(fm, "associativity fails at ({h}, {g}, {f})"),
            TableSize { expected, found } => {
                write!(fm, "composition table has {found} entries, expected {expected}")
            }
        }
    }
}

/// A finite category given by its full composition table.
///
/// `table[g * n + f]` holds `g ∘ f` whenever `dst(f) = src(g)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    table: Vec<Option<MorId>>,
    homs: Vec<Vec<MorId>>,
}

impl FiniteCategory {
    /// Builds a category without validating it. Use [`FiniteCategory::validate`]
    /// before relying on the axioms.
    pub fn from_raw_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        table: Vec<Option<MorId>>,
    ) -> Self {
        let n = objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, m) in morphisms.iter().enumerate() {
            if m.src < n && m.dst < n {
                homs[m.src * n + m.dst].push(i);
            }
        }
        FiniteCategory { objects, morphisms, identities, table, homs }
    }

    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        compose: impl IntoIterator<Item = (MorId, MorId, MorId)>,
    ) -> Result<Self> {
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for (g, f, gf) in compose {
            if g >= m || f >= m || gf >= m {
                return Err(Error::Invalid(format!("composition entry ({g}, {f}, {gf}) out of range")));
            }
            table[g * m + f] = Some(gf);
        }
        let cat = Self::from_raw_parts(objects, morphisms, identities, table);
        cat.validate().map_err(Error::InvalidCategory)?;
        Ok(cat)
    }

    /// Builds the table by calling `compose(g, f)` on every composable pair.
    pub fn from_composition(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        compose: impl Fn(MorId, MorId) -> MorId,
    ) -> Result<Self> {
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if morphisms[f].dst == morphisms[g].src {
                    table[g * m + f] = Some(compose(g, f));
                }
            }
        }
        let cat = Self::from_raw_parts(objects, morphisms, identities, table);
        cat.validate().map_err(Error::InvalidCategory)?;
        Ok(cat)
    }

    pub fn validate(&self) -> std::result::Result<(), CategoryViolation> {
        use CategoryViolation::*;
        let n = self.objects.len();
        let m = self.morphisms.len();
        if self.table.len() != m * m {
            return Err(TableSize { expected: m * m, found: self.table.len() });
        }
        for mor in &self.morphisms {
            if mor.src >= n || mor.dst >= n {
                return Err(DanglingMorphism { morphism: mor.name.clone() });
            }
        }
        if self.identities.len() != n {
            let object = self.objects.get(self.identities.len()).cloned().unwrap_or_default();
            return Err(MissingIdentity { object });
        }
        for (x, &i) in self.identities.iter().enumerate() {
            if i >= m || self.morphisms[i].src != x || self.morphisms[i].dst != x {
                return Err(IdentityWrongType {
                    object: self.objects[x].clone(),
                    morphism: self.morphisms.get(i).map(|m| m.name.clone()).unwrap_or_default(),
                });
            }
        }
        for g in 0..m {
            for f in 0..m {
                let composable = self.morphisms[f].dst == self.morphisms[g].src;
                match (composable, self.table[g * m + f]) {
                    (true, None) => {
                        return Err(MissingComposite { g: self.mname(g), f: self.mname(f) })
                    }
                    (false, Some(_)) => {
                        return Err(SpuriousComposite { g: self.mname(g), f: self.mname(f) })
                    }
                    (true, Some(gf)) => {
                        if gf >= m
                            || self.morphisms[gf].src != self.morphisms[f].src
                            || self.morphisms[gf].dst != self.morphisms[g].dst
                        {
                            return Err(CompositeWrongType {
                                g: self.mname(g),
                                f: self.mname(f),
                                gf: if gf < m { self.mname(gf) } else { gf.to_string() },
                            });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..m {
            let Morphism { src, dst, .. } = self.morphisms[f];
            if self.table[self.identities[dst] * m + f] != Some(f) {
                return Err(LeftIdentity { f: self.mname(f) });
            }
            if self.table[f * m + self.identities[src]] != Some(f) {
                return Err(RightIdentity { f: self.mname(f) });
            }
        }
        for f in 0..m {
            for g in 0..m {
                let Some(gf) = self.table[g * m + f] else { continue };
                for h in 0..m {
                    let Some(hg) = self.table[h * m + g] else { continue };
                    if self.table[h * m + gf] != self.table[hg * m + f] {
                        return Err(Associativity {
                            h: self.mname(h),
                            g: self.mname(g),
                            f: self.mname(f),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn mname(&self, f: MorId) -> String {
        self.morphisms[f].name.clone()
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identities
    }

    pub fn raw_table(&self) -> &[Option<MorId>] {
        &self.table
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn morphism(&self, f: MorId) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.morphisms[f].src
    }

    pub fn dst(&self, f: MorId) -> ObjId {
        self.morphisms[f].dst
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.morphisms[f].src] == f
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// `g ∘ f`, failing when the pair is not composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId> {
        let m = self.morphisms.len();
        if g >= m || f >= m {
            return Err(Error::NotComposable(format!("morphism index out of range ({g}, {f})")));
        }
        self.table[g * m + f].ok_or_else(|| {
            Error::NotComposable(format!(
                "{} : {} → {} after {} : {} → {}",
                self.morphisms[g].name,
                self.objects[self.morphisms[g].src],
                self.objects[self.morphisms[g].dst],
                self.morphisms[f].name,
                self.objects[self.morphisms[f].src],
                self.objects[self.morphisms[f].dst],
            ))
        })
    }

    /// `g ∘ f` on a pair already known to be composable.
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        let m = self.morphisms.len();
        self.table[g * m + f].unwrap_or_else(|| {
            panic!("{} ∘ {} is not composable", self.morphisms[g].name, self.morphisms[f].name)
        })
    }

    /// Inverse of `f`, if it is an isomorphism.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let Morphism { src, dst, .. } = self.morphisms[f];
        self.hom(dst, src)
            .iter()
            .copied()
            .find(|&g| self.comp(g, f) == self.identities[src] && self.comp(f, g) == self.identities[dst])
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    pub fn opposite(&self) -> FiniteCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism { name: m.name.clone(), src: m.dst, dst: m.src })
            .collect::<Vec<_>>();
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if let Some(fg) = self.table[f * m + g] {
                    // g ∘op f = f ∘ g
                    table[g * m + f] = Some(fg);
                }
            }
        }
        FiniteCategory::from_raw_parts(self.objects.clone(), morphisms, self.identities.clone(), table)
    }

    /// Object names in canonical order with their index, for lookups.
    pub fn object_index(&self) -> BTreeMap<&str, ObjId> {
        self.objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect()
    }
}

impl fmt::Display for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} objects, {} morphisms}}", self.objects.len(), self.morphisms.len())
    }
}
