//! Finite F-categories: strict 2-categories whose hom-categories carry a
//! set of tight 1-cells, closed under identities and composition.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{build_category, FiniteCategory, MorId, ObjId};

use super::fobject::{FObject, FObjectDoc};
use super::two_cat::{Enumerable, TwoCategory};

/// A hom-category with its tight 1-cells marked.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomCat {
    pub cat: Arc<FiniteCategory>,
    pub tight: Vec<bool>,
}

impl HomCat {
    pub fn empty() -> Self {
        HomCat { cat: Arc::new(FiniteCategory::empty()), tight: Vec::new() }
    }
}

/// A 1-cell `src → dst`, the `idx`-th object of the hom-category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OneCell {
    pub src: ObjId,
    pub dst: ObjId,
    pub idx: usize,
}

/// A 2-cell in the hom-category `(src, dst)`, the `idx`-th morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TwoCell {
    pub src: ObjId,
    pub dst: ObjId,
    pub idx: MorId,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteFCategory {
    objects: Vec<String>,
    homs: Vec<HomCat>,
    /// per `(x, y, z)`: `b * a` for `b` in `(y, z)` and `a` in `(x, y)`
    hcomp: Vec<Vec<MorId>>,
    /// the same on 1-cells
    hcomp1: Vec<Vec<usize>>,
    units: Vec<usize>,
}

impl FiniteFCategory {
    /// Builds and validates. `hcomp(x, y, z, b, a)` gives `b * a`.
    pub fn new(
        objects: Vec<String>,
        homs: Vec<HomCat>,
        units: Vec<usize>,
        mut hcomp: impl FnMut(ObjId, ObjId, ObjId, MorId, MorId) -> MorId,
    ) -> Result<Self> {
        let n = objects.len();
        if homs.len() != n * n || units.len() != n {
            return Err(Error::ShapeMismatch("hom or unit table of the wrong size".into()));
        }
        let mut table = Vec::with_capacity(n * n * n);
        let mut table1 = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (hxy, hyz, hxz) = (&homs[x * n + y].cat, &homs[y * n + z].cat, &homs[x * n + z].cat);
                    let (ma, mb) = (hxy.num_morphisms(), hyz.num_morphisms());
                    let mut t = Vec::with_capacity(ma * mb);
                    for b in 0..mb {
                        for a in 0..ma {
                            let c = hcomp(x, y, z, b, a);
                            if c >= hxz.num_morphisms() {
                                return Err(Error::Invalid("horizontal composite out of range".into()));
                            }
                            t.push(c);
                        }
                    }
                    let (na, nb) = (hxy.num_objects(), hyz.num_objects());
                    let mut t1 = Vec::with_capacity(na * nb);
                    for g in 0..nb {
                        for f in 0..na {
                            let c = t[hyz.identity(g) * ma + hxy.identity(f)];
                            if !hxz.is_identity(c) {
                                return Err(Error::Invalid(format!(
                                    "horizontal composite of identity 2-cells {} * {} is not an identity",
                                    hyz.object_name(g),
                                    hxy.object_name(f)
                                )));
                            }
                            t1.push(hxz.src(c));
                        }
                    }
                    table.push(t);
                    table1.push(t1);
                }
            }
        }
        let c = FiniteFCategory { objects, homs, hcomp: table, hcomp1: table1, units };
        c.validate()?;
        Ok(c)
    }

    /// A 1-category viewed as a locally discrete F-category; `tight[f]`
    /// marks the tight morphisms.
    pub fn locally_discrete(cat: &FiniteCategory, tight: &[bool]) -> Result<Self> {
        let n = cat.num_objects();
        let mut homs = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let names: Vec<&str> = cat.hom(x, y).iter().map(|&f| cat.morphism(f).name.as_str()).collect();
                let hc = FiniteCategory::discrete_named(&names);
                homs.push(HomCat { cat: Arc::new(hc), tight: cat.hom(x, y).iter().map(|&f| tight[f]).collect() });
            }
        }
        let pos = |x: ObjId, y: ObjId, f: MorId| cat.hom(x, y).iter().position(|&g| g == f).expect("hom");
        let units = (0..n).map(|x| pos(x, x, cat.identity(x))).collect();
        // in a discrete hom-category object i has identity i
        Self::new(cat.objects().to_vec(), homs, units, |x, y, z, b, a| {
            pos(x, z, cat.comp(cat.hom(y, z)[b], cat.hom(x, y)[a]))
        })
    }

    /// Every 1-cell tight.
    pub fn chordate(cat: &FiniteCategory) -> Result<Self> {
        Self::locally_discrete(cat, &vec![true; cat.num_morphisms()])
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.objects.len();
        for (i, h) in self.homs.iter().enumerate() {
            h.cat.validate().map_err(Error::InvalidCategory)?;
            if h.tight.len() != h.cat.num_objects() {
                return Err(Error::ShapeMismatch(format!("tight mask of hom {} has the wrong size", self.hom_label(i / n, i % n))));
            }
        }
        for x in 0..n {
            if !self.homs[x * n + x].tight.get(self.units[x]).copied().unwrap_or(false) {
                return Err(Error::Invalid(format!("unit of {} is missing or not tight", self.objects[x])));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    self.check_hcomp_functor(x, y, z)?;
                }
            }
        }
        // unit laws
        for x in 0..n {
            for y in 0..n {
                let h = &self.homs[x * n + y].cat;
                let (ux, uy) = (self.identity_cell_of(x), self.identity_cell_of(y));
                for a in 0..h.num_morphisms() {
                    let a = TwoCell { src: x, dst: y, idx: a };
                    if self.hcell(&uy, &a) != a || self.hcell(&a, &ux) != a {
                        return Err(Error::Invalid(format!("unit law fails at 2-cell {}", self.cell_name(&a))));
                    }
                }
            }
        }
        // associativity
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for a in 0..self.homs[w * n + x].cat.num_morphisms() {
                            for b in 0..self.homs[x * n + y].cat.num_morphisms() {
                                for c in 0..self.homs[y * n + z].cat.num_morphisms() {
                                    let (a, b, c) = (
                                        TwoCell { src: w, dst: x, idx: a },
                                        TwoCell { src: x, dst: y, idx: b },
                                        TwoCell { src: y, dst: z, idx: c },
                                    );
                                    if self.hcell(&self.hcell(&c, &b), &a) != self.hcell(&c, &self.hcell(&b, &a)) {
                                        return Err(Error::Invalid(format!(
                                            "horizontal composition is not associative at ({}, {}, {})",
                                            self.cell_name(&c),
                                            self.cell_name(&b),
                                            self.cell_name(&a)
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // tight 1-cells closed under composition
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for f in self.one_cells(x, y) {
                        for g in self.one_cells(y, z) {
                            if self.is_tight_cell(&f) && self.is_tight_cell(&g) && !self.is_tight_cell(&self.comp1(&g, &f)) {
                                return Err(Error::Invalid(format!(
                                    "composite of tight 1-cells {} ∘ {} is not tight",
                                    self.one_cell_name(&g),
                                    self.one_cell_name(&f)
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Horizontal composition `(y,z) × (x,y) → (x,z)` must be a functor.
    fn check_hcomp_functor(&self, x: ObjId, y: ObjId, z: ObjId) -> Result<()> {
        let n = self.objects.len();
        let (hxy, hyz, hxz) = (&self.homs[x * n + y].cat, &self.homs[y * n + z].cat, &self.homs[x * n + z].cat);
        let t = &self.hcomp[(x * n + y) * n + z];
        let t1 = &self.hcomp1[(x * n + y) * n + z];
        let ma = hxy.num_morphisms();
        let na = hxy.num_objects();
        for b in 0..hyz.num_morphisms() {
            for a in 0..ma {
                let c = t[b * ma + a];
                if hxz.src(c) != t1[hyz.src(b) * na + hxy.src(a)] || hxz.dst(c) != t1[hyz.dst(b) * na + hxy.dst(a)] {
                    return Err(Error::Invalid(format!(
                        "horizontal composite {} * {} has the wrong boundary",
                        hyz.morphism(b).name,
                        hxy.morphism(a).name
                    )));
                }
            }
        }
        for b in 0..hyz.num_morphisms() {
            for b2 in 0..hyz.num_morphisms() {
                if hyz.dst(b) != hyz.src(b2) {
                    continue;
                }
                for a in 0..ma {
                    for a2 in 0..ma {
                        if hxy.dst(a) != hxy.src(a2) {
                            continue;
                        }
                        let lhs = t[hyz.comp(b2, b) * ma + hxy.comp(a2, a)];
                        let rhs = hxz.comp(t[b2 * ma + a2], t[b * ma + a]);
                        if lhs != rhs {
                            return Err(Error::Invalid(format!(
                                "interchange law fails at ({}, {}, {}, {})",
                                hyz.morphism(b2).name,
                                hyz.morphism(b).name,
                                hxy.morphism(a2).name,
                                hxy.morphism(a).name
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn hom_label(&self, x: ObjId, y: ObjId) -> String {
        format!("{}→{}", self.objects[x], self.objects[y])
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom_cat(&self, x: ObjId, y: ObjId) -> &HomCat {
        &self.homs[x * self.objects.len() + y]
    }

    /// The hom as an F-object.
    pub fn hom_fobject(&self, x: ObjId, y: ObjId) -> FObject {
        let h = self.hom_cat(x, y);
        FObject::from_mask(h.cat.clone(), &h.tight)
    }

    pub fn one_cells(&self, x: ObjId, y: ObjId) -> impl Iterator<Item = OneCell> {
        (0..self.hom_cat(x, y).cat.num_objects()).map(move |idx| OneCell { src: x, dst: y, idx })
    }

    /// Every 1-cell, grouped by hom in `(x, y)` order.
    pub fn all_one_cells(&self) -> Vec<OneCell> {
        let n = self.num_objects();
        (0..n).flat_map(|x| (0..n).flat_map(move |y| self.one_cells(x, y))).collect()
    }

    pub fn two_cells(&self, x: ObjId, y: ObjId) -> impl Iterator<Item = TwoCell> {
        (0..self.hom_cat(x, y).cat.num_morphisms()).map(move |idx| TwoCell { src: x, dst: y, idx })
    }

    pub fn all_two_cells(&self) -> Vec<TwoCell> {
        let n = self.num_objects();
        (0..n).flat_map(|x| (0..n).flat_map(move |y| self.two_cells(x, y))).collect()
    }

    /// 2-cells `f ⇒ g`.
    pub fn cells_between(&self, f: &OneCell, g: &OneCell) -> Vec<TwoCell> {
        assert!(f.src == g.src && f.dst == g.dst);
        self.hom_cat(f.src, f.dst)
            .cat
            .hom(f.idx, g.idx)
            .iter()
            .map(|&idx| TwoCell { src: f.src, dst: f.dst, idx })
            .collect()
    }

    pub fn unit(&self, x: ObjId) -> OneCell {
        OneCell { src: x, dst: x, idx: self.units[x] }
    }

    pub fn is_unit(&self, f: &OneCell) -> bool {
        f.src == f.dst && self.units[f.src] == f.idx
    }

    pub fn is_tight_cell(&self, f: &OneCell) -> bool {
        self.hom_cat(f.src, f.dst).tight[f.idx]
    }

    pub fn one_cell_name(&self, f: &OneCell) -> String {
        self.hom_cat(f.src, f.dst).cat.object_name(f.idx).to_string()
    }

    pub fn cell_name(&self, a: &TwoCell) -> String {
        self.hom_cat(a.src, a.dst).cat.morphism(a.idx).name.clone()
    }

    pub fn find_one_cell(&self, x: ObjId, y: ObjId, name: &str) -> Option<OneCell> {
        self.hom_cat(x, y).cat.find_object(name).map(|idx| OneCell { src: x, dst: y, idx })
    }

    pub fn find_two_cell(&self, x: ObjId, y: ObjId, name: &str) -> Option<TwoCell> {
        self.hom_cat(x, y).cat.find_morphism(name).map(|idx| TwoCell { src: x, dst: y, idx })
    }

    /// `g ∘ f` on composable 1-cells.
    pub fn comp1(&self, g: &OneCell, f: &OneCell) -> OneCell {
        assert_eq!(f.dst, g.src, "1-cells not composable");
        let n = self.objects.len();
        let na = self.hom_cat(f.src, f.dst).cat.num_objects();
        let idx = self.hcomp1[(f.src * n + f.dst) * n + g.dst][g.idx * na + f.idx];
        OneCell { src: f.src, dst: g.dst, idx }
    }

    /// `b * a` on horizontally composable 2-cells.
    pub fn hcell(&self, b: &TwoCell, a: &TwoCell) -> TwoCell {
        assert_eq!(a.dst, b.src, "2-cells not horizontally composable");
        let n = self.objects.len();
        let ma = self.hom_cat(a.src, a.dst).cat.num_morphisms();
        let idx = self.hcomp[(a.src * n + a.dst) * n + b.dst][b.idx * ma + a.idx];
        TwoCell { src: a.src, dst: b.dst, idx }
    }

    /// `b · a` on vertically composable 2-cells.
    pub fn vcell(&self, b: &TwoCell, a: &TwoCell) -> Result<TwoCell> {
        if (a.src, a.dst) != (b.src, b.dst) {
            return Err(Error::NotComposable("2-cells live in different hom-categories".into()));
        }
        let idx = self.hom_cat(a.src, a.dst).cat.compose(b.idx, a.idx)?;
        Ok(TwoCell { src: a.src, dst: a.dst, idx })
    }

    pub fn cell_source(&self, a: &TwoCell) -> OneCell {
        OneCell { src: a.src, dst: a.dst, idx: self.hom_cat(a.src, a.dst).cat.src(a.idx) }
    }

    pub fn cell_target(&self, a: &TwoCell) -> OneCell {
        OneCell { src: a.src, dst: a.dst, idx: self.hom_cat(a.src, a.dst).cat.dst(a.idx) }
    }

    pub fn id_cell(&self, f: &OneCell) -> TwoCell {
        TwoCell { src: f.src, dst: f.dst, idx: self.hom_cat(f.src, f.dst).cat.identity(f.idx) }
    }

    fn identity_cell_of(&self, x: ObjId) -> TwoCell {
        self.id_cell(&self.unit(x))
    }

    /// Non-identity 2-cells exist in no hom.
    pub fn is_locally_discrete(&self) -> bool {
        self.homs.iter().all(|h| h.cat.num_morphisms() == h.cat.num_objects())
    }

    /// Every 1-cell tight.
    pub fn is_chordate(&self) -> bool {
        self.homs.iter().all(|h| h.tight.iter().all(|&t| t))
    }

    /// The same data with every hom-category replaced by its opposite.
    pub fn co(&self) -> FiniteFCategory {
        FiniteFCategory {
            objects: self.objects.clone(),
            homs: self
                .homs
                .iter()
                .map(|h| HomCat { cat: Arc::new(h.cat.opposite()), tight: h.tight.clone() })
                .collect(),
            hcomp: self.hcomp.clone(),
            hcomp1: self.hcomp1.clone(),
            units: self.units.clone(),
        }
    }

    /// The sub-F-category of tight 1-cells and all 2-cells between them,
    /// with every remaining 1-cell tight, and the inclusion data: for each
    /// hom the indices of the kept 1-cells and 2-cells.
    pub fn tight_part(&self) -> Result<(FiniteFCategory, Vec<(Vec<usize>, Vec<MorId>)>)> {
        let n = self.num_objects();
        let mut homs = Vec::with_capacity(n * n);
        let mut keep = Vec::with_capacity(n * n);
        for h in &self.homs {
            let objs: Vec<usize> = (0..h.cat.num_objects()).filter(|&i| h.tight[i]).collect();
            let (sub, incl) = crate::fincat::full_subcategory(&h.cat, &objs);
            homs.push(HomCat { tight: vec![true; sub.num_objects()], cat: sub });
            keep.push((objs, incl.morphisms.clone()));
        }
        let units = (0..n)
            .map(|x| keep[x * n + x].0.iter().position(|&i| i == self.units[x]).expect("unit is tight"))
            .collect();
        let sub = FiniteFCategory::new(self.objects.clone(), homs, units, |x, y, z, b, a| {
            let (bb, aa) = (keep[y * n + z].1[b], keep[x * n + y].1[a]);
            let c = self.hcell(&TwoCell { src: y, dst: z, idx: bb }, &TwoCell { src: x, dst: y, idx: aa });
            keep[x * n + z].1.iter().position(|&m| m == c.idx).expect("tight 1-cells closed under composition")
        })?;
        Ok((sub, keep))
    }
}

impl TwoCategory for FiniteFCategory {
    type Obj = ObjId;
    type Mor = OneCell;
    type Cell = TwoCell;

    fn mor_src(&self, f: &OneCell) -> ObjId {
        f.src
    }
    fn mor_dst(&self, f: &OneCell) -> ObjId {
        f.dst
    }
    fn identity(&self, x: &ObjId) -> OneCell {
        self.unit(*x)
    }
    fn compose(&self, g: &OneCell, f: &OneCell) -> Result<OneCell> {
        if f.dst != g.src {
            return Err(Error::NotComposable(format!(
                "{} after {}",
                self.one_cell_name(g),
                self.one_cell_name(f)
            )));
        }
        Ok(self.comp1(g, f))
    }
    fn is_tight(&self, f: &OneCell) -> bool {
        self.is_tight_cell(f)
    }
    fn cell_src(&self, a: &TwoCell) -> OneCell {
        self.cell_source(a)
    }
    fn cell_dst(&self, a: &TwoCell) -> OneCell {
        self.cell_target(a)
    }
    fn identity_cell(&self, f: &OneCell) -> TwoCell {
        self.id_cell(f)
    }
    fn vcompose(&self, b: &TwoCell, a: &TwoCell) -> Result<TwoCell> {
        self.vcell(b, a)
    }
    fn hcompose(&self, b: &TwoCell, a: &TwoCell) -> Result<TwoCell> {
        if a.dst != b.src {
            return Err(Error::NotComposable(format!("{} * {}", self.cell_name(b), self.cell_name(a))));
        }
        Ok(self.hcell(b, a))
    }
    fn is_invertible(&self, a: &TwoCell) -> bool {
        self.hom_cat(a.src, a.dst).cat.is_iso(a.idx)
    }
    fn is_identity_cell(&self, a: &TwoCell) -> bool {
        self.hom_cat(a.src, a.dst).cat.is_identity(a.idx)
    }
}

impl Enumerable for FiniteFCategory {
    fn hom_with_post(&self, x: &ObjId, y: &ObjId, posts: &[(OneCell, OneCell)], bound: usize) -> Result<Vec<OneCell>> {
        let out: Vec<OneCell> =
            self.one_cells(*x, *y).filter(|h| posts.iter().all(|(t, r)| self.comp1(t, h) == *r)).collect();
        if out.len() > bound {
            return Err(Error::bound("1-cells", bound));
        }
        Ok(out)
    }

    fn cells_with_post(&self, f: &OneCell, g: &OneCell, posts: &[(OneCell, TwoCell)], bound: usize) -> Result<Vec<TwoCell>> {
        let out: Vec<TwoCell> = self
            .cells_between(f, g)
            .into_iter()
            .filter(|c| posts.iter().all(|(t, r)| self.hcell(&self.id_cell(t), c) == *r))
            .collect();
        if out.len() > bound {
            return Err(Error::bound("2-cells", bound));
        }
        Ok(out)
    }
}

/// Builds a finite F-category from keyed 1-cells and 2-cells.
///
/// `one_cells` lists `(key, src, dst, tight)`; `two_cells` lists
/// `(key, source 1-cell, target 1-cell)` by position in `one_cells` and must
/// include every identity 2-cell and be closed under both compositions.
pub struct FCatBuilder<M, C> {
    pub objects: Vec<String>,
    pub one_cells: Vec<(M, ObjId, ObjId, bool)>,
    pub two_cells: Vec<(C, usize, usize)>,
}

/// Keys of a built F-category: for every hom, the 1-cell and 2-cell keys in index order.
#[derive(Clone, Debug)]
pub struct FCatKeys<M, C> {
    pub one_cells: Vec<Vec<M>>,
    pub two_cells: Vec<Vec<C>>,
}

impl<M: Ord + Clone, C: Ord + Clone> FCatBuilder<M, C> {
    pub fn build(
        self,
        unit: impl Fn(ObjId) -> M,
        id_cell: impl Fn(&M) -> C,
        vcomp: impl Fn(&C, &C) -> C,
        hcomp: impl Fn(&C, &C) -> C,
        mor_name: impl Fn(&M) -> String,
        cell_name: impl Fn(&C) -> String,
    ) -> Result<(FiniteFCategory, FCatKeys<M, C>)> {
        let n = self.objects.len();
        let mut hom_of_cell = vec![(0usize, 0usize); self.one_cells.len()];
        let mut local_one: Vec<Vec<usize>> = vec![Vec::new(); n * n];
        for (i, (_, s, d, _)) in self.one_cells.iter().enumerate() {
            hom_of_cell[i] = (*s, *d);
            local_one[s * n + d].push(i);
        }
        let mut local_two: Vec<Vec<usize>> = vec![Vec::new(); n * n];
        for (i, (_, a, b)) in self.two_cells.iter().enumerate() {
            let (s, d) = hom_of_cell[*a];
            if hom_of_cell[*b] != (s, d) {
                return Err(Error::ShapeMismatch("2-cell between 1-cells of different homs".into()));
            }
            local_two[s * n + d].push(i);
        }
        let mut homs = Vec::with_capacity(n * n);
        let mut keys = FCatKeys { one_cells: Vec::new(), two_cells: Vec::new() };
        let mut built_homs = Vec::with_capacity(n * n);
        for h in 0..n * n {
            let ones = &local_one[h];
            let pos_of = |global: usize| ones.iter().position(|&g| g == global).expect("1-cell in hom");
            let objs: Vec<M> = ones.iter().map(|&i| self.one_cells[i].0.clone()).collect();
            let mors: Vec<(C, ObjId, ObjId)> = local_two[h]
                .iter()
                .map(|&i| (self.two_cells[i].0.clone(), pos_of(self.two_cells[i].1), pos_of(self.two_cells[i].2)))
                .collect();
            let objs2 = objs.clone();
            let built = build_category(objs, mors, |x| id_cell(&objs2[x]), &vcomp, &mor_name, &cell_name)?;
            homs.push(HomCat { cat: built.cat.clone(), tight: ones.iter().map(|&i| self.one_cells[i].3).collect() });
            keys.one_cells.push(built.objects.clone());
            keys.two_cells.push(built.morphisms.clone());
            built_homs.push(built);
        }
        let mut units = Vec::with_capacity(n);
        for x in 0..n {
            let u = unit(x);
            units.push(
                built_homs[x * n + x]
                    .object_of(&u)
                    .ok_or_else(|| Error::Invalid(format!("unit of {} is not listed", self.objects[x])))?,
            );
        }
        let mut missing: Option<String> = None;
        let cat = FiniteFCategory::new(self.objects.clone(), homs, units, |x, y, z, b, a| {
            let key = hcomp(&built_homs[y * n + z].morphisms[b], &built_homs[x * n + y].morphisms[a]);
            match built_homs[x * n + z].morphism_of(&key) {
                Some(i) => i,
                None => {
                    missing.get_or_insert_with(|| cell_name(&key));
                    usize::MAX
                }
            }
        });
        if let Some(name) = missing {
            return Err(Error::Invalid(format!("horizontal composite {name} is not among the listed 2-cells")));
        }
        Ok((cat?, keys))
    }
}

/// JSON form: homs keyed by `"x,y"`; absent homs are empty. Horizontal
/// composites involving the identity 2-cell of a unit may be omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FCategoryDoc {
    pub objects: Vec<String>,
    pub homs: BTreeMap<String, FObjectDoc>,
    #[serde(default)]
    pub hcomp: Vec<HCompDoc>,
    pub units: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HCompDoc {
    pub x: String,
    pub y: String,
    pub z: String,
    /// `[b, a, b * a]` by 2-cell name
    pub table: Vec<[String; 3]>,
}

impl FCategoryDoc {
    pub fn build(&self) -> Result<FiniteFCategory> {
        let n = self.objects.len();
        let obj = |s: &str| {
            self.objects.iter().position(|o| o == s).ok_or_else(|| Error::Parse(format!("unknown object {s:?}")))
        };
        let mut homs = vec![HomCat::empty(); n * n];
        for (key, doc) in &self.homs {
            let (a, b) = key.split_once(',').ok_or_else(|| Error::Parse(format!("hom key {key:?} is not \"x,y\"")))?;
            let (x, y) = (obj(a.trim())?, obj(b.trim())?);
            let fo = doc.build()?;
            homs[x * n + y] = HomCat { tight: fo.tight_mask(), cat: fo.loose };
        }
        let mut units = Vec::with_capacity(n);
        for (x, o) in self.objects.iter().enumerate() {
            let u = self.units.get(o).ok_or_else(|| Error::Parse(format!("no unit for {o:?}")))?;
            units.push(
                homs[x * n + x].cat.find_object(u).ok_or_else(|| Error::Parse(format!("unknown unit 1-cell {u:?}")))?,
            );
        }
        let mut table: BTreeMap<(usize, usize, usize, MorId, MorId), MorId> = BTreeMap::new();
        for h in &self.hcomp {
            let (x, y, z) = (obj(&h.x)?, obj(&h.y)?, obj(&h.z)?);
            let cell = |hc: &HomCat, s: &str| {
                hc.cat.find_morphism(s).ok_or_else(|| Error::Parse(format!("unknown 2-cell {s:?}")))
            };
            for [b, a, ba] in &h.table {
                let key = (x, y, z, cell(&homs[y * n + z], b)?, cell(&homs[x * n + y], a)?);
                table.insert(key, cell(&homs[x * n + z], ba)?);
            }
        }
        let mut missing = None;
        let cat = FiniteFCategory::new(self.objects.clone(), homs.clone(), units.clone(), |x, y, z, b, a| {
            if let Some(&c) = table.get(&(x, y, z, b, a)) {
                return c;
            }
            let (hyz, hxy) = (&homs[y * n + z].cat, &homs[x * n + y].cat);
            if y == z && b == hyz.identity(units[y]) {
                return a;
            }
            if x == y && a == hxy.identity(units[x]) {
                return b;
            }
            missing.get_or_insert((x, y, z, hyz.morphism(b).name.clone(), hxy.morphism(a).name.clone()));
            usize::MAX
        });
        if let Some((x, y, z, b, a)) = missing {
            return Err(Error::Parse(format!(
                "missing horizontal composite {b} * {a} over {} → {} → {}",
                self.objects[x], self.objects[y], self.objects[z]
            )));
        }
        cat
    }

    pub fn from_fcategory(c: &FiniteFCategory) -> Self {
        let n = c.num_objects();
        let mut homs = BTreeMap::new();
        let mut hcomp = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if c.hom_cat(x, y).cat.num_objects() > 0 {
                    homs.insert(format!("{},{}", c.objects[x], c.objects[y]), FObjectDoc::from_fobject(&c.hom_fobject(x, y)));
                }
                for z in 0..n {
                    let mut table = Vec::new();
                    for b in c.two_cells(y, z) {
                        for a in c.two_cells(x, y) {
                            table.push([c.cell_name(&b), c.cell_name(&a), c.cell_name(&c.hcell(&b, &a))]);
                        }
                    }
                    if !table.is_empty() {
                        hcomp.push(HCompDoc { x: c.objects[x].clone(), y: c.objects[y].clone(), z: c.objects[z].clone(), table });
                    }
                }
            }
        }
        FCategoryDoc {
            objects: c.objects.clone(),
            homs,
            hcomp,
            units: (0..n).map(|x| (c.objects[x].clone(), c.one_cell_name(&c.unit(x)))).collect(),
        }
    }
}

/// `β · α` in a finite F-category.
pub fn paste_vertical(c: &FiniteFCategory, beta: &TwoCell, alpha: &TwoCell) -> Result<TwoCell> {
    c.vcell(beta, alpha)
}

/// `β * α` in a finite F-category.
pub fn paste_horizontal(c: &FiniteFCategory, beta: &TwoCell, alpha: &TwoCell) -> Result<TwoCell> {
    c.hcompose(beta, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One object with endo-1-cells {1, e} (e∘e = e) and a single 2-cell 1 ⇒ e.
    pub(crate) fn idempotent_2cat() -> FiniteFCategory {
        let hom = FiniteCategory::preorder_named(&["1", "e"], |a, b| a <= b);
        FiniteFCategory::new(
            vec!["*".into()],
            vec![HomCat { cat: Arc::new(hom), tight: vec![true, false] }],
            vec![0],
            |_, _, _, b, a| {
                // morphisms: 0 = id_1, 1 = 1≤e, 2 = id_e; the 1-cells compose by max
                let lvl = |m: usize| match m {
                    0 => (0, 0),
                    1 => (0, 1),
                    _ => (1, 1),
                };
                let (bs, bd) = lvl(b);
                let (as_, ad) = lvl(a);
                match (bs.max(as_), bd.max(ad)) {
                    (0, 0) => 0,
                    (0, 1) => 1,
                    _ => 2,
                }
            },
        )
        .unwrap()
    }

    #[test]
    fn idempotent_fixture_is_valid() {
        let c = idempotent_2cat();
        assert!(!c.is_locally_discrete());
        assert!(!c.is_chordate());
        let co = c.co();
        co.validate().unwrap();
        let (t, _) = c.tight_part().unwrap();
        assert_eq!(t.hom_cat(0, 0).cat.num_objects(), 1);
    }

    #[test]
    fn pasting_units_and_interchange() {
        let c = idempotent_2cat();
        let cells = c.all_two_cells();
        for a in &cells {
            let f = c.cell_source(a);
            let g = c.cell_target(a);
            assert_eq!(paste_vertical(&c, &c.id_cell(&g), a).unwrap(), *a);
            assert_eq!(paste_vertical(&c, a, &c.id_cell(&f)).unwrap(), *a);
            assert_eq!(paste_horizontal(&c, &c.id_cell(&c.unit(0)), a).unwrap(), *a);
        }
        let u = c.id_cell(&c.unit(0));
        assert_eq!(paste_vertical(&c, &u, &u).unwrap(), u);
        for a in &cells {
            for a2 in cells.iter().filter(|x| c.cell_source(x) == c.cell_target(a)) {
                for b in &cells {
                    for b2 in cells.iter().filter(|x| c.cell_source(x) == c.cell_target(b)) {
                        let lhs = c.vcell(&c.hcell(b2, a2), &c.hcell(b, a)).unwrap();
                        let rhs = c.hcell(&c.vcell(b2, b).unwrap(), &c.vcell(a2, a).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn bad_interchange_is_rejected() {
        let hom = FiniteCategory::preorder_named(&["1", "e"], |a, b| a <= b);
        let r = FiniteFCategory::new(
            vec!["*".into()],
            vec![HomCat { cat: Arc::new(hom), tight: vec![true, false] }],
            vec![0],
            |_, _, _, b, a| if b == 0 { a } else if a == 0 { b } else { 1 },
        );
        assert!(r.is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = idempotent_2cat();
        let doc = FCategoryDoc::from_fcategory(&c);
        let text = serde_json::to_string(&doc).unwrap();
        let back: FCategoryDoc = serde_json::from_str(&text).unwrap();
        let c2 = back.build().unwrap();
        assert_eq!(c2.all_two_cells().len(), c.all_two_cells().len());
        for b in c.all_two_cells() {
            for a in c.all_two_cells() {
                assert_eq!(c.cell_name(&c.hcell(&b, &a)), c2.cell_name(&c2.hcell(&b, &a)));
            }
        }
    }

    #[test]
    fn locally_discrete_from_category() {
        let c = FiniteFCategory::chordate(&FiniteCategory::chain(3)).unwrap();
        assert!(c.is_locally_discrete() && c.is_chordate());
        assert_eq!(c.all_one_cells().len(), 6);
    }
}
