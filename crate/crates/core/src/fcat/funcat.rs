//! The F-category of F-functors `source → B`, loose transformations of a
//! fixed weakness and modifications; and materialization of finite full
//! sub-2-categories as [`FiniteFCategory`] values.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::enumerate::{enumerate_loose_transformations, enumerate_modifications, TransformationOptions};
use super::fcategory::{FCatBuilder, FCatKeys, FiniteFCategory};
use super::functor::FFunctor;
use super::transform::{LooseTransformation, Modification, WeaknessPair};
use super::two_cat::{Enumerable, TwoCategory};

#[derive(Clone, Debug)]
pub struct FunCategory<B> {
    pub base: B,
    pub source: Arc<FiniteFCategory>,
    pub weakness: WeaknessPair,
}

impl<B: TwoCategory> FunCategory<B> {
    pub fn new(base: B, source: Arc<FiniteFCategory>, weakness: WeaknessPair) -> Self {
        FunCategory { base, source, weakness }
    }
}

impl<B: TwoCategory> TwoCategory for FunCategory<B> {
    type Obj = FFunctor<B>;
    type Mor = LooseTransformation<B>;
    type Cell = Modification<B>;

    fn mor_src(&self, f: &Self::Mor) -> Self::Obj {
        f.source.clone()
    }
    fn mor_dst(&self, f: &Self::Mor) -> Self::Obj {
        f.target.clone()
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        LooseTransformation::identity(&self.base, x, self.weakness)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        f.then(&self.base, g)
    }
    fn is_tight(&self, f: &Self::Mor) -> bool {
        f.components.iter().all(|c| self.base.is_tight(c))
    }
    fn cell_src(&self, a: &Self::Cell) -> Self::Mor {
        a.source.clone()
    }
    fn cell_dst(&self, a: &Self::Cell) -> Self::Mor {
        a.target.clone()
    }
    fn identity_cell(&self, f: &Self::Mor) -> Self::Cell {
        Modification::identity(&self.base, f)
    }
    fn vcompose(&self, b: &Self::Cell, a: &Self::Cell) -> Result<Self::Cell> {
        a.then(&self.base, b)
    }
    fn hcompose(&self, b: &Self::Cell, a: &Self::Cell) -> Result<Self::Cell> {
        a.hthen(&self.base, b)
    }
    fn is_invertible(&self, a: &Self::Cell) -> bool {
        a.is_invertible(&self.base)
    }
    fn is_identity_cell(&self, a: &Self::Cell) -> bool {
        a.source == a.target && a.components.iter().all(|c| self.base.is_identity_cell(c))
    }
}

impl<B: Enumerable> Enumerable for FunCategory<B> {
    fn hom_with_post(
        &self,
        x: &Self::Obj,
        y: &Self::Obj,
        posts: &[(Self::Mor, Self::Mor)],
        bound: usize,
    ) -> Result<Vec<Self::Mor>> {
        let all = enumerate_loose_transformations(&self.base, x, y, self.weakness, &TransformationOptions::default(), bound)?;
        let mut out = Vec::new();
        for g in all {
            let mut ok = true;
            for (t, r) in posts {
                if g.then(&self.base, t)? != *r {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(g);
            }
        }
        Ok(out)
    }

    fn cells_with_post(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
        posts: &[(Self::Mor, Self::Cell)],
        bound: usize,
    ) -> Result<Vec<Self::Cell>> {
        let all = enumerate_modifications(&self.base, f, g, bound)?;
        let mut out = Vec::new();
        for c in all {
            let mut ok = true;
            for (t, r) in posts {
                if self.whisker_left(t, &c)? != *r {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(c);
            }
        }
        Ok(out)
    }
}

/// A finite full sub-2-category of an enumerable 2-category, with the keys
/// of its cells.
pub struct Materialized<B: TwoCategory> {
    pub category: Arc<FiniteFCategory>,
    pub objects: Vec<B::Obj>,
    pub keys: FCatKeys<B::Mor, B::Cell>,
}

impl<B: TwoCategory> Materialized<B> {
    pub fn one_cell_key(&self, f: &super::fcategory::OneCell) -> &B::Mor {
        &self.keys.one_cells[f.src * self.objects.len() + f.dst][f.idx]
    }

    pub fn two_cell_key(&self, a: &super::fcategory::TwoCell) -> &B::Cell {
        &self.keys.two_cells[a.src * self.objects.len() + a.dst][a.idx]
    }

    /// Position of a 1-cell given by key.
    pub fn find_one_cell(&self, x: usize, y: usize, key: &B::Mor) -> Option<super::fcategory::OneCell> {
        let n = self.objects.len();
        self.keys.one_cells[x * n + y]
            .iter()
            .position(|k| k == key)
            .map(|idx| super::fcategory::OneCell { src: x, dst: y, idx })
    }

    /// Position of a 2-cell given by key.
    pub fn find_two_cell(&self, x: usize, y: usize, key: &B::Cell) -> Option<super::fcategory::TwoCell> {
        let n = self.objects.len();
        self.keys.two_cells[x * n + y]
            .iter()
            .position(|k| k == key)
            .map(|idx| super::fcategory::TwoCell { src: x, dst: y, idx })
    }

    /// The inclusion back into `b`.
    pub fn inclusion(&self) -> FFunctor<B> {
        FFunctor::build_unchecked(
            &self.category,
            |x| self.objects[x].clone(),
            |f| self.one_cell_key(f).clone(),
            |a| self.two_cell_key(a).clone(),
        )
    }
}

/// The full sub-2-category of `b` on `objects`, named by `names`.
pub fn materialize<B: Enumerable>(b: &B, objects: &[B::Obj], names: &[String], bound: usize) -> Result<Materialized<B>> {
    if objects.len() != names.len() {
        return Err(Error::ShapeMismatch("one name per object required".into()));
    }
    let n = objects.len();
    let mut one_cells = Vec::new();
    let mut mor_names: BTreeMap<B::Mor, String> = BTreeMap::new();
    let mut per_hom: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    for x in 0..n {
        for y in 0..n {
            for (i, f) in b.hom(&objects[x], &objects[y], bound)?.into_iter().enumerate() {
                mor_names.insert(f.clone(), format!("{}→{}#{}", names[x], names[y], i));
                per_hom[x * n + y].push(one_cells.len());
                one_cells.push((f.clone(), x, y, b.is_tight(&f)));
            }
        }
    }
    let mut two_cells = Vec::new();
    let mut cell_names: BTreeMap<B::Cell, String> = BTreeMap::new();
    for h in &per_hom {
        for &i in h {
            for &j in h {
                for (k, c) in b.cells(&one_cells[i].0, &one_cells[j].0, bound)?.into_iter().enumerate() {
                    cell_names.insert(c.clone(), format!("{}⇒{}#{}", mor_names[&one_cells[i].0], mor_names[&one_cells[j].0], k));
                    two_cells.push((c, i, j));
                }
            }
        }
    }
    let builder = FCatBuilder { objects: names.to_vec(), one_cells, two_cells };
    let (cat, keys) = builder.build(
        |x| b.identity(&objects[x]),
        |f| b.identity_cell(f),
        |q, p| b.vcompose(q, p).expect("composable 2-cells"),
        |q, p| b.hcompose(q, p).expect("composable 2-cells"),
        |f| mor_names.get(f).cloned().unwrap_or_else(|| format!("{f:?}")),
        |c| cell_names.get(c).cloned().unwrap_or_else(|| "?".into()),
    )?;
    Ok(Materialized { category: Arc::new(cat), objects: objects.to_vec(), keys })
}
