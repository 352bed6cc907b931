//! A common interface for the strict 2-categories with tightness used as
//! targets of F-functors: finite F-categories, the ambient 𝔽, functor
//! F-categories and their 2-cell duals.

use std::fmt::Debug;

use crate::error::Result;

pub trait TwoCategory {
    type Obj: Clone + Eq + Ord + Debug;
    type Mor: Clone + Eq + Ord + Debug;
    type Cell: Clone + Eq + Ord + Debug;

    fn mor_src(&self, f: &Self::Mor) -> Self::Obj;
    fn mor_dst(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn is_tight(&self, f: &Self::Mor) -> bool;

    fn cell_src(&self, a: &Self::Cell) -> Self::Mor;
    fn cell_dst(&self, a: &Self::Cell) -> Self::Mor;
    fn identity_cell(&self, f: &Self::Mor) -> Self::Cell;
    /// Vertical composite `b · a`.
    fn vcompose(&self, b: &Self::Cell, a: &Self::Cell) -> Result<Self::Cell>;
    /// Horizontal composite `b * a`, with `a` applied first.
    fn hcompose(&self, b: &Self::Cell, a: &Self::Cell) -> Result<Self::Cell>;
    fn is_invertible(&self, a: &Self::Cell) -> bool;

    fn is_identity_cell(&self, a: &Self::Cell) -> bool {
        let f = self.cell_src(a);
        f == self.cell_dst(a) && *a == self.identity_cell(&f)
    }

    /// `g * a`.
    fn whisker_left(&self, g: &Self::Mor, a: &Self::Cell) -> Result<Self::Cell> {
        self.hcompose(&self.identity_cell(g), a)
    }

    /// `a * f`.
    fn whisker_right(&self, a: &Self::Cell, f: &Self::Mor) -> Result<Self::Cell> {
        self.hcompose(a, &self.identity_cell(f))
    }
}

/// 2-categories whose hom-categories can be listed, with optional
/// postcomposition constraints to prune the search.
pub trait Enumerable: TwoCategory {
    /// All 1-cells `h : x → y` with `t ∘ h = r` for every `(t, r)` in `posts`.
    fn hom_with_post(
        &self,
        x: &Self::Obj,
        y: &Self::Obj,
        posts: &[(Self::Mor, Self::Mor)],
        bound: usize,
    ) -> Result<Vec<Self::Mor>>;

    /// All 2-cells `c : f ⇒ g` with `t * c = r` for every `(t, r)` in `posts`.
    fn cells_with_post(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
        posts: &[(Self::Mor, Self::Cell)],
        bound: usize,
    ) -> Result<Vec<Self::Cell>>;

    fn hom(&self, x: &Self::Obj, y: &Self::Obj, bound: usize) -> Result<Vec<Self::Mor>> {
        self.hom_with_post(x, y, &[], bound)
    }

    fn cells(&self, f: &Self::Mor, g: &Self::Mor, bound: usize) -> Result<Vec<Self::Cell>> {
        self.cells_with_post(f, g, &[], bound)
    }
}

/// The same 2-category with 2-cells reversed.
#[derive(Clone, Debug)]
pub struct Co<B>(pub B);

impl<B: TwoCategory> TwoCategory for Co<B> {
    type Obj = B::Obj;
    type Mor = B::Mor;
    type Cell = B::Cell;

    fn mor_src(&self, f: &B::Mor) -> B::Obj {
        self.0.mor_src(f)
    }
    fn mor_dst(&self, f: &B::Mor) -> B::Obj {
        self.0.mor_dst(f)
    }
    fn identity(&self, x: &B::Obj) -> B::Mor {
        self.0.identity(x)
    }
    fn compose(&self, g: &B::Mor, f: &B::Mor) -> Result<B::Mor> {
        self.0.compose(g, f)
    }
    fn is_tight(&self, f: &B::Mor) -> bool {
        self.0.is_tight(f)
    }
    fn cell_src(&self, a: &B::Cell) -> B::Mor {
        self.0.cell_dst(a)
    }
    fn cell_dst(&self, a: &B::Cell) -> B::Mor {
        self.0.cell_src(a)
    }
    fn identity_cell(&self, f: &B::Mor) -> B::Cell {
        self.0.identity_cell(f)
    }
    fn vcompose(&self, b: &B::Cell, a: &B::Cell) -> Result<B::Cell> {
        self.0.vcompose(a, b)
    }
    fn hcompose(&self, b: &B::Cell, a: &B::Cell) -> Result<B::Cell> {
        self.0.hcompose(b, a)
    }
    fn is_invertible(&self, a: &B::Cell) -> bool {
        self.0.is_invertible(a)
    }
}

impl<B: Enumerable> Enumerable for Co<B> {
    fn hom_with_post(&self, x: &B::Obj, y: &B::Obj, posts: &[(B::Mor, B::Mor)], bound: usize) -> Result<Vec<B::Mor>> {
        self.0.hom_with_post(x, y, posts, bound)
    }
    fn cells_with_post(&self, f: &B::Mor, g: &B::Mor, posts: &[(B::Mor, B::Cell)], bound: usize) -> Result<Vec<B::Cell>> {
        self.0.cells_with_post(g, f, posts, bound)
    }
}

macro_rules! forward_two_category {
    ($($ptr:ty),*) => {$(
        impl<B: TwoCategory + ?Sized> TwoCategory for $ptr {
            type Obj = B::Obj;
            type Mor = B::Mor;
            type Cell = B::Cell;
            fn mor_src(&self, f: &B::Mor) -> B::Obj { (**self).mor_src(f) }
            fn mor_dst(&self, f: &B::Mor) -> B::Obj { (**self).mor_dst(f) }
            fn identity(&self, x: &B::Obj) -> B::Mor { (**self).identity(x) }
            fn compose(&self, g: &B::Mor, f: &B::Mor) -> Result<B::Mor> { (**self).compose(g, f) }
            fn is_tight(&self, f: &B::Mor) -> bool { (**self).is_tight(f) }
            fn cell_src(&self, a: &B::Cell) -> B::Mor { (**self).cell_src(a) }
            fn cell_dst(&self, a: &B::Cell) -> B::Mor { (**self).cell_dst(a) }
            fn identity_cell(&self, f: &B::Mor) -> B::Cell { (**self).identity_cell(f) }
            fn vcompose(&self, b: &B::Cell, a: &B::Cell) -> Result<B::Cell> { (**self).vcompose(b, a) }
            fn hcompose(&self, b: &B::Cell, a: &B::Cell) -> Result<B::Cell> { (**self).hcompose(b, a) }
            fn is_invertible(&self, a: &B::Cell) -> bool { (**self).is_invertible(a) }
            fn is_identity_cell(&self, a: &B::Cell) -> bool { (**self).is_identity_cell(a) }
        }

        impl<B: Enumerable + ?Sized> Enumerable for $ptr {
            fn hom_with_post(&self, x: &B::Obj, y: &B::Obj, posts: &[(B::Mor, B::Mor)], bound: usize) -> Result<Vec<B::Mor>> {
                (**self).hom_with_post(x, y, posts, bound)
            }
            fn cells_with_post(&self, f: &B::Mor, g: &B::Mor, posts: &[(B::Mor, B::Cell)], bound: usize) -> Result<Vec<B::Cell>> {
                (**self).cells_with_post(f, g, posts, bound)
            }
        }
    )*};
}

forward_two_category!(&B, std::sync::Arc<B>);
