//! F-functors out of a finite F-category into any [`TwoCategory`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::fcategory::{FiniteFCategory, OneCell, TwoCell};
use super::two_cat::{Co, TwoCategory};

/// Weakness of a transformation: strict, pseudo, lax or colax.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Weakness {
    #[serde(rename = "s")]
    S,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "l")]
    L,
    #[serde(rename = "c")]
    C,
}

impl Weakness {
    pub const ALL: [Weakness; 4] = [Weakness::S, Weakness::P, Weakness::L, Weakness::C];

    /// The order `s ≤ p ≤ l`, `p ≤ c`.
    pub fn leq(self, other: Weakness) -> bool {
        use Weakness::*;
        matches!((self, other), (S, _) | (P, P) | (P, L) | (P, C) | (L, L) | (C, C))
    }

    /// Swaps lax and colax.
    pub fn bar(self) -> Weakness {
        match self {
            Weakness::L => Weakness::C,
            Weakness::C => Weakness::L,
            w => w,
        }
    }

    /// Colax cells point the other way; every other weakness uses the lax orientation.
    pub fn is_colax(self) -> bool {
        self == Weakness::C
    }

    pub fn parse(s: &str) -> Result<Weakness> {
        match s {
            "s" => Ok(Weakness::S),
            "p" => Ok(Weakness::P),
            "l" => Ok(Weakness::L),
            "c" => Ok(Weakness::C),
            _ => Err(Error::Parse(format!("unknown weakness {s:?}; expected s, p, l or c"))),
        }
    }
}

impl fmt::Display for Weakness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Weakness::S => "s",
            Weakness::P => "p",
            Weakness::L => "l",
            Weakness::C => "c",
        })
    }
}

pub(crate) fn cmp_source(a: &Arc<FiniteFCategory>, b: &Arc<FiniteFCategory>) -> Ordering {
    if Arc::ptr_eq(a, b) {
        Ordering::Equal
    } else {
        (**a).cmp(&**b)
    }
}

/// Implements value traits for a struct generic over a 2-category, bounding
/// only the associated types.
macro_rules! value_traits {
    ($name:ident { $($field:ident),* } by $cmp:ident) => {
        impl<B: TwoCategory> Clone for $name<B> {
            fn clone(&self) -> Self {
                $name { $($field: self.$field.clone()),* }
            }
        }
        impl<B: TwoCategory> PartialEq for $name<B> {
            fn eq(&self, other: &Self) -> bool {
                self.cmp(other) == std::cmp::Ordering::Equal
            }
        }
        impl<B: TwoCategory> Eq for $name<B> {}
        impl<B: TwoCategory> PartialOrd for $name<B> {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }
        impl<B: TwoCategory> Ord for $name<B> {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                $cmp(self, other)
            }
        }
        impl<B: TwoCategory> std::fmt::Debug for $name<B> {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.debug_struct(stringify!($name)) $(.field(stringify!($field), &self.$field))* .finish()
            }
        }
    };
}
pub(crate) use value_traits;

/// An F-functor `source → B`. `one_cells` and `two_cells` are indexed by
/// hom `x * n + y`, then by position in the hom-category.
pub struct FFunctor<B: TwoCategory> {
    pub source: Arc<FiniteFCategory>,
    pub objects: Vec<B::Obj>,
    pub one_cells: Vec<Vec<B::Mor>>,
    pub two_cells: Vec<Vec<B::Cell>>,
}

fn cmp_functor<B: TwoCategory>(a: &FFunctor<B>, b: &FFunctor<B>) -> Ordering {
    a.objects
        .cmp(&b.objects)
        .then_with(|| a.one_cells.cmp(&b.one_cells))
        .then_with(|| a.two_cells.cmp(&b.two_cells))
        .then_with(|| cmp_source(&a.source, &b.source))
}

value_traits!(FFunctor { source, objects, one_cells, two_cells } by cmp_functor);

impl<B: TwoCategory> FFunctor<B> {
    /// Builds a functor from its action; the result is validated.
    pub fn build(
        source: &Arc<FiniteFCategory>,
        b: &B,
        obj: impl Fn(usize) -> B::Obj,
        one: impl Fn(&OneCell) -> B::Mor,
        two: impl Fn(&TwoCell) -> B::Cell,
    ) -> Result<Self> {
        let f = Self::build_unchecked(source, obj, one, two);
        f.validate(b)?;
        Ok(f)
    }

    pub fn build_unchecked(
        source: &Arc<FiniteFCategory>,
        obj: impl Fn(usize) -> B::Obj,
        one: impl Fn(&OneCell) -> B::Mor,
        two: impl Fn(&TwoCell) -> B::Cell,
    ) -> Self {
        let n = source.num_objects();
        let mut one_cells = Vec::with_capacity(n * n);
        let mut two_cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                one_cells.push(source.one_cells(x, y).map(|f| one(&f)).collect());
                two_cells.push(source.two_cells(x, y).map(|a| two(&a)).collect());
            }
        }
        FFunctor { source: source.clone(), objects: (0..n).map(obj).collect(), one_cells, two_cells }
    }

    /// The constant functor at `k`.
    pub fn constant(source: &Arc<FiniteFCategory>, b: &B, k: &B::Obj) -> Self {
        let id = b.identity(k);
        let idc = b.identity_cell(&id);
        Self::build_unchecked(source, |_| k.clone(), |_| id.clone(), |_| idc.clone())
    }

    pub fn obj(&self, x: usize) -> &B::Obj {
        &self.objects[x]
    }

    pub fn one(&self, f: &OneCell) -> &B::Mor {
        &self.one_cells[f.src * self.source.num_objects() + f.dst][f.idx]
    }

    pub fn two(&self, a: &TwoCell) -> &B::Cell {
        &self.two_cells[a.src * self.source.num_objects() + a.dst][a.idx]
    }

    pub fn validate(&self, b: &B) -> Result<()> {
        let s = &self.source;
        let n = s.num_objects();
        if self.objects.len() != n || self.one_cells.len() != n * n || self.two_cells.len() != n * n {
            return Err(Error::ShapeMismatch("F-functor tables do not match the source".into()));
        }
        for x in 0..n {
            for y in 0..n {
                if self.one_cells[x * n + y].len() != s.hom_cat(x, y).cat.num_objects()
                    || self.two_cells[x * n + y].len() != s.hom_cat(x, y).cat.num_morphisms()
                {
                    return Err(Error::ShapeMismatch("F-functor hom table has the wrong size".into()));
                }
            }
        }
        let fail = |what: String| Err(Error::Invalid(format!("F-functor {what}")));
        for f in s.all_one_cells() {
            let g = self.one(&f);
            if b.mor_src(g) != self.objects[f.src] || b.mor_dst(g) != self.objects[f.dst] {
                return fail(format!("sends 1-cell {} to a 1-cell of the wrong type", s.one_cell_name(&f)));
            }
            if s.is_tight_cell(&f) && !b.is_tight(g) {
                return fail(format!("sends tight 1-cell {} to a loose one", s.one_cell_name(&f)));
            }
        }
        for x in 0..n {
            if *self.one(&s.unit(x)) != b.identity(&self.objects[x]) {
                return fail(format!("does not preserve the unit of {}", s.object_name(x)));
            }
        }
        for a in s.all_two_cells() {
            let c = self.two(&a);
            if b.cell_src(c) != *self.one(&s.cell_source(&a)) || b.cell_dst(c) != *self.one(&s.cell_target(&a)) {
                return fail(format!("sends 2-cell {} to a 2-cell of the wrong type", s.cell_name(&a)));
            }
        }
        for f in s.all_one_cells() {
            if *self.two(&s.id_cell(&f)) != b.identity_cell(self.one(&f)) {
                return fail(format!("does not preserve the identity 2-cell of {}", s.one_cell_name(&f)));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let h = &s.hom_cat(x, y).cat;
                for q in 0..h.num_morphisms() {
                    for p in (0..h.num_morphisms()).filter(|&p| h.src(p) == h.dst(q)) {
                        let (pc, qc) = (TwoCell { src: x, dst: y, idx: p }, TwoCell { src: x, dst: y, idx: q });
                        let lhs = self.two(&s.vcell(&pc, &qc)?).clone();
                        if lhs != b.vcompose(self.two(&pc), self.two(&qc))? {
                            return fail(format!("does not preserve {} · {}", s.cell_name(&pc), s.cell_name(&qc)));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for bb in s.two_cells(y, z) {
                        for aa in s.two_cells(x, y) {
                            let lhs = self.two(&s.hcell(&bb, &aa));
                            if *lhs != b.hcompose(self.two(&bb), self.two(&aa))? {
                                return fail(format!("does not preserve {} * {}", s.cell_name(&bb), s.cell_name(&aa)));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `g ∘ self` where `self` lands in a finite F-category.
    pub fn then<C: TwoCategory>(&self, g: &FFunctor<C>) -> Result<FFunctor<C>>
    where
        B: TwoCategory<Obj = usize, Mor = OneCell, Cell = TwoCell>,
    {
        Ok(FFunctor::build_unchecked(
            &self.source,
            |x| g.obj(self.objects[x]).clone(),
            |f| g.one(self.one(f)).clone(),
            |a| g.two(self.two(a)).clone(),
        ))
    }

    /// Applies a 2-category morphism pointwise (e.g. evaluation at an object).
    pub fn map<C: TwoCategory>(
        &self,
        obj: impl Fn(&B::Obj) -> C::Obj,
        one: impl Fn(&B::Mor) -> C::Mor,
        two: impl Fn(&B::Cell) -> C::Cell,
    ) -> FFunctor<C> {
        FFunctor::build_unchecked(&self.source, |x| obj(self.obj(x)), |f| one(self.one(f)), |a| two(self.two(a)))
    }

    /// The same assignment, read as a functor between 2-cell duals.
    pub fn co(&self, co_source: &Arc<FiniteFCategory>) -> FFunctor<Co<B>> {
        FFunctor {
            source: co_source.clone(),
            objects: self.objects.clone(),
            one_cells: self.one_cells.clone(),
            two_cells: self.two_cells.clone(),
        }
    }
}

/// An identity-on-data inclusion of a finite F-category into itself as a functor.
pub fn identity_ffunctor(c: &Arc<FiniteFCategory>) -> FFunctor<Arc<FiniteFCategory>> {
    FFunctor::build_unchecked(c, |x| x, |f| *f, |a| *a)
}
