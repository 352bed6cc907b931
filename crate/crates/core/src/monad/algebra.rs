//! Strict T-algebras, w-T-morphisms between them, T-transformations, and
//! the F-category `T-Alg_{s,w}` they form.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fcat::{Enumerable, FiniteFCategory, OneCell, TwoCategory, TwoCell, Weakness};

use super::EnhancedMonad;

/// A strict algebra: a tight `a : TA → A` with `a·η_A = 1` and `a·Ta = a·μ_A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TAlgebra {
    pub object: usize,
    pub structure: OneCell,
}

/// A w-T-morphism `(f, f̄)`. For lax, strict and pseudo weakness
/// `f̄ : b·Tf ⇒ f·a`; for colax `f̄ : f·a ⇒ b·Tf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WTMorphism {
    pub weakness: Weakness,
    pub source: TAlgebra,
    pub target: TAlgebra,
    pub map: OneCell,
    pub cell: TwoCell,
}

/// A 2-cell `ρ : f ⇒ g` between parallel w-T-morphisms compatible with
/// their structure cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TTransformation {
    pub source: WTMorphism,
    pub target: WTMorphism,
    pub cell: TwoCell,
}

/// The failed conditions of an algebra; empty iff valid.
pub fn check_algebra(t: &EnhancedMonad, a: &TAlgebra) -> Vec<String> {
    let c = t.carrier.as_ref();
    let x = a.object;
    let s = &a.structure;
    if (s.src, s.dst) != (t.obj(x), x) {
        return vec!["structure type".into()];
    }
    let mut out = Vec::new();
    if !c.is_tight_cell(s) {
        out.push("structure tight".into());
    }
    if c.comp1(s, &t.eta[x]) != c.unit(x) {
        out.push("unit".into());
    }
    if c.comp1(s, &t.one(s)) != c.comp1(s, &t.mu[x]) {
        out.push("multiplication".into());
    }
    out
}

/// All algebras, in carrier-object order.
pub fn enumerate_algebras(t: &EnhancedMonad) -> Vec<TAlgebra> {
    let c = t.carrier.as_ref();
    (0..c.num_objects())
        .flat_map(|x| c.one_cells(t.obj(x), x).map(move |s| TAlgebra { object: x, structure: s }))
        .filter(|a| check_algebra(t, a).is_empty())
        .collect()
}

/// `(source, target)` of the structure cell a w-T-morphism over `f` must have.
fn structure_type(t: &EnhancedMonad, w: Weakness, a: &TAlgebra, b: &TAlgebra, f: &OneCell) -> (OneCell, OneCell) {
    let c = t.carrier.as_ref();
    let upper = c.comp1(&b.structure, &t.one(f));
    let lower = c.comp1(f, &a.structure);
    if w.is_colax() {
        (lower, upper)
    } else {
        (upper, lower)
    }
}

/// The failed conditions of a w-T-morphism; empty iff valid.
pub fn check_w_morphism(t: &EnhancedMonad, m: &WTMorphism) -> Result<Vec<String>> {
    let c = t.carrier.as_ref();
    let (a, b, f) = (&m.source, &m.target, &m.map);
    if (f.src, f.dst) != (a.object, b.object) {
        return Err(Error::ShapeMismatch("underlying 1-cell does not join the algebras".into()));
    }
    if structure_type(t, m.weakness, a, b, f) != (c.cell_source(&m.cell), c.cell_target(&m.cell)) {
        return Ok(vec!["structure cell type".into()]);
    }
    let mut out = Vec::new();
    match m.weakness {
        Weakness::S => {
            if !c.is_tight_cell(f) {
                out.push("underlying 1-cell tight".into());
            }
            if !c.is_identity_cell(&m.cell) {
                out.push("structure cell identity".into());
            }
        }
        Weakness::P if !c.is_invertible(&m.cell) => out.push("structure cell invertible".into()),
        _ => {}
    }
    if !c.is_identity_cell(&c.whisker_right(&m.cell, &t.eta[a.object])?) {
        out.push("unit pasting".into());
    }
    let lhs = c.whisker_right(&m.cell, &t.mu[a.object])?;
    let on_a = c.whisker_right(&m.cell, &t.one(&a.structure))?;
    let on_b = c.whisker_left(&b.structure, &t.two(&m.cell))?;
    let rhs = if m.weakness.is_colax() { c.vcompose(&on_b, &on_a)? } else { c.vcompose(&on_a, &on_b)? };
    if lhs != rhs {
        out.push("multiplication pasting".into());
    }
    Ok(out)
}

/// `g ∘ f` with the pasted structure cell.
pub fn compose_w_morphisms(t: &EnhancedMonad, g: &WTMorphism, f: &WTMorphism) -> Result<WTMorphism> {
    if f.target != g.source || f.weakness != g.weakness {
        return Err(Error::NotComposable("w-T-morphisms with mismatched boundary or weakness".into()));
    }
    let c = t.carrier.as_ref();
    let on_f = c.whisker_left(&g.map, &f.cell)?;
    let on_g = c.whisker_right(&g.cell, &t.one(&f.map))?;
    let cell = if f.weakness.is_colax() { c.vcompose(&on_g, &on_f)? } else { c.vcompose(&on_f, &on_g)? };
    Ok(WTMorphism { weakness: f.weakness, source: f.source, target: g.target, map: c.comp1(&g.map, &f.map), cell })
}

fn identity_morphism(c: &FiniteFCategory, a: &TAlgebra, w: Weakness) -> WTMorphism {
    WTMorphism { weakness: w, source: *a, target: *a, map: c.unit(a.object), cell: c.id_cell(&a.structure) }
}

/// The compatibility of `ρ` with the structure cells; `false` on mismatched boundaries.
pub fn check_t_transformation(t: &EnhancedMonad, r: &TTransformation) -> Result<bool> {
    let c = t.carrier.as_ref();
    let (f, g) = (&r.source, &r.target);
    if f.source != g.source || f.target != g.target || f.weakness != g.weakness {
        return Ok(false);
    }
    if c.cell_source(&r.cell) != f.map || c.cell_target(&r.cell) != g.map {
        return Ok(false);
    }
    let on_b = c.whisker_left(&f.target.structure, &t.two(&r.cell))?;
    let on_a = c.whisker_right(&r.cell, &f.source.structure)?;
    Ok(if f.weakness.is_colax() {
        c.vcompose(&on_b, &f.cell)? == c.vcompose(&g.cell, &on_a)?
    } else {
        c.vcompose(&g.cell, &on_b)? == c.vcompose(&on_a, &f.cell)?
    })
}

/// `T-Alg_{s,w}`: strict algebras, w-T-morphisms, T-transformations. The
/// tight 1-cells are the strict T-morphisms.
#[derive(Clone, Debug)]
pub struct AlgebraCategory {
    pub monad: EnhancedMonad,
    pub weakness: Weakness,
}

impl TwoCategory for AlgebraCategory {
    type Obj = TAlgebra;
    type Mor = WTMorphism;
    type Cell = TTransformation;

    fn mor_src(&self, f: &WTMorphism) -> TAlgebra {
        f.source
    }

    fn mor_dst(&self, f: &WTMorphism) -> TAlgebra {
        f.target
    }

    fn identity(&self, x: &TAlgebra) -> WTMorphism {
        identity_morphism(&self.monad.carrier, x, self.weakness)
    }

    fn compose(&self, g: &WTMorphism, f: &WTMorphism) -> Result<WTMorphism> {
        compose_w_morphisms(&self.monad, g, f)
    }

    fn is_tight(&self, f: &WTMorphism) -> bool {
        let c = self.monad.carrier.as_ref();
        c.is_tight_cell(&f.map) && c.is_identity_cell(&f.cell)
    }

    fn cell_src(&self, a: &TTransformation) -> WTMorphism {
        a.source
    }

    fn cell_dst(&self, a: &TTransformation) -> WTMorphism {
        a.target
    }

    fn identity_cell(&self, f: &WTMorphism) -> TTransformation {
        TTransformation { source: *f, target: *f, cell: self.monad.carrier.id_cell(&f.map) }
    }

    fn vcompose(&self, b: &TTransformation, a: &TTransformation) -> Result<TTransformation> {
        if a.target != b.source {
            return Err(Error::NotComposable("T-transformations with mismatched boundary".into()));
        }
        Ok(TTransformation { source: a.source, target: b.target, cell: self.monad.carrier.vcell(&b.cell, &a.cell)? })
    }

    fn hcompose(&self, b: &TTransformation, a: &TTransformation) -> Result<TTransformation> {
        Ok(TTransformation {
            source: self.compose(&b.source, &a.source)?,
            target: self.compose(&b.target, &a.target)?,
            cell: self.monad.carrier.hcell(&b.cell, &a.cell),
        })
    }

    fn is_invertible(&self, a: &TTransformation) -> bool {
        self.monad.carrier.is_invertible(&a.cell)
    }
}

impl Enumerable for AlgebraCategory {
    fn hom_with_post(
        &self,
        x: &TAlgebra,
        y: &TAlgebra,
        posts: &[(WTMorphism, WTMorphism)],
        bound: usize,
    ) -> Result<Vec<WTMorphism>> {
        let t = &self.monad;
        let c = t.carrier.as_ref();
        let mut out = Vec::new();
        for f in c.one_cells(x.object, y.object) {
            let (src, dst) = structure_type(t, self.weakness, x, y, &f);
            for cell in c.cells_between(&src, &dst) {
                let m = WTMorphism { weakness: self.weakness, source: *x, target: *y, map: f, cell };
                if !check_w_morphism(t, &m)?.is_empty() {
                    continue;
                }
                let mut keep = true;
                for (p, r) in posts {
                    if self.compose(p, &m)? != *r {
                        keep = false;
                        break;
                    }
                }
                if keep {
                    out.push(m);
                    if out.len() > bound {
                        return Err(Error::bound("w-T-morphisms", bound));
                    }
                }
            }
        }
        Ok(out)
    }

    fn cells_with_post(
        &self,
        f: &WTMorphism,
        g: &WTMorphism,
        posts: &[(WTMorphism, TTransformation)],
        bound: usize,
    ) -> Result<Vec<TTransformation>> {
        let t = &self.monad;
        let c = t.carrier.as_ref();
        let mut out = Vec::new();
        for cell in c.cells_between(&f.map, &g.map) {
            let r = TTransformation { source: *f, target: *g, cell };
            if !check_t_transformation(t, &r)? {
                continue;
            }
            let mut keep = true;
            for (p, q) in posts {
                if self.whisker_left(p, &r)? != *q {
                    keep = false;
                    break;
                }
            }
            if keep {
                out.push(r);
                if out.len() > bound {
                    return Err(Error::bound("T-transformations", bound));
                }
            }
        }
        Ok(out)
    }
}
