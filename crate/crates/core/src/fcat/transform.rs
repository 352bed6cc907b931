//! Loose (w′, w)-natural transformations between F-functors and
//! modifications between them.
//!
//! Orientation: for `t : X → Y` a lax 2-component is `φ_t : N(t)·φ_X ⇒ φ_Y·M(t)`,
//! a colax one points the other way. Strict and pseudo components use the
//! lax orientation.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::fcategory::OneCell;
use super::functor::{value_traits, FFunctor, Weakness};
use super::two_cat::{Co, TwoCategory};

/// `(w′, w)`: `w′` applies at tight 1-cells, `w` everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeaknessPair {
    pub tight: Weakness,
    pub loose: Weakness,
}

impl WeaknessPair {
    pub fn new(tight: Weakness, loose: Weakness) -> Result<Self> {
        if !tight.leq(loose) {
            return Err(Error::Invalid(format!("weakness pair ({tight}, {loose}) is not ordered")));
        }
        Ok(WeaknessPair { tight, loose })
    }

    /// `(s, w)`.
    pub fn strict_on_tight(loose: Weakness) -> Self {
        WeaknessPair { tight: Weakness::S, loose }
    }

    pub fn bar(self) -> Self {
        WeaknessPair { tight: self.tight.bar(), loose: self.loose.bar() }
    }

    pub fn is_colax(self) -> bool {
        self.loose.is_colax()
    }
}

impl fmt::Display for WeaknessPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tight, self.loose)
    }
}

pub struct LooseTransformation<B: TwoCategory> {
    pub weakness: WeaknessPair,
    pub source: FFunctor<B>,
    pub target: FFunctor<B>,
    pub components: Vec<B::Mor>,
    /// per hom `x * n + y`, per 1-cell
    pub cells: Vec<Vec<B::Cell>>,
}

fn cmp_trans<B: TwoCategory>(a: &LooseTransformation<B>, b: &LooseTransformation<B>) -> Ordering {
    a.components
        .cmp(&b.components)
        .then_with(|| a.cells.cmp(&b.cells))
        .then_with(|| a.weakness.cmp(&b.weakness))
        .then_with(|| a.source.cmp(&b.source))
        .then_with(|| a.target.cmp(&b.target))
}

value_traits!(LooseTransformation { weakness, source, target, components, cells } by cmp_trans);

pub struct Modification<B: TwoCategory> {
    pub source: LooseTransformation<B>,
    pub target: LooseTransformation<B>,
    pub components: Vec<B::Cell>,
}

fn cmp_modif<B: TwoCategory>(a: &Modification<B>, b: &Modification<B>) -> Ordering {
    a.components
        .cmp(&b.components)
        .then_with(|| a.source.cmp(&b.source))
        .then_with(|| a.target.cmp(&b.target))
}

value_traits!(Modification { source, target, components } by cmp_modif);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ViolationKind {
    ComponentType,
    CellType,
    Unit,
    Composition,
    TwoCellNaturality,
    NotStrictAtTight,
    NotInvertible,
    NotIdentity,
}

/// One failed coherence condition, located by name in the source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub at: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    pub violations: Vec<Violation>,
    /// Every 1-component is tight.
    pub tight: bool,
}

impl NaturalityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<B: TwoCategory> LooseTransformation<B> {
    pub fn component(&self, x: usize) -> &B::Mor {
        &self.components[x]
    }

    pub fn cell(&self, t: &OneCell) -> &B::Cell {
        &self.cells[t.src * self.source.source.num_objects() + t.dst][t.idx]
    }

    /// The identity transformation, strict everywhere.
    pub fn identity(b: &B, m: &FFunctor<B>, weakness: WeaknessPair) -> Self {
        let s = &m.source;
        let n = s.num_objects();
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(s.one_cells(x, y).map(|t| b.identity_cell(m.one(&t))).collect());
            }
        }
        LooseTransformation {
            weakness,
            source: m.clone(),
            target: m.clone(),
            components: m.objects.iter().map(|o| b.identity(o)).collect(),
            cells,
        }
    }

    /// Source and target 1-cells of the 2-component at `t`.
    pub fn cell_type(&self, b: &B, t: &OneCell) -> Result<(B::Mor, B::Mor)> {
        cell_type(b, &self.source, &self.target, &self.components, self.weakness, t)
    }

    /// `ψ ∘ self`.
    pub fn then(&self, b: &B, psi: &LooseTransformation<B>) -> Result<LooseTransformation<B>> {
        if self.target != psi.source || self.weakness != psi.weakness {
            return Err(Error::NotComposable("transformations with mismatched boundary or weakness".into()));
        }
        let s = &self.source.source;
        let n = s.num_objects();
        let components = (0..n)
            .map(|x| b.compose(&psi.components[x], &self.components[x]))
            .collect::<Result<Vec<_>>>()?;
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let mut row = Vec::new();
                for t in s.one_cells(x, y) {
                    // (ψφ)_t from ψ_Y * φ_t and ψ_t * φ_X
                    let a = b.whisker_left(&psi.components[y], self.cell(&t))?;
                    let c = b.whisker_right(psi.cell(&t), &self.components[x])?;
                    row.push(if self.weakness.is_colax() { b.vcompose(&c, &a)? } else { b.vcompose(&a, &c)? });
                }
                cells.push(row);
            }
        }
        Ok(LooseTransformation { weakness: self.weakness, source: self.source.clone(), target: psi.target.clone(), components, cells })
    }

    /// Every 1-component tight and every 2-component an identity.
    pub fn is_f_natural(&self, b: &B) -> bool {
        self.components.iter().all(|c| b.is_tight(c)) && self.cells.iter().flatten().all(|c| b.is_identity_cell(c))
    }
}

pub(crate) fn cell_type<B: TwoCategory>(
    b: &B,
    m: &FFunctor<B>,
    n: &FFunctor<B>,
    components: &[B::Mor],
    weakness: WeaknessPair,
    t: &OneCell,
) -> Result<(B::Mor, B::Mor)> {
    let upper = b.compose(n.one(t), &components[t.src])?;
    let lower = b.compose(&components[t.dst], m.one(t))?;
    Ok(if weakness.is_colax() { (lower, upper) } else { (upper, lower) })
}

/// Checks every coherence condition of a loose `(w′, w)`-natural transformation.
pub fn check_loose_natural<B: TwoCategory>(
    b: &B,
    phi: &LooseTransformation<B>,
    m: &FFunctor<B>,
    n: &FFunctor<B>,
) -> Result<NaturalityReport> {
    if phi.source != *m || phi.target != *n {
        return Err(Error::ShapeMismatch("transformation does not run between the given functors".into()));
    }
    let s = &m.source;
    let k = s.num_objects();
    if phi.components.len() != k
        || phi.cells.len() != k * k
        || (0..k * k).any(|h| phi.cells[h].len() != s.hom_cat(h / k, h % k).cat.num_objects())
    {
        return Err(Error::ShapeMismatch("transformation tables do not match the source".into()));
    }
    let mut violations = Vec::new();
    let mut push = |kind, at: String| violations.push(Violation { kind, at });
    let mut typed = true;
    for x in 0..k {
        let c = &phi.components[x];
        if b.mor_src(c) != *m.obj(x) || b.mor_dst(c) != *n.obj(x) {
            push(ViolationKind::ComponentType, s.object_name(x).to_string());
            typed = false;
        }
    }
    if !typed {
        return Ok(NaturalityReport { violations, tight: false });
    }
    let w = phi.weakness;
    let colax = w.is_colax();
    let ones = s.all_one_cells();
    for t in &ones {
        let (f, g) = cell_type(b, m, n, &phi.components, w, t)?;
        let c = phi.cell(t);
        if b.cell_src(c) != f || b.cell_dst(c) != g {
            push(ViolationKind::CellType, s.one_cell_name(t));
            typed = false;
            continue;
        }
        let identity = b.is_identity_cell(c);
        if s.is_unit(t) && !identity {
            push(ViolationKind::Unit, s.one_cell_name(t));
        }
        if s.is_tight_cell(t) {
            match w.tight {
                Weakness::S if !identity => push(ViolationKind::NotStrictAtTight, s.one_cell_name(t)),
                Weakness::P if !b.is_invertible(c) => push(ViolationKind::NotStrictAtTight, s.one_cell_name(t)),
                _ => {}
            }
        }
        match w.loose {
            Weakness::S if !identity => push(ViolationKind::NotIdentity, s.one_cell_name(t)),
            Weakness::P if !b.is_invertible(c) => push(ViolationKind::NotInvertible, s.one_cell_name(t)),
            _ => {}
        }
    }
    if !typed {
        return Ok(NaturalityReport { violations, tight: false });
    }
    for t in &ones {
        for u in (0..k).flat_map(|z| s.one_cells(t.dst, z)) {
            if s.is_unit(t) || s.is_unit(&u) {
                continue;
            }
            let ut = s.comp1(&u, t);
            let lower = b.whisker_left(n.one(&u), phi.cell(t))?;
            let upper = b.whisker_right(phi.cell(&u), m.one(t))?;
            let composite = if colax { b.vcompose(&lower, &upper)? } else { b.vcompose(&upper, &lower)? };
            if composite != *phi.cell(&ut) {
                push(ViolationKind::Composition, format!("{} ∘ {}", s.one_cell_name(&u), s.one_cell_name(t)));
            }
        }
    }
    for alpha in s.all_two_cells() {
        let (t, t2) = (s.cell_source(&alpha), s.cell_target(&alpha));
        if t == t2 && s.hom_cat(alpha.src, alpha.dst).cat.is_identity(alpha.idx) {
            continue;
        }
        let (x, y) = (alpha.src, alpha.dst);
        let n_alpha = b.whisker_right(n.two(&alpha), &phi.components[x])?;
        let m_alpha = b.whisker_left(&phi.components[y], m.two(&alpha))?;
        let (lhs, rhs) = if colax {
            (b.vcompose(&n_alpha, phi.cell(&t))?, b.vcompose(phi.cell(&t2), &m_alpha)?)
        } else {
            (b.vcompose(phi.cell(&t2), &n_alpha)?, b.vcompose(&m_alpha, phi.cell(&t))?)
        };
        if lhs != rhs {
            push(ViolationKind::TwoCellNaturality, s.cell_name(&alpha));
        }
    }
    let tight = phi.components.iter().all(|c| b.is_tight(c));
    Ok(NaturalityReport { violations, tight })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Level {
    Tight,
    Fit,
    Loose,
}

/// Classifies a valid loose `(s, w)`-natural transformation.
pub fn classify_transformation<B: TwoCategory>(b: &B, phi: &LooseTransformation<B>) -> Result<Level> {
    let report = check_loose_natural(b, phi, &phi.source, &phi.target)?;
    if !report.is_valid() || phi.weakness.tight != Weakness::S {
        return Err(Error::InvalidTransformation(format!(
            "not a loose (s, {})-natural transformation: {:?}",
            phi.weakness.loose, report.violations
        )));
    }
    let identities = phi.cells.iter().flatten().all(|c| b.is_identity_cell(c));
    Ok(match (identities, report.tight) {
        (true, true) => Level::Tight,
        (true, false) => Level::Fit,
        _ => Level::Loose,
    })
}

impl<B: TwoCategory> Modification<B> {
    pub fn identity(b: &B, phi: &LooseTransformation<B>) -> Self {
        Modification {
            source: phi.clone(),
            target: phi.clone(),
            components: phi.components.iter().map(|c| b.identity_cell(c)).collect(),
        }
    }

    /// `other · self`.
    pub fn then(&self, b: &B, other: &Modification<B>) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::NotComposable("modifications with mismatched boundary".into()));
        }
        Ok(Modification {
            source: self.source.clone(),
            target: other.target.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, c)| b.vcompose(c, a))
                .collect::<Result<_>>()?,
        })
    }

    /// `other * self` for `self : φ ⇛ φ′ (M ⇒ N)` and `other : ψ ⇛ ψ′ (N ⇒ P)`.
    pub fn hthen(&self, b: &B, other: &Modification<B>) -> Result<Self> {
        Ok(Modification {
            source: self.source.then(b, &other.source)?,
            target: self.target.then(b, &other.target)?,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, c)| b.hcompose(c, a))
                .collect::<Result<_>>()?,
        })
    }

    pub fn is_invertible(&self, b: &B) -> bool {
        self.components.iter().all(|c| b.is_invertible(c))
    }
}

/// The modification axiom at every 1-cell; returns the names of failing ones.
pub fn check_modification<B: TwoCategory>(b: &B, gamma: &Modification<B>) -> Result<Vec<String>> {
    let (phi, psi) = (&gamma.source, &gamma.target);
    if phi.source != psi.source || phi.target != psi.target || phi.weakness != psi.weakness {
        return Err(Error::ShapeMismatch("modification between transformations of different types".into()));
    }
    let (m, n) = (&phi.source, &phi.target);
    let s = &m.source;
    let mut failures = Vec::new();
    for x in 0..s.num_objects() {
        let c = &gamma.components[x];
        if b.cell_src(c) != phi.components[x] || b.cell_dst(c) != psi.components[x] {
            failures.push(s.object_name(x).to_string());
        }
    }
    if !failures.is_empty() {
        return Ok(failures);
    }
    for t in s.all_one_cells() {
        let gx = b.whisker_left(n.one(&t), &gamma.components[t.src])?;
        let gy = b.whisker_right(&gamma.components[t.dst], m.one(&t))?;
        let ok = if phi.weakness.is_colax() {
            b.vcompose(&gx, phi.cell(&t))? == b.vcompose(psi.cell(&t), &gy)?
        } else {
            b.vcompose(psi.cell(&t), &gx)? == b.vcompose(&gy, phi.cell(&t))?
        };
        if !ok {
            failures.push(s.one_cell_name(&t));
        }
    }
    Ok(failures)
}

/// A transformation between the 2-cell duals: lax cells become colax and
/// vice versa.
pub fn co_transformation<B: TwoCategory>(
    phi: &LooseTransformation<B>,
    m_co: &FFunctor<Co<B>>,
    n_co: &FFunctor<Co<B>>,
) -> LooseTransformation<Co<B>> {
    LooseTransformation {
        weakness: phi.weakness.bar(),
        source: m_co.clone(),
        target: n_co.clone(),
        components: phi.components.clone(),
        cells: phi.cells.clone(),
    }
}
