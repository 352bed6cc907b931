//! Mates of adjunctions between models along an F-natural transformation,
//! and the check that the adjunction lifts to the loose level.
//!
//! For lax, strict and pseudo weakness the data is `α ⊣ β` with
//! `η : 1_M ⇒ βα` and `ε : αβ ⇒ 1_N`; the mate at `t : X → Y` is
//! `(β_Y N(t) ε_X)·(η_Y M(t) β_X) : M(t)β_X ⇒ β_Y N(t)`. For colax weakness
//! the data is `β ⊣ α` with `η : 1_N ⇒ αβ`, `ε : βα ⇒ 1_M`, and the mate
//! `(ε_Y M(t) β_X)·(β_Y N(t) η_X) : β_Y N(t) ⇒ M(t)β_X`.

use crate::error::{Error, Result};
use crate::fcat::{
    check_loose_natural, check_modification, AmbCell, FAmbient, FFunctor, LooseMap, LooseTransformation,
    Modification, OneCell, TwoCategory, Weakness, WeaknessPair,
};

/// An adjunction between the components of `α : M ⇒ N` and `β : N ⇒ M`.
#[derive(Clone, Debug)]
pub struct AdjunctionData {
    pub weakness: Weakness,
    /// F-natural.
    pub alpha: LooseTransformation<FAmbient>,
    pub beta: Vec<LooseMap>,
    pub unit: Vec<AmbCell>,
    pub counit: Vec<AmbCell>,
}

impl AdjunctionData {
    fn source(&self) -> &FFunctor<FAmbient> {
        &self.alpha.source
    }

    fn target(&self) -> &FFunctor<FAmbient> {
        &self.alpha.target
    }

    /// `(left, right)` adjoint components at `x`.
    fn adjoints(&self, x: usize) -> (&LooseMap, &LooseMap) {
        if self.weakness.is_colax() {
            (&self.beta[x], &self.alpha.components[x])
        } else {
            (&self.alpha.components[x], &self.beta[x])
        }
    }

    /// The functors `η` and `ε` whisker against at a 1-cell: the domain of
    /// the left adjoint, then that of the right.
    fn ends(&self) -> (&FFunctor<FAmbient>, &FFunctor<FAmbient>) {
        if self.weakness.is_colax() {
            (self.target(), self.source())
        } else {
            (self.source(), self.target())
        }
    }

    fn pair(&self) -> WeaknessPair {
        WeaknessPair::strict_on_tight(self.weakness)
    }
}

fn triangle_failures(d: &AdjunctionData) -> Result<Vec<String>> {
    let a = &FAmbient;
    let s = &d.source().source;
    let mut out = Vec::new();
    for x in 0..s.num_objects() {
        let (l, r) = d.adjoints(x);
        let (eta, eps) = (&d.unit[x], &d.counit[x]);
        let left = a.vcompose(&a.whisker_right(eps, l)?, &a.whisker_left(l, eta)?);
        if left.map_or(true, |c| !a.is_identity_cell(&c)) {
            out.push(format!("left triangle at {}", s.object_name(x)));
        }
        let right = a.vcompose(&a.whisker_left(r, eps)?, &a.whisker_right(eta, r)?);
        if right.map_or(true, |c| !a.is_identity_cell(&c)) {
            out.push(format!("right triangle at {}", s.object_name(x)));
        }
    }
    Ok(out)
}

fn check_shapes(d: &AdjunctionData) -> Result<()> {
    let (m, n) = (d.source(), d.target());
    let k = m.source.num_objects();
    if d.beta.len() != k || d.unit.len() != k || d.counit.len() != k {
        return Err(Error::ShapeMismatch("adjunction data does not match the models".into()));
    }
    if !d.alpha.is_f_natural(&FAmbient) {
        return Err(Error::InvalidTransformation("α is not F-natural".into()));
    }
    for x in 0..k {
        let b = &d.beta[x];
        if b.src != *n.obj(x) || b.dst != *m.obj(x) {
            return Err(Error::ShapeMismatch(format!("β component at {} has the wrong type", m.source.object_name(x))));
        }
    }
    Ok(())
}

/// Naturality of `β` and the modification axioms of `η`, `ε` at tight 1-cells.
fn tight_failures(d: &AdjunctionData) -> Result<Vec<String>> {
    let a = &FAmbient;
    let (m, n) = (d.source(), d.target());
    let s = &m.source;
    let (lo, hi) = d.ends();
    let mut out = Vec::new();
    for t in s.all_one_cells().into_iter().filter(|t| s.is_tight_cell(t)) {
        let name = s.one_cell_name(&t);
        if a.compose(m.one(&t), &d.beta[t.src])? != a.compose(&d.beta[t.dst], n.one(&t))? {
            out.push(format!("β naturality at {name}"));
        }
        let eta_y = a.whisker_right(&d.unit[t.dst], lo.one(&t));
        let eta_x = a.whisker_left(lo.one(&t), &d.unit[t.src]);
        if eta_y.is_err() || eta_y != eta_x {
            out.push(format!("unit at {name}"));
        }
        let eps_y = a.whisker_right(&d.counit[t.dst], hi.one(&t));
        let eps_x = a.whisker_left(hi.one(&t), &d.counit[t.src]);
        if eps_y.is_err() || eps_y != eps_x {
            out.push(format!("counit at {name}"));
        }
    }
    for c in s.all_two_cells() {
        let (u, v) = (s.cell_source(&c), s.cell_target(&c));
        if !s.is_tight_cell(&u) || !s.is_tight_cell(&v) {
            continue;
        }
        if a.whisker_left(&d.beta[v.dst], n.two(&c))? != a.whisker_right(m.two(&c), &d.beta[u.src])? {
            out.push(format!("β 2-naturality at {}", s.cell_name(&c)));
        }
    }
    Ok(out)
}

fn mate_cell(d: &AdjunctionData, t: &OneCell) -> Result<AmbCell> {
    let a = &FAmbient;
    let (m, n) = (d.source(), d.target());
    let (bx, by) = (&d.beta[t.src], &d.beta[t.dst]);
    let (mt, nt) = (m.one(t), n.one(t));
    if d.weakness.is_colax() {
        // β_Y N(t) ⇒ β_Y N(t) α_X β_X = β_Y α_Y M(t) β_X ⇒ M(t) β_X
        let first = a.whisker_left(&a.compose(by, nt)?, &d.unit[t.src])?;
        let second = a.whisker_right(&d.counit[t.dst], &a.compose(mt, bx)?)?;
        a.vcompose(&second, &first)
    } else {
        // M(t) β_X ⇒ β_Y α_Y M(t) β_X = β_Y N(t) α_X β_X ⇒ β_Y N(t)
        let first = a.whisker_right(&d.unit[t.dst], &a.compose(mt, bx)?)?;
        let second = a.whisker_left(&a.compose(by, nt)?, &d.counit[t.src])?;
        a.vcompose(&second, &first)
    }
}

/// The mate `β̄ : N ⇒ M`, a loose `(s, w)`-natural transformation in the
/// orientation of this crate.
pub fn mate_transformation(d: &AdjunctionData) -> Result<LooseTransformation<FAmbient>> {
    check_shapes(d)?;
    let triangles = triangle_failures(d)?;
    if let Some(first) = triangles.first() {
        return Err(Error::NotAnAdjunction(first.clone()));
    }
    if let Some(first) = tight_failures(d)?.first() {
        return Err(Error::NotAnAdjunction(first.clone()));
    }
    let (m, n) = (d.source(), d.target());
    let s = &m.source;
    let k = s.num_objects();
    let mut cells = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            cells.push(s.one_cells(x, y).map(|t| mate_cell(d, &t)).collect::<Result<Vec<_>>>()?);
        }
    }
    let bar = LooseTransformation { weakness: d.pair(), source: n.clone(), target: m.clone(), components: d.beta.clone(), cells };
    let report = check_loose_natural(&FAmbient, &bar, n, m)?;
    if !report.is_valid() {
        return Err(Error::InvalidTransformation(format!("mate is not natural: {:?}", report.violations)));
    }
    Ok(bar)
}

/// The failed conditions for `η`, `ε` to be modifications exhibiting
/// `α ⊣ β̄` (or `β̄ ⊣ α` when colax) among loose transformations; empty iff
/// the adjunction lifts.
pub fn check_doctrinal_lift(d: &AdjunctionData, bar: &LooseTransformation<FAmbient>) -> Result<Vec<String>> {
    let a = &FAmbient;
    let (m, n) = (d.source(), d.target());
    if bar.source != *n || bar.target != *m || bar.weakness != d.pair() {
        return Err(Error::ShapeMismatch("β̄ does not run N ⇒ M with the adjunction's weakness".into()));
    }
    let report = check_loose_natural(a, bar, n, m)?;
    if !report.is_valid() {
        return Ok(report.violations.iter().map(|v| format!("β̄ {:?} at {}", v.kind, v.at)).collect());
    }
    let alpha = LooseTransformation { weakness: d.pair(), ..d.alpha.clone() };
    let (to_m, to_n) = (alpha.then(a, bar)?, bar.then(a, &alpha)?);
    let (id_m, id_n) = (LooseTransformation::identity(a, m, d.pair()), LooseTransformation::identity(a, n, d.pair()));
    let (unit, counit) = if d.weakness.is_colax() {
        (
            Modification { source: id_n, target: to_n, components: d.unit.clone() },
            Modification { source: to_m, target: id_m, components: d.counit.clone() },
        )
    } else {
        (
            Modification { source: id_m, target: to_m, components: d.unit.clone() },
            Modification { source: to_n, target: id_n, components: d.counit.clone() },
        )
    };
    let mut out = triangle_failures(d)?;
    out.extend(check_modification(a, &unit)?.into_iter().map(|at| format!("unit at {at}")));
    out.extend(check_modification(a, &counit)?.into_iter().map(|at| format!("counit at {at}")));
    Ok(out)
}
