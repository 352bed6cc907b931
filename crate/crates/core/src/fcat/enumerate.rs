//! Enumeration of loose transformations and modifications by constrained
//! backtracking.
//!
//! Components are assigned first, in an order where the target of every
//! strict 1-cell comes before its source, so that `N(t)∘φ_X = φ_Y∘M(t)` can
//! be imposed as a postcomposition constraint on `φ_X`. 2-components are then
//! assigned one 1-cell at a time; a 1-cell that factors through two already
//! assigned ones has its component forced by the composition law.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::fcategory::{FiniteFCategory, OneCell, TwoCell};
use super::functor::{FFunctor, Weakness};
use super::transform::{cell_type, check_loose_natural, LooseTransformation, Modification, WeaknessPair, check_modification};
use super::two_cat::Enumerable;

/// Extra constraints on enumerated transformations.
#[derive(Clone, Debug, Default)]
pub struct TransformationOptions {
    /// 1-cells whose 2-component must be an identity.
    pub strict_at: BTreeSet<OneCell>,
    /// Objects whose 1-component must be tight.
    pub tight_at: BTreeSet<usize>,
}

/// All loose `(w′, w)`-natural transformations `m ⇒ n`, in canonical order.
pub fn enumerate_loose_transformations<B: Enumerable>(
    b: &B,
    m: &FFunctor<B>,
    n: &FFunctor<B>,
    weakness: WeaknessPair,
    options: &TransformationOptions,
    bound: usize,
) -> Result<Vec<LooseTransformation<B>>> {
    if m.source != n.source {
        return Err(Error::ShapeMismatch("transformations between functors with different sources".into()));
    }
    let s = &*m.source;
    let plan = Plan::new(s, weakness, options);
    let k = s.num_objects();
    let mut run = Run {
        b,
        m,
        n,
        s,
        weakness,
        options,
        plan: &plan,
        components: vec![None; k],
        cells: (0..k * k).map(|h| vec![None; s.hom_cat(h / k, h % k).cat.num_objects()]).collect(),
        out: Vec::new(),
        bound,
    };
    // unit 1-cells carry identity 2-components once components are known
    run.objects(0)?;
    let mut out = run.out;
    out.sort();
    Ok(out)
}

struct Plan {
    object_order: Vec<usize>,
    cell_order: Vec<OneCell>,
    strict: BTreeSet<OneCell>,
    /// for each position in `cell_order`, a forcing decomposition `t = u ∘ v`
    decompositions: Vec<Option<(OneCell, OneCell)>>,
    /// for each position, `(u, u∘t)` with `u` strict and `u∘t` earlier
    posts: Vec<Vec<(OneCell, OneCell)>>,
    /// composition triples `(u, t, u∘t)` checked at the position of their last member
    comp_checks: Vec<Vec<(OneCell, OneCell)>>,
    /// non-identity 2-cells checked at the position of the later of their boundaries
    cell_checks: Vec<Vec<TwoCell>>,
}

impl Plan {
    fn new(s: &FiniteFCategory, w: WeaknessPair, options: &TransformationOptions) -> Plan {
        let k = s.num_objects();
        let all = s.all_one_cells();
        let strict: BTreeSet<OneCell> = all
            .iter()
            .copied()
            .filter(|t| {
                s.is_unit(t)
                    || w.loose == Weakness::S
                    || (w.tight == Weakness::S && s.is_tight_cell(t))
                    || options.strict_at.contains(t)
            })
            .collect();
        // greedily place the object most constrained by strict 1-cells into placed ones
        let mut object_order = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        let arrows: Vec<(usize, usize)> =
            strict.iter().filter(|t| t.src != t.dst && !s.is_unit(t)).map(|t| (t.src, t.dst)).collect();
        while object_order.len() < k {
            let score = |x: usize| {
                let into = arrows.iter().filter(|&&(a, b)| a == x && placed[b]).count();
                let open = arrows.iter().filter(|&&(a, b)| a == x && !placed[b]).count();
                (into, std::cmp::Reverse(open), std::cmp::Reverse(x))
            };
            let x = (0..k).filter(|&x| !placed[x]).max_by_key(|&x| score(x)).expect("unplaced object");
            placed[x] = true;
            object_order.push(x);
        }
        let mut opos = vec![0; k];
        for (i, &x) in object_order.iter().enumerate() {
            opos[x] = i;
        }
        let mut cell_order: Vec<OneCell> = all.iter().copied().filter(|t| !s.is_unit(t)).collect();
        cell_order.sort_by_key(|t| (opos[t.dst], opos[t.src], t.idx));
        let pos_of = |t: &OneCell| cell_order.iter().position(|c| c == t);
        let mut decompositions = vec![None; cell_order.len()];
        let mut posts = vec![Vec::new(); cell_order.len()];
        let mut comp_checks = vec![Vec::new(); cell_order.len()];
        for (i, t) in cell_order.iter().enumerate() {
            for v in cell_order[..i].iter() {
                if v.src != t.src {
                    continue;
                }
                for u in cell_order[..i].iter().filter(|u| u.src == v.dst && u.dst == t.dst) {
                    if s.comp1(u, v) == *t && decompositions[i].is_none() {
                        decompositions[i] = Some((*u, *v));
                    }
                }
            }
        }
        for (i, t) in cell_order.iter().enumerate() {
            for u in cell_order.iter().filter(|u| u.src == t.dst) {
                let ut = s.comp1(u, t);
                let (pu, put) = (pos_of(u).expect("listed"), pos_of(&ut));
                if let Some(put) = put {
                    comp_checks[i.max(pu).max(put)].push((*u, *t));
                    if strict.contains(u) && put < i && pu < i {
                        posts[i].push((*u, ut));
                    }
                } else {
                    // u ∘ t is a unit: its component is an identity, fixed up front
                    comp_checks[i.max(pu)].push((*u, *t));
                }
            }
        }
        let mut cell_checks = vec![Vec::new(); cell_order.len()];
        for a in s.all_two_cells() {
            let (t, t2) = (s.cell_source(&a), s.cell_target(&a));
            if t == t2 && s.hom_cat(a.src, a.dst).cat.is_identity(a.idx) {
                continue;
            }
            let p = [t, t2].iter().filter_map(|c| pos_of(c)).max();
            match p {
                Some(p) => cell_checks[p].push(a),
                None => {
                    // both boundaries are the unit; checked with the first cell or at the end
                    if !cell_order.is_empty() {
                        cell_checks[0].push(a)
                    }
                }
            }
        }
        Plan { object_order, cell_order, strict, decompositions, posts, comp_checks, cell_checks }
    }
}

struct Run<'a, B: Enumerable> {
    b: &'a B,
    m: &'a FFunctor<B>,
    n: &'a FFunctor<B>,
    s: &'a FiniteFCategory,
    weakness: WeaknessPair,
    options: &'a TransformationOptions,
    plan: &'a Plan,
    components: Vec<Option<B::Mor>>,
    cells: Vec<Vec<Option<B::Cell>>>,
    out: Vec<LooseTransformation<B>>,
    bound: usize,
}

impl<B: Enumerable> Run<'_, B> {
    fn hom_index(&self, t: &OneCell) -> usize {
        t.src * self.s.num_objects() + t.dst
    }

    fn cell(&self, t: &OneCell) -> &B::Cell {
        self.cells[self.hom_index(t)][t.idx].as_ref().expect("assigned")
    }

    fn component(&self, x: usize) -> &B::Mor {
        self.components[x].as_ref().expect("assigned")
    }

    fn objects(&mut self, i: usize) -> Result<()> {
        let plan = self.plan;
        if i == plan.object_order.len() {
            let all: Vec<B::Mor> = self.components.iter().map(|c| c.clone().expect("assigned")).collect();
            // identity components at units
            for x in 0..self.s.num_objects() {
                let u = self.s.unit(x);
                let (f, g) = cell_type(self.b, self.m, self.n, &all, self.weakness, &u)?;
                if f != g {
                    return Ok(());
                }
                let h = self.hom_index(&u);
                self.cells[h][u.idx] = Some(self.b.identity_cell(&f));
            }
            return self.cells_from(0);
        }
        let x = plan.object_order[i];
        let mut posts = Vec::new();
        for t in plan.strict.iter().filter(|t| t.src == x && t.dst != x && !self.s.is_unit(t)) {
            if let Some(py) = &self.components[t.dst] {
                posts.push((self.n.one(t).clone(), self.b.compose(py, self.m.one(t))?));
            }
        }
        let candidates = self.b.hom_with_post(self.m.obj(x), self.n.obj(x), &posts, self.bound)?;
        for c in candidates {
            if self.options.tight_at.contains(&x) && !self.b.is_tight(&c) {
                continue;
            }
            self.components[x] = Some(c);
            self.objects(i + 1)?;
        }
        self.components[x] = None;
        Ok(())
    }

    fn cells_from(&mut self, i: usize) -> Result<()> {
        let plan = self.plan;
        if i == plan.cell_order.len() {
            return self.emit();
        }
        let t = plan.cell_order[i];
        let comps: Vec<B::Mor> = self.components.iter().map(|c| c.clone().expect("assigned")).collect();
        let (f, g) = cell_type(self.b, self.m, self.n, &comps, self.weakness, &t)?;
        let candidates: Vec<B::Cell> = if plan.strict.contains(&t) {
            if f == g {
                vec![self.b.identity_cell(&f)]
            } else {
                vec![]
            }
        } else if let Some((u, v)) = plan.decompositions[i] {
            let c = self.composite(&u, &v)?;
            if self.b.cell_src(&c) == f && self.b.cell_dst(&c) == g {
                vec![c]
            } else {
                vec![]
            }
        } else {
            let posts: Vec<(B::Mor, B::Cell)> =
                plan.posts[i].iter().map(|(u, ut)| (self.n.one(u).clone(), self.cell(ut).clone())).collect();
            self.b.cells_with_post(&f, &g, &posts, self.bound)?
        };
        let h = self.hom_index(&t);
        for c in candidates {
            match self.weakness.loose {
                Weakness::P if !self.b.is_invertible(&c) => continue,
                Weakness::S if !self.b.is_identity_cell(&c) => continue,
                _ => {}
            }
            if self.weakness.tight == Weakness::P && self.s.is_tight_cell(&t) && !self.b.is_invertible(&c) {
                continue;
            }
            self.cells[h][t.idx] = Some(c);
            if self.local_checks(i)? {
                self.cells_from(i + 1)?;
            }
        }
        self.cells[h][t.idx] = None;
        Ok(())
    }

    /// The 2-component at `u ∘ v` forced by those at `u` and `v`.
    fn composite(&self, u: &OneCell, v: &OneCell) -> Result<B::Cell> {
        let lower = self.b.whisker_left(self.n.one(u), self.cell(v))?;
        let upper = self.b.whisker_right(self.cell(u), self.m.one(v))?;
        if self.weakness.is_colax() {
            self.b.vcompose(&lower, &upper)
        } else {
            self.b.vcompose(&upper, &lower)
        }
    }

    fn local_checks(&self, i: usize) -> Result<bool> {
        for (u, t) in &self.plan.comp_checks[i] {
            let ut = self.s.comp1(u, t);
            if self.composite(u, t)? != *self.cell(&ut) {
                return Ok(false);
            }
        }
        let colax = self.weakness.is_colax();
        for a in &self.plan.cell_checks[i] {
            let (t, t2) = (self.s.cell_source(a), self.s.cell_target(a));
            let (x, y) = (a.src, a.dst);
            let n_alpha = self.b.whisker_right(self.n.two(a), self.component(x))?;
            let m_alpha = self.b.whisker_left(self.component(y), self.m.two(a))?;
            let ok = if colax {
                self.b.vcompose(&n_alpha, self.cell(&t))? == self.b.vcompose(self.cell(&t2), &m_alpha)?
            } else {
                self.b.vcompose(self.cell(&t2), &n_alpha)? == self.b.vcompose(&m_alpha, self.cell(&t))?
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn emit(&mut self) -> Result<()> {
        let phi = LooseTransformation {
            weakness: self.weakness,
            source: self.m.clone(),
            target: self.n.clone(),
            components: self.components.iter().map(|c| c.clone().expect("assigned")).collect(),
            cells: self.cells.iter().map(|row| row.iter().map(|c| c.clone().expect("assigned")).collect()).collect(),
        };
        if !check_loose_natural(self.b, &phi, self.m, self.n)?.is_valid() {
            return Ok(());
        }
        if self.out.len() >= self.bound {
            return Err(Error::bound("loose transformations", self.bound));
        }
        self.out.push(phi);
        Ok(())
    }
}

/// All modifications `phi ⇛ psi`, in canonical order.
pub fn enumerate_modifications<B: Enumerable>(
    b: &B,
    phi: &LooseTransformation<B>,
    psi: &LooseTransformation<B>,
    bound: usize,
) -> Result<Vec<Modification<B>>> {
    let s = &phi.source.source;
    let k = s.num_objects();
    let mut choices = Vec::with_capacity(k);
    for x in 0..k {
        choices.push(b.cells(&phi.components[x], &psi.components[x], bound)?);
    }
    let mut out = Vec::new();
    let mut current: Vec<B::Cell> = Vec::with_capacity(k);
    fn go<B: Enumerable>(
        b: &B,
        phi: &LooseTransformation<B>,
        psi: &LooseTransformation<B>,
        choices: &[Vec<B::Cell>],
        current: &mut Vec<B::Cell>,
        out: &mut Vec<Modification<B>>,
        bound: usize,
    ) -> Result<()> {
        if current.len() == choices.len() {
            let g = Modification { source: phi.clone(), target: psi.clone(), components: current.clone() };
            if check_modification(b, &g)?.is_empty() {
                if out.len() >= bound {
                    return Err(Error::bound("modifications", bound));
                }
                out.push(g);
            }
            return Ok(());
        }
        for c in &choices[current.len()] {
            current.push(c.clone());
            go(b, phi, psi, choices, current, out, bound)?;
            current.pop();
        }
        Ok(())
    }
    go(b, phi, psi, &choices, &mut current, &mut out, bound)?;
    Ok(out)
}
