//! Exhaustive enumeration of functors and natural transformations, and the
//! constructions built on it (functor categories, pullbacks, isomorphism search).

use std::sync::Arc;

use super::category::{FiniteCategory, MorId, ObjId};
use super::construct::{build_category, Built};
use super::functor::{same_cat, FiniteFunctor, NatTrans};
use crate::error::{Error, Result};

/// Default cap on the number of enumerated candidates.
pub const DEFAULT_BOUND: usize = 100_000;

/// Constraints for [`search_functors`].
pub struct FunctorSearch<'a> {
    pub object_ok: &'a dyn Fn(ObjId, ObjId) -> bool,
    pub morphism_ok: &'a dyn Fn(MorId, MorId) -> bool,
    pub injective: bool,
}

impl Default for FunctorSearch<'_> {
    fn default() -> Self {
        FunctorSearch { object_ok: &|_, _| true, morphism_ok: &|_, _| true, injective: false }
    }
}

enum Var {
    Obj(ObjId),
    Mor(MorId),
}

/// All functors `a → b` in canonical order, limited to `bound` results.
pub fn enumerate_functors(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    bound: usize,
) -> Result<Vec<FiniteFunctor>> {
    search_functors(a, b, &FunctorSearch::default(), bound)
}

/// Backtracking search over object and morphism assignments. Variables are
/// ordered so that each morphism is assigned as soon as both endpoints are,
/// and every composition constraint is checked once its three cells are known.
pub fn search_functors(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    search: &FunctorSearch<'_>,
    bound: usize,
) -> Result<Vec<FiniteFunctor>> {
    let n = a.num_objects();
    let m = a.num_morphisms();
    let (order, checks) = plan(a);
    let mut state = SearchState {
        a,
        b,
        search,
        order: &order,
        checks: &checks,
        objects: vec![usize::MAX; n],
        morphisms: vec![usize::MAX; m],
        used_obj: vec![false; b.num_objects()],
        used_mor: vec![false; b.num_morphisms()],
        out: Vec::new(),
        bound,
        first_only: false,
    };
    state.run(0)?;
    Ok(state.out)
}

/// The first functor satisfying `search`, in canonical order.
pub fn first_functor(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    search: &FunctorSearch<'_>,
) -> Option<FiniteFunctor> {
    let n = a.num_objects();
    let m = a.num_morphisms();
    let (order, checks) = plan(a);
    let mut state = SearchState {
        a,
        b,
        search,
        order: &order,
        checks: &checks,
        objects: vec![usize::MAX; n],
        morphisms: vec![usize::MAX; m],
        used_obj: vec![false; b.num_objects()],
        used_mor: vec![false; b.num_morphisms()],
        out: Vec::new(),
        bound: 1,
        first_only: true,
    };
    state.run(0).ok()?;
    state.out.pop()
}

type Plan = (Vec<Var>, Vec<Vec<(MorId, MorId, MorId)>>);

fn plan(a: &FiniteCategory) -> Plan {
    let n = a.num_objects();
    let m = a.num_morphisms();
    let mut order = Vec::with_capacity(n + m);
    let mut mor_pos = vec![0usize; m];
    for x in 0..n {
        order.push(Var::Obj(x));
        for f in 0..m {
            let (s, d) = (a.src(f), a.dst(f));
            if s.max(d) == x {
                mor_pos[f] = order.len();
                order.push(Var::Mor(f));
            }
        }
    }
    // constraints (g, f, gf) checked at the position of their last cell
    let mut checks: Vec<Vec<(MorId, MorId, MorId)>> = vec![Vec::new(); order.len()];
    for g in 0..m {
        for x in 0..n {
            for &f in a.hom(x, a.src(g)) {
                if a.is_identity(f) || a.is_identity(g) {
                    continue;
                }
                let gf = a.comp(g, f);
                let last = mor_pos[g].max(mor_pos[f]).max(mor_pos[gf]);
                checks[last].push((g, f, gf));
            }
        }
    }
    (order, checks)
}

struct SearchState<'s> {
    a: &'s Arc<FiniteCategory>,
    b: &'s Arc<FiniteCategory>,
    search: &'s FunctorSearch<'s>,
    order: &'s [Var],
    checks: &'s [Vec<(MorId, MorId, MorId)>],
    objects: Vec<ObjId>,
    morphisms: Vec<MorId>,
    used_obj: Vec<bool>,
    used_mor: Vec<bool>,
    out: Vec<FiniteFunctor>,
    bound: usize,
    first_only: bool,
}

impl SearchState<'_> {
    /// Returns `true` once the search should stop.
    fn run(&mut self, pos: usize) -> Result<bool> {
        if pos == self.order.len() {
            if self.out.len() >= self.bound {
                return Err(Error::bound("functors", self.bound));
            }
            self.out.push(FiniteFunctor::new_unchecked(
                self.a.clone(),
                self.b.clone(),
                self.objects.clone(),
                self.morphisms.clone(),
            ));
            return Ok(self.first_only);
        }
        match self.order[pos] {
            Var::Obj(x) => {
                for y in 0..self.b.num_objects() {
                    if !(self.search.object_ok)(x, y) || (self.search.injective && self.used_obj[y]) {
                        continue;
                    }
                    self.objects[x] = y;
                    self.used_obj[y] = true;
                    let stop = self.run(pos + 1)?;
                    self.used_obj[y] = false;
                    if stop {
                        return Ok(true);
                    }
                }
                self.objects[x] = usize::MAX;
            }
            Var::Mor(f) => {
                let (s, d) = (self.objects[self.a.src(f)], self.objects[self.a.dst(f)]);
                let candidates: Vec<MorId> = if self.a.is_identity(f) {
                    vec![self.b.identity(s)]
                } else {
                    self.b.hom(s, d).to_vec()
                };
                for g in candidates {
                    if !(self.search.morphism_ok)(f, g) || (self.search.injective && self.used_mor[g]) {
                        continue;
                    }
                    self.morphisms[f] = g;
                    let ok = self.checks[pos].iter().all(|&(p, q, pq)| {
                        self.b.comp(self.morphisms[p], self.morphisms[q]) == self.morphisms[pq]
                    });
                    if ok {
                        self.used_mor[g] = true;
                        let stop = self.run(pos + 1)?;
                        self.used_mor[g] = false;
                        if stop {
                            return Ok(true);
                        }
                    }
                }
                self.morphisms[f] = usize::MAX;
            }
        }
        Ok(false)
    }
}

/// Finds an isomorphism of categories, if one exists.
pub fn find_isomorphism(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> Option<FiniteFunctor> {
    if a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms() {
        return None;
    }
    let sig = |c: &FiniteCategory, x: ObjId| {
        let n = c.num_objects();
        let mut out: Vec<usize> = (0..n).map(|y| c.hom(x, y).len()).collect();
        let mut inc: Vec<usize> = (0..n).map(|y| c.hom(y, x).len()).collect();
        out.sort_unstable();
        inc.sort_unstable();
        (c.hom(x, x).len(), out, inc)
    };
    let sa: Vec<_> = (0..a.num_objects()).map(|x| sig(a, x)).collect();
    let sb: Vec<_> = (0..b.num_objects()).map(|x| sig(b, x)).collect();
    let object_ok = |x: ObjId, y: ObjId| sa[x] == sb[y];
    let search = FunctorSearch { object_ok: &object_ok, morphism_ok: &|_, _| true, injective: true };
    // the first injective functor between equinumerous categories is an iso
    first_functor(a, b, &search)
}

/// Natural transformations `f ⇒ g`, optionally filtered per component.
pub fn enumerate_nat_trans(
    f: &FiniteFunctor,
    g: &FiniteFunctor,
    component_ok: &dyn Fn(ObjId, MorId) -> bool,
    bound: usize,
) -> Result<Vec<NatTrans>> {
    if !same_cat(&f.source, &g.source) || !same_cat(&f.target, &g.target) {
        return Err(Error::ShapeMismatch("transformations between functors of different types".into()));
    }
    let a = &f.source;
    let b = &f.target;
    let n = a.num_objects();
    // naturality squares checked once both endpoints are assigned
    let mut checks: Vec<Vec<MorId>> = vec![Vec::new(); n];
    for m in 0..a.num_morphisms() {
        if !a.is_identity(m) {
            checks[a.src(m).max(a.dst(m))].push(m);
        }
    }
    let mut comps = vec![usize::MAX; n];
    let mut out = Vec::new();
    fn go(
        x: usize,
        f: &FiniteFunctor,
        g: &FiniteFunctor,
        b: &FiniteCategory,
        checks: &[Vec<MorId>],
        ok: &dyn Fn(ObjId, MorId) -> bool,
        comps: &mut Vec<MorId>,
        out: &mut Vec<NatTrans>,
        bound: usize,
    ) -> Result<()> {
        let a = &f.source;
        if x == a.num_objects() {
            if out.len() >= bound {
                return Err(Error::bound("natural transformations", bound));
            }
            out.push(NatTrans { source: f.clone(), target: g.clone(), components: comps.clone() });
            return Ok(());
        }
        for &c in b.hom(f.obj(x), g.obj(x)) {
            if !ok(x, c) {
                continue;
            }
            comps[x] = c;
            let natural = checks[x].iter().all(|&m| {
                let (s, d) = (a.src(m), a.dst(m));
                b.comp(g.mor(m), comps[s]) == b.comp(comps[d], f.mor(m))
            });
            if natural {
                go(x + 1, f, g, b, checks, ok, comps, out, bound)?;
            }
        }
        comps[x] = usize::MAX;
        Ok(())
    }
    go(0, f, g, b, &checks, component_ok, &mut comps, &mut out, bound)?;
    Ok(out)
}

/// The functor category `[a, b]` with its objects (functors) and morphisms
/// (natural transformations) as keys.
pub type FunctorCategory = Built<FiniteFunctor, NatTrans>;

pub fn functor_category(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>, bound: usize) -> Result<FunctorCategory> {
    functor_category_of(enumerate_functors(a, b, bound)?, bound)
}

/// The full subcategory of a functor category spanned by `functors`.
pub fn functor_category_of(functors: Vec<FiniteFunctor>, bound: usize) -> Result<FunctorCategory> {
    let mut morphisms = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for t in enumerate_nat_trans(f, g, &|_, _| true, bound)? {
                morphisms.push((t, i, j));
                if morphisms.len() > bound {
                    return Err(Error::bound("functor category morphisms", bound));
                }
            }
        }
    }
    let fs = functors.clone();
    build_category(
        functors,
        morphisms,
        |x| NatTrans::identity(&fs[x]),
        |t, s| t.vcompose(s).expect("composable by construction"),
        functor_name,
        |t| format!("[{}]", t.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")),
    )
}

pub(crate) fn functor_name(f: &FiniteFunctor) -> String {
    let objs: Vec<String> = f.objects.iter().map(|&o| f.target.object_name(o).to_string()).collect();
    let mors: Vec<String> = f.morphisms.iter().map(|m| m.to_string()).collect();
    format!("<{}|{}>", objs.join(","), mors.join(","))
}

/// The strict pullback of a cospan of functors.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub cat: Arc<FiniteCategory>,
    pub left: FiniteFunctor,
    pub right: FiniteFunctor,
    pub objects: Vec<(ObjId, ObjId)>,
    pub morphisms: Vec<(MorId, MorId)>,
}

pub fn pullback_category(f: &FiniteFunctor, g: &FiniteFunctor) -> Result<Pullback> {
    if !same_cat(&f.target, &g.target) {
        return Err(Error::ShapeMismatch("pullback of functors into different categories".into()));
    }
    let (a, b) = (&f.source, &g.source);
    let mut objects = Vec::new();
    for x in 0..a.num_objects() {
        for y in 0..b.num_objects() {
            if f.obj(x) == g.obj(y) {
                objects.push((x, y));
            }
        }
    }
    let index = |p: (ObjId, ObjId)| objects.iter().position(|&q| q == p);
    let mut morphisms = Vec::new();
    for p in 0..a.num_morphisms() {
        for q in 0..b.num_morphisms() {
            if f.mor(p) == g.mor(q) {
                let s = index((a.src(p), b.src(q))).expect("endpoints lie in the pullback");
                let d = index((a.dst(p), b.dst(q))).expect("endpoints lie in the pullback");
                morphisms.push(((p, q), s, d));
            }
        }
    }
    let objs = objects.clone();
    let built = build_category(
        objects.clone(),
        morphisms,
        |i| (a.identity(objs[i].0), b.identity(objs[i].1)),
        |&(p2, q2), &(p1, q1)| (a.comp(p2, p1), b.comp(q2, q1)),
        |&(x, y)| format!("({},{})", a.object_name(x), b.object_name(y)),
        |&(p, q)| format!("({},{})", a.morphism(p).name, b.morphism(q).name),
    )?;
    let left = FiniteFunctor::new_unchecked(
        built.cat.clone(),
        a.clone(),
        built.objects.iter().map(|o| o.0).collect(),
        built.morphisms.iter().map(|m| m.0).collect(),
    );
    let right = FiniteFunctor::new_unchecked(
        built.cat.clone(),
        b.clone(),
        built.objects.iter().map(|o| o.1).collect(),
        built.morphisms.iter().map(|m| m.1).collect(),
    );
    Ok(Pullback { cat: built.cat, left, right, objects: built.objects, morphisms: built.morphisms })
}

impl Pullback {
    /// The mediating functor of a commuting cone `(p, q)` over the cospan.
    pub fn mediate(&self, p: &FiniteFunctor, q: &FiniteFunctor) -> Result<FiniteFunctor> {
        let k = &p.source;
        let mut objects = Vec::with_capacity(k.num_objects());
        for x in 0..k.num_objects() {
            let key = (p.obj(x), q.obj(x));
            objects.push(
                self.objects
                    .iter()
                    .position(|&o| o == key)
                    .ok_or_else(|| Error::Invalid("cone does not commute on objects".into()))?,
            );
        }
        let mut morphisms = Vec::with_capacity(k.num_morphisms());
        for m in 0..k.num_morphisms() {
            let key = (p.mor(m), q.mor(m));
            morphisms.push(
                self.morphisms
                    .iter()
                    .position(|&o| o == key)
                    .ok_or_else(|| Error::Invalid("cone does not commute on morphisms".into()))?,
            );
        }
        FiniteFunctor::new(k.clone(), self.cat.clone(), objects, morphisms)
    }
}
