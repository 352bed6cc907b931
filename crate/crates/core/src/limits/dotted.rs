//! Marked-lax and dotted-lax limits of F-functors into 𝔽, built directly
//! from cones out of the point.
//!
//! An apex object is a family `x_d` with, for every 1-cell `f : d → d′`, a
//! morphism `x_f : S(f)(x_d) → x_{d′}` (reversed for colax cones), identities
//! at marked 1-cells, satisfying unit, composition and 2-cell coherence. It is
//! tight when `x_d` is tight at every dotted `d`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fcat::{
    AmbCell, FAmbient, FFunctor, FObject, FiniteFCategory, LooseMap, LooseTransformation, Modification, OneCell,
    TransformationOptions, TwoCategory, Weakness, WeaknessPair,
};
use crate::fincat::{build_category, FiniteCategory, FiniteFunctor, MorId, ObjId};

/// A finite F-category with marked 1-cells `Σ` and dotted objects `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DottedFCategory {
    pub cat: Arc<FiniteFCategory>,
    pub marked: BTreeSet<OneCell>,
    pub dotted: BTreeSet<ObjId>,
}

impl DottedFCategory {
    /// Adds the units to `marked`, then validates.
    pub fn new(cat: Arc<FiniteFCategory>, marked: BTreeSet<OneCell>, dotted: BTreeSet<ObjId>) -> Result<Self> {
        let mut marked = marked;
        marked.extend((0..cat.num_objects()).map(|x| cat.unit(x)));
        let d = DottedFCategory { cat, marked, dotted };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.cat;
        for x in 0..c.num_objects() {
            if !self.marked.contains(&c.unit(x)) {
                return Err(Error::Invalid(format!("unit of {} is not marked", c.object_name(x))));
            }
        }
        if let Some(&d) = self.dotted.iter().find(|&&d| d >= c.num_objects()) {
            return Err(Error::Invalid(format!("dotted object {d} out of range")));
        }
        for f in &self.marked {
            for g in &self.marked {
                if g.src == f.dst && !self.marked.contains(&c.comp1(g, f)) {
                    return Err(Error::Invalid(format!(
                        "marked 1-cells {} and {} have an unmarked composite",
                        c.one_cell_name(g),
                        c.one_cell_name(f)
                    )));
                }
            }
            if self.dotted.contains(&f.src) && c.is_tight_cell(f) && !self.dotted.contains(&f.dst) {
                return Err(Error::Invalid(format!(
                    "tight marked 1-cell {} leaves the dotted objects",
                    c.one_cell_name(f)
                )));
            }
        }
        Ok(())
    }

    /// Nothing marked but the units, nothing dotted.
    pub fn unmarked(cat: Arc<FiniteFCategory>) -> Self {
        Self::new(cat, BTreeSet::new(), BTreeSet::new()).expect("units are closed under composition")
    }

    /// Every 1-cell marked and every object dotted.
    pub fn strict(cat: Arc<FiniteFCategory>) -> Self {
        let marked = cat.all_one_cells().into_iter().collect();
        let dotted = (0..cat.num_objects()).collect();
        Self::new(cat, marked, dotted).expect("all 1-cells are closed under composition")
    }

    /// Constraints describing dotted-lax cones.
    pub fn options(&self) -> TransformationOptions {
        TransformationOptions { strict_at: self.marked.clone(), tight_at: self.dotted.clone() }
    }
}

/// A 2-category with marked 1-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedTwoCategory {
    pub cat: Arc<FiniteFCategory>,
    pub marked: BTreeSet<OneCell>,
}

impl MarkedTwoCategory {
    pub fn new(cat: Arc<FiniteFCategory>, marked: BTreeSet<OneCell>) -> Result<Self> {
        if !cat.is_chordate() {
            return Err(Error::Invalid("a marked 2-category must have every 1-cell tight".into()));
        }
        let d = DottedFCategory::new(cat, marked, BTreeSet::new())?;
        Ok(MarkedTwoCategory { cat: d.cat, marked: d.marked })
    }

    pub fn as_dotted(&self) -> DottedFCategory {
        DottedFCategory { cat: self.cat.clone(), marked: self.marked.clone(), dotted: BTreeSet::new() }
    }
}

/// Data of a cone out of the point: `objects[d] = x_d`, `arrows[i] = x_f` for
/// the `i`-th 1-cell in `all_one_cells` order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConeKey {
    pub objects: Vec<ObjId>,
    pub arrows: Vec<MorId>,
}

/// A morphism of cones: `components[d] : x_d → y_d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConeMorphism {
    pub src: usize,
    pub dst: usize,
    pub components: Vec<MorId>,
}

/// A dotted-lax limit together with its universal cone.
#[derive(Clone, Debug)]
pub struct DottedLimit {
    pub shape: DottedFCategory,
    pub weakness: Weakness,
    pub apex: FObject,
    pub points: Vec<ConeKey>,
    pub morphisms: Vec<ConeMorphism>,
    pub cone: LooseTransformation<FAmbient>,
}

impl DottedLimit {
    pub fn weakness_pair(&self) -> WeaknessPair {
        WeaknessPair { tight: self.weakness, loose: self.weakness }
    }

    /// The unique 1-cell `K → apex` inducing `psi`.
    pub fn factor(&self, k: &FObject, psi: &LooseTransformation<FAmbient>) -> Result<LooseMap> {
        let cells = self.shape.cat.all_one_cells();
        let key_at = |x: ObjId| ConeKey {
            objects: psi.components.iter().map(|c| c.functor.obj(x)).collect(),
            arrows: cells.iter().map(|f| psi.cell(f).components[x]).collect(),
        };
        let objects = (0..k.loose.num_objects())
            .map(|x| {
                let key = key_at(x);
                self.points.binary_search(&key).map_err(|_| Error::NoLimit(format!("{key:?} is not a cone")))
            })
            .collect::<Result<Vec<_>>>()?;
        let morphisms = (0..k.loose.num_morphisms())
            .map(|u| {
                let key = ConeMorphism {
                    src: objects[k.loose.src(u)],
                    dst: objects[k.loose.dst(u)],
                    components: psi.components.iter().map(|c| c.functor.mor(u)).collect(),
                };
                self.morphism_index(&key)
            })
            .collect::<Result<Vec<_>>>()?;
        LooseMap::new(k.clone(), self.apex.clone(), FiniteFunctor::new(k.loose.clone(), self.apex.loose.clone(), objects, morphisms)?)
    }

    /// The unique 2-cell inducing a modification between two cones.
    pub fn factor_cell(&self, k: &FObject, gamma: &Modification<FAmbient>) -> Result<AmbCell> {
        let src = self.factor(k, &gamma.source)?;
        let dst = self.factor(k, &gamma.target)?;
        let components = (0..src.src.loose.num_objects())
            .map(|x| {
                let key = ConeMorphism {
                    src: src.functor.obj(x),
                    dst: dst.functor.obj(x),
                    components: gamma.components.iter().map(|c| c.components[x]).collect(),
                };
                self.morphism_index(&key)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AmbCell { src, dst, components })
    }

    /// Position of a cone among the apex objects.
    pub fn point_index(&self, key: &ConeKey) -> Result<ObjId> {
        self.points.binary_search(key).map_err(|_| Error::NoLimit(format!("{key:?} is not a cone")))
    }

    /// Position of a cone morphism among the apex morphisms.
    pub fn morphism_index(&self, key: &ConeMorphism) -> Result<MorId> {
        self.morphisms.binary_search(key).map_err(|_| Error::NoLimit(format!("{key:?} is not a cone morphism")))
    }
}

/// Coherence data of `S` needed to test candidate cones.
struct Shape<'a> {
    s: &'a FFunctor<FAmbient>,
    cells: Vec<OneCell>,
    pos: BTreeMap<OneCell, usize>,
    colax: bool,
}

impl Shape<'_> {
    fn loose(&self, d: ObjId) -> &Arc<FiniteCategory> {
        &self.s.obj(d).loose
    }

    /// `x_{g∘f}` from `x_g` and `x_f`.
    fn composite(&self, g: &OneCell, xg: MorId, xf: MorId) -> MorId {
        let c = self.loose(g.dst);
        let sg = self.s.one(g).functor.mor(xf);
        if self.colax {
            c.comp(sg, xg)
        } else {
            c.comp(xg, sg)
        }
    }

    /// Expected type of `x_f`.
    fn arrow_type(&self, f: &OneCell, objects: &[ObjId]) -> (ObjId, ObjId) {
        let image = self.s.one(f).functor.obj(objects[f.src]);
        if self.colax {
            (objects[f.dst], image)
        } else {
            (image, objects[f.dst])
        }
    }
}

/// Builds the dotted-lax limit of `s` for cones of weakness `weakness`.
pub fn dotted_lax_limit(d: &DottedFCategory, s: &FFunctor<FAmbient>, weakness: Weakness, bound: usize) -> Result<DottedLimit> {
    if s.source != d.cat {
        return Err(Error::ShapeMismatch("functor is not defined on the dotted F-category".into()));
    }
    let cat = &d.cat;
    let cells = cat.all_one_cells();
    let pos: BTreeMap<OneCell, usize> = cells.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let shape = Shape { s, cells: cells.clone(), pos, colax: weakness.is_colax() };
    let points = enumerate_points(d, &shape, weakness, bound)?;
    let morphisms = enumerate_point_morphisms(&shape, &points, bound)?;
    let mut morphisms = morphisms;
    morphisms.sort();
    let n = cat.num_objects();
    let mor_list: Vec<(ConeMorphism, ObjId, ObjId)> = morphisms.iter().map(|m| (m.clone(), m.src, m.dst)).collect();
    let ids: Vec<ConeMorphism> = points
        .iter()
        .enumerate()
        .map(|(i, p)| ConeMorphism {
            src: i,
            dst: i,
            components: (0..n).map(|x| shape.loose(x).identity(p.objects[x])).collect(),
        })
        .collect();
    let built = build_category(
        points.clone(),
        mor_list,
        |x| ids[x].clone(),
        |g, f| ConeMorphism {
            src: f.src,
            dst: g.dst,
            components: (0..n).map(|x| shape.loose(x).comp(g.components[x], f.components[x])).collect(),
        },
        |p| format!("{:?}|{:?}", p.objects, p.arrows),
        |m| format!("{}→{}:{:?}", m.src, m.dst, m.components),
    )?;
    let tight: Vec<bool> = points
        .iter()
        .map(|p| d.dotted.iter().all(|&x| s.obj(x).is_tight_object(p.objects[x])))
        .collect();
    let apex = FObject::from_mask(built.cat.clone(), &tight);
    let components: Vec<LooseMap> = (0..n)
        .map(|x| {
            let f = FiniteFunctor::new_unchecked(
                apex.loose.clone(),
                shape.loose(x).clone(),
                points.iter().map(|p| p.objects[x]).collect(),
                morphisms.iter().map(|m| m.components[x]).collect(),
            );
            LooseMap::new(apex.clone(), s.obj(x).clone(), f)
        })
        .collect::<Result<_>>()?;
    let wp = WeaknessPair { tight: weakness, loose: weakness };
    let delta = FFunctor::constant(cat, &FAmbient, &apex);
    let mut tcells = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let mut row = Vec::new();
            for f in cat.one_cells(x, y) {
                let upper = FAmbient.compose(s.one(&f), &components[x])?;
                let lower = FAmbient.compose(&components[y], delta.one(&f))?;
                let (src, dst) = if shape.colax { (lower, upper) } else { (upper, lower) };
                let i = shape.pos[&f];
                row.push(AmbCell { src, dst, components: points.iter().map(|p| p.arrows[i]).collect() });
            }
            tcells.push(row);
        }
    }
    let cone = LooseTransformation { weakness: wp, source: delta, target: s.clone(), components, cells: tcells };
    Ok(DottedLimit { shape: d.clone(), weakness, apex, points, morphisms, cone })
}

/// Marked-lax limit of a 2-functor into Cat, seen inside 𝔽 on chordate objects.
pub fn marked_lax_limit(m: &MarkedTwoCategory, f: &FFunctor<FAmbient>, bound: usize) -> Result<DottedLimit> {
    if let Some(x) = f.objects.iter().position(|o| !o.is_chordate()) {
        return Err(Error::Invalid(format!("value at {} is not a plain category", m.cat.object_name(x))));
    }
    dotted_lax_limit(&m.as_dotted(), f, Weakness::L, bound)
}

fn enumerate_points(d: &DottedFCategory, sh: &Shape<'_>, weakness: Weakness, bound: usize) -> Result<Vec<ConeKey>> {
    let cat = &d.cat;
    let n = cat.num_objects();
    // 1-cells in order; each constraint is checked at the position of its last member
    let cells = &sh.cells;
    let mut comp_checks: Vec<Vec<(usize, usize, usize, OneCell)>> = vec![Vec::new(); cells.len()];
    for f in cells {
        for g in cells.iter().filter(|g| g.src == f.dst) {
            let h = cat.comp1(g, f);
            let (i, j, k) = (sh.pos[g], sh.pos[f], sh.pos[&h]);
            comp_checks[i.max(j).max(k)].push((i, j, k, *g));
        }
    }
    let mut cell_checks: Vec<Vec<(usize, usize, crate::fcat::TwoCell)>> = vec![Vec::new(); cells.len()];
    for a in cat.all_two_cells() {
        let (f, f2) = (cat.cell_source(&a), cat.cell_target(&a));
        let (i, j) = (sh.pos[&f], sh.pos[&f2]);
        cell_checks[i.max(j)].push((i, j, a));
    }
    let mut out = Vec::new();
    let mut objects = vec![0usize; n];
    let mut arrows = vec![0usize; cells.len()];
    loop_objects(0, &mut objects, &mut |objs| {
        let mut ctx = PointSearch { d, sh, weakness, comp_checks: &comp_checks, cell_checks: &cell_checks, objs, bound };
        ctx.run(0, &mut arrows, &mut out)
    }, sh)?;
    out.sort();
    Ok(out)
}

fn loop_objects(
    x: usize,
    objects: &mut Vec<ObjId>,
    k: &mut dyn FnMut(&[ObjId]) -> Result<()>,
    sh: &Shape<'_>,
) -> Result<()> {
    if x == objects.len() {
        return k(objects);
    }
    for o in 0..sh.loose(x).num_objects() {
        objects[x] = o;
        loop_objects(x + 1, objects, k, sh)?;
    }
    Ok(())
}

struct PointSearch<'a, 'b> {
    d: &'a DottedFCategory,
    sh: &'a Shape<'b>,
    weakness: Weakness,
    comp_checks: &'a [Vec<(usize, usize, usize, OneCell)>],
    cell_checks: &'a [Vec<(usize, usize, crate::fcat::TwoCell)>],
    objs: &'a [ObjId],
    bound: usize,
}

impl PointSearch<'_, '_> {
    fn run(&mut self, i: usize, arrows: &mut Vec<MorId>, out: &mut Vec<ConeKey>) -> Result<()> {
        let sh = self.sh;
        if i == sh.cells.len() {
            if out.len() >= self.bound {
                return Err(Error::bound("limit apex objects", self.bound));
            }
            out.push(ConeKey { objects: self.objs.to_vec(), arrows: arrows.clone() });
            return Ok(());
        }
        let f = sh.cells[i];
        let c = sh.loose(f.dst);
        let (a, b) = sh.arrow_type(&f, self.objs);
        let candidates: Vec<MorId> = if self.d.marked.contains(&f) || self.weakness == Weakness::S {
            if a == b {
                vec![c.identity(a)]
            } else {
                vec![]
            }
        } else {
            c.hom(a, b).iter().copied().filter(|&m| self.weakness != Weakness::P || c.is_iso(m)).collect()
        };
        'cand: for m in candidates {
            arrows[i] = m;
            for &(gi, fi, hi, g) in &self.comp_checks[i] {
                if arrows[hi] != sh.composite(&g, arrows[gi], arrows[fi]) {
                    continue 'cand;
                }
            }
            for &(fi, f2i, a) in &self.cell_checks[i] {
                let comp = sh.s.two(&a).components[self.objs[a.src]];
                let t = sh.loose(a.dst);
                let ok = if sh.colax {
                    t.comp(comp, arrows[fi]) == arrows[f2i]
                } else {
                    t.comp(arrows[f2i], comp) == arrows[fi]
                };
                if !ok {
                    continue 'cand;
                }
            }
            self.run(i + 1, arrows, out)?;
        }
        Ok(())
    }
}

fn enumerate_point_morphisms(sh: &Shape<'_>, points: &[ConeKey], bound: usize) -> Result<Vec<ConeMorphism>> {
    let n = sh.s.source.num_objects();
    let mut out = Vec::new();
    for (pi, p) in points.iter().enumerate() {
        for (qi, q) in points.iter().enumerate() {
            let mut comps = vec![0usize; n];
            point_morphisms(sh, p, q, 0, &mut comps, &mut |c| {
                if out.len() >= bound {
                    return Err(Error::bound("limit apex morphisms", bound));
                }
                out.push(ConeMorphism { src: pi, dst: qi, components: c.to_vec() });
                Ok(())
            })?;
        }
    }
    Ok(out)
}

fn point_morphisms(
    sh: &Shape<'_>,
    p: &ConeKey,
    q: &ConeKey,
    x: usize,
    comps: &mut Vec<MorId>,
    emit: &mut dyn FnMut(&[MorId]) -> Result<()>,
) -> Result<()> {
    if x == comps.len() {
        return emit(comps);
    }
    let c = sh.loose(x);
    for &m in c.hom(p.objects[x], q.objects[x]) {
        comps[x] = m;
        // naturality at every 1-cell whose endpoints are both assigned
        let ok = sh.cells.iter().filter(|f| f.src.max(f.dst) == x).all(|f| {
            let i = sh.pos[f];
            let sf = sh.s.one(f).functor.mor(comps[f.src]);
            let t = sh.loose(f.dst);
            if sh.colax {
                t.comp(sf, p.arrows[i]) == t.comp(q.arrows[i], comps[f.dst])
            } else {
                t.comp(q.arrows[i], sf) == t.comp(comps[f.dst], p.arrows[i])
            }
        });
        if ok {
            point_morphisms(sh, p, q, x + 1, comps, emit)?;
        }
    }
    Ok(())
}
