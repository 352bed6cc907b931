//! Weighted limits `{W, D}` in 𝔽 (and in Cat, on chordate objects).
//!
//! A weighted cone from `K` is stored uncurried: one functor
//! `leg_j : W(j) × K → D(j)` per object `j`, strictly natural in `j` and
//! compatible with the 2-cells of the shape. It is tight when tight pairs
//! `(w, k)` land on tight objects.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fcat::{
    enumerate_loose_transformations, enumerate_modifications, Enumerable, FAmbient, FFunctor, FObject, LooseMap,
    LooseTransformation, Modification, TransformationOptions, Weakness, WeaknessPair,
};
use crate::fincat::{
    build_category, enumerate_nat_trans, search_functors, FiniteCategory, FiniteFunctor, FunctorSearch, NatTrans,
};

use super::oracle::Certificate;

/// A weighted cone over `D` with weight `W` and apex `apex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientCone {
    pub apex: FObject,
    pub legs: Vec<FiniteFunctor>,
}

/// `{W, D}` with its points (strict transformations `W ⇒ D`) and limit cone.
#[derive(Clone, Debug)]
pub struct WeightedLimit {
    pub apex: FObject,
    pub points: Vec<LooseTransformation<FAmbient>>,
    pub morphisms: Vec<Modification<FAmbient>>,
    pub cone: AmbientCone,
}

fn strict() -> WeaknessPair {
    WeaknessPair { tight: Weakness::S, loose: Weakness::S }
}

fn product(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> Arc<FiniteCategory> {
    Arc::new(FiniteCategory::product(a, b))
}

/// The weighted limit by the end formula.
pub fn weighted_limit_end(w: &FFunctor<FAmbient>, d: &FFunctor<FAmbient>, bound: usize) -> Result<WeightedLimit> {
    if w.source != d.source {
        return Err(Error::ShapeMismatch("weight and diagram have different shapes".into()));
    }
    let mut points = enumerate_loose_transformations(&FAmbient, w, d, strict(), &TransformationOptions::default(), bound)?;
    points.sort();
    let mut morphisms = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            for m in enumerate_modifications(&FAmbient, p, q, bound)? {
                morphisms.push((m, i, j));
            }
            if morphisms.len() > bound {
                return Err(Error::bound("weighted limit morphisms", bound));
            }
        }
    }
    morphisms.sort();
    let pts = points.clone();
    let built = build_category(
        points.clone(),
        morphisms.clone(),
        |x| Modification::identity(&FAmbient, &pts[x]),
        |g, f| f.then(&FAmbient, g).expect("composable by construction"),
        |p| format!("{:?}", p.components.iter().map(|c| &c.functor.objects).collect::<Vec<_>>()),
        |m| format!("{:?}", m.components.iter().map(|c| &c.components).collect::<Vec<_>>()),
    )?;
    let tight: Vec<bool> = points.iter().map(|p| p.components.iter().all(LooseMap::is_tight)).collect();
    let apex = FObject::from_mask(built.cat.clone(), &tight);
    let l = &apex.loose;
    let (nl, ml) = (l.num_objects(), l.num_morphisms());
    let legs = (0..w.source.num_objects())
        .map(|j| {
            let wj = &w.obj(j).loose;
            let dj = &d.obj(j).loose;
            let src = product(wj, l);
            let objects = (0..src.num_objects()).map(|o| points[o % nl].components[j].functor.obj(o / nl)).collect();
            let mors = (0..src.num_morphisms())
                .map(|m| {
                    let (u, g) = (m / ml, m % ml);
                    let phi = &points[l.src(g)].components[j];
                    let gamma = &built.morphisms[g].components[j];
                    dj.comp(gamma.components[wj.dst(u)], phi.functor.mor(u))
                })
                .collect();
            FiniteFunctor::new(src, dj.clone(), objects, mors)
        })
        .collect::<Result<Vec<_>>>()?;
    let morphisms = morphisms.into_iter().map(|(m, _, _)| m).collect();
    Ok(WeightedLimit { cone: AmbientCone { apex: apex.clone(), legs }, apex, points, morphisms })
}

/// The first violated condition of a weighted cone, if any.
pub fn weighted_cone_violation(w: &FFunctor<FAmbient>, d: &FFunctor<FAmbient>, cone: &AmbientCone) -> Option<String> {
    let s = &w.source;
    if cone.legs.len() != s.num_objects() {
        return Some("wrong number of legs".into());
    }
    for j in 0..s.num_objects() {
        let leg = &cone.legs[j];
        if *leg.source != FiniteCategory::product(&w.obj(j).loose, &cone.apex.loose) || leg.target != d.obj(j).loose {
            return Some(format!("leg at {} has the wrong type", s.object_name(j)));
        }
        if leg.validate().is_err() {
            return Some(format!("leg at {} is not a functor", s.object_name(j)));
        }
    }
    let k = &cone.apex.loose;
    for j in 0..s.num_objects() {
        for j2 in 0..s.num_objects() {
            for t in s.one_cells(j, j2) {
                if let Some(v) = leg_pair_violation(w, d, k, &cone.legs[j], &cone.legs[j2], &t) {
                    return Some(v);
                }
            }
        }
    }
    None
}

/// Naturality at `t : j → j2` and compatibility with the 2-cells out of `t`.
fn leg_pair_violation(
    w: &FFunctor<FAmbient>,
    d: &FFunctor<FAmbient>,
    k: &Arc<FiniteCategory>,
    lj: &FiniteFunctor,
    lj2: &FiniteFunctor,
    t: &crate::fcat::OneCell,
) -> Option<String> {
    let s = &w.source;
    let (nk, mk) = (k.num_objects(), k.num_morphisms());
    let (wt, dt) = (&w.one(t).functor, &d.one(t).functor);
    let wj = &w.obj(t.src).loose;
    for o in 0..wj.num_objects() * nk {
        if dt.obj(lj.obj(o)) != lj2.obj(wt.obj(o / nk) * nk + o % nk) {
            return Some(format!("not natural at {}", s.one_cell_name(t)));
        }
    }
    for m in 0..wj.num_morphisms() * mk {
        if dt.mor(lj.mor(m)) != lj2.mor(wt.mor(m / mk) * mk + m % mk) {
            return Some(format!("not natural at {}", s.one_cell_name(t)));
        }
    }
    for a in s.two_cells(t.src, t.dst).filter(|a| s.cell_source(a) == *t) {
        let (wa, da) = (w.two(&a), d.two(&a));
        for o in 0..wj.num_objects() * nk {
            let (x, y) = (o / nk, o % nk);
            if da.components[lj.obj(o)] != lj2.mor(wa.components[x] * mk + k.identity(y)) {
                return Some(format!("not compatible with the 2-cell {}", s.cell_name(&a)));
            }
        }
    }
    None
}

fn tight_leg_ok(w: &FObject, k: &FObject, dj: &FObject, leg: &FiniteFunctor) -> bool {
    let nk = k.loose.num_objects();
    let (tw, tk) = (w.tight_mask(), k.tight_mask());
    (0..leg.source.num_objects()).all(|o| !(tw[o / nk] && tk[o % nk]) || dj.is_tight_object(leg.obj(o)))
}

/// Whether every pair of tight objects lands on a tight object.
pub fn is_tight_cone(w: &FFunctor<FAmbient>, d: &FFunctor<FAmbient>, cone: &AmbientCone) -> bool {
    cone.legs.iter().enumerate().all(|(j, l)| tight_leg_ok(w.obj(j), &cone.apex, d.obj(j), l))
}

/// Every weighted cone from `k`; only tight ones when `tight` is set.
pub fn enumerate_weighted_cones(
    w: &FFunctor<FAmbient>,
    d: &FFunctor<FAmbient>,
    k: &FObject,
    tight: bool,
    bound: usize,
) -> Result<Vec<Vec<FiniteFunctor>>> {
    let s = &w.source;
    let n = s.num_objects();
    let mut candidates = Vec::with_capacity(n);
    for j in 0..n {
        let src = product(&w.obj(j).loose, &k.loose);
        let mut legs = search_functors(&src, &d.obj(j).loose, &FunctorSearch::default(), bound)?;
        if tight {
            legs.retain(|l| tight_leg_ok(w.obj(j), k, d.obj(j), l));
        }
        candidates.push(legs);
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    fn go(
        w: &FFunctor<FAmbient>,
        d: &FFunctor<FAmbient>,
        k: &Arc<FiniteCategory>,
        candidates: &[Vec<FiniteFunctor>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<FiniteFunctor>>,
        bound: usize,
    ) -> Result<()> {
        let s = &w.source;
        let j = chosen.len();
        if j == candidates.len() {
            if out.len() >= bound {
                return Err(Error::bound("weighted cones", bound));
            }
            out.push(chosen.iter().enumerate().map(|(i, &c)| candidates[i][c].clone()).collect());
            return Ok(());
        }
        for c in 0..candidates[j].len() {
            chosen.push(c);
            let leg = |i: usize| &candidates[i][chosen[i]];
            let ok = (0..=j).all(|i| {
                s.one_cells(i, j).all(|t| leg_pair_violation(w, d, k, leg(i), leg(j), &t).is_none())
                    && (i == j || s.one_cells(j, i).all(|t| leg_pair_violation(w, d, k, leg(j), leg(i), &t).is_none()))
            });
            if ok {
                go(w, d, k, candidates, chosen, out, bound)?;
            }
            chosen.pop();
        }
        Ok(())
    }
    go(w, d, &k.loose, &candidates, &mut chosen, &mut out, bound)?;
    Ok(out)
}

/// Modifications between two weighted cones from the same apex.
pub fn enumerate_weighted_cone_cells(
    w: &FFunctor<FAmbient>,
    d: &FFunctor<FAmbient>,
    k: &FObject,
    a: &[FiniteFunctor],
    b: &[FiniteFunctor],
    bound: usize,
) -> Result<Vec<Vec<NatTrans>>> {
    let s = &w.source;
    let (nk, n) = (k.loose.num_objects(), s.num_objects());
    let per: Vec<Vec<NatTrans>> =
        (0..n).map(|j| enumerate_nat_trans(&a[j], &b[j], &|_, _| true, bound)).collect::<Result<_>>()?;
    let compatible = |i: usize, ti: &NatTrans, j: usize, tj: &NatTrans| {
        s.one_cells(i, j).all(|t| {
            let (wt, dt) = (&w.one(&t).functor, &d.one(&t).functor);
            (0..ti.components.len()).all(|o| dt.mor(ti.components[o]) == tj.components[wt.obj(o / nk) * nk + o % nk])
        })
    };
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    loop_cells(&per, &mut chosen, &mut |ch| {
        let j = ch.len() - 1;
        (0..=j).all(|i| compatible(i, &per[i][ch[i]], j, &per[j][ch[j]]) && compatible(j, &per[j][ch[j]], i, &per[i][ch[i]]))
    }, &mut |ch| {
        if out.len() >= bound {
            return Err(Error::bound("weighted cone modifications", bound));
        }
        out.push(ch.iter().enumerate().map(|(i, &c)| per[i][c].clone()).collect());
        Ok(())
    })?;
    Ok(out)
}

fn loop_cells(
    per: &[Vec<NatTrans>],
    chosen: &mut Vec<usize>,
    ok: &mut dyn FnMut(&[usize]) -> bool,
    emit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let j = chosen.len();
    if j == per.len() {
        return emit(chosen);
    }
    for c in 0..per[j].len() {
        chosen.push(c);
        if ok(chosen) {
            loop_cells(per, chosen, ok, emit)?;
        }
        chosen.pop();
    }
    Ok(())
}

/// `leg ∘ (1 × h)`.
fn leg_after(leg: &FiniteFunctor, wj: &Arc<FiniteCategory>, h: &LooseMap) -> FiniteFunctor {
    let (k, l) = (&h.src.loose, &h.dst.loose);
    let (nk, mk, nl, ml) = (k.num_objects(), k.num_morphisms(), l.num_objects(), l.num_morphisms());
    FiniteFunctor::new_unchecked(
        product(wj, k),
        leg.target.clone(),
        (0..wj.num_objects() * nk).map(|o| leg.obj((o / nk) * nl + h.functor.obj(o % nk))).collect(),
        (0..wj.num_morphisms() * mk).map(|m| leg.mor((m / mk) * ml + h.functor.mor(m % mk))).collect(),
    )
}

/// Components `(w, k) ↦ leg(1_w, c_k)` of the modification induced by `c : h ⇒ h′`.
fn leg_cell(leg: &FiniteFunctor, wj: &Arc<FiniteCategory>, c: &crate::fcat::AmbCell, a: &FiniteFunctor, b: &FiniteFunctor) -> NatTrans {
    let ml = c.src.dst.loose.num_morphisms();
    let nk = c.src.src.loose.num_objects();
    NatTrans {
        source: a.clone(),
        target: b.clone(),
        components: (0..wj.num_objects() * nk)
            .map(|o| leg.mor(wj.identity(o / nk) * ml + c.components[o % nk]))
            .collect(),
    }
}

/// Decides whether `cone` is a limit cone against every test object.
pub fn check_weighted_limit_universal(
    cone: &AmbientCone,
    w: &FFunctor<FAmbient>,
    d: &FFunctor<FAmbient>,
    tests: &[FObject],
    bound: usize,
) -> Result<Certificate> {
    let mut cert = Certificate::default();
    if let Some(v) = weighted_cone_violation(w, d, cone) {
        cert.fail(format!("not a weighted cone: {v}"));
        return Ok(cert);
    }
    let n = w.source.num_objects();
    let wl = |j: usize| &w.obj(j).loose;
    for k in tests {
        cert.tests += 1;
        let mut cones = enumerate_weighted_cones(w, d, k, false, bound)?;
        cones.sort();
        let maps = FAmbient.hom(k, &cone.apex, bound)?;
        cert.one_cells_checked += maps.len();
        let induced: Vec<Vec<FiniteFunctor>> =
            maps.iter().map(|h| (0..n).map(|j| leg_after(&cone.legs[j], wl(j), h)).collect()).collect();
        for (h, legs) in maps.iter().zip(&induced) {
            let c = AmbientCone { apex: k.clone(), legs: legs.clone() };
            if h.is_tight() != is_tight_cone(w, d, &c) {
                cert.fail(format!("test {k:?}: tightness of a 1-cell differs from that of its cone"));
            }
        }
        let mut sorted = induced.clone();
        sorted.sort();
        let len = sorted.len();
        sorted.dedup();
        if sorted.len() != len {
            cert.fail(format!("test {k:?}: two 1-cells induce the same cone"));
        }
        if sorted != cones {
            cert.fail(format!("test {k:?}: {} weighted cones but {} induced", cones.len(), sorted.len()));
            continue;
        }
        for (hi, h) in maps.iter().enumerate() {
            for (gi, g) in maps.iter().enumerate() {
                let cells = FAmbient.cells(h, g, bound)?;
                cert.two_cells_checked += cells.len();
                let mut mods = enumerate_weighted_cone_cells(w, d, k, &induced[hi], &induced[gi], bound)?;
                mods.sort();
                let mut got: Vec<Vec<NatTrans>> = cells
                    .iter()
                    .map(|c| (0..n).map(|j| leg_cell(&cone.legs[j], wl(j), c, &induced[hi][j], &induced[gi][j])).collect())
                    .collect();
                got.sort();
                let len = got.len();
                got.dedup();
                if got.len() != len || got != mods {
                    cert.fail(format!("test {k:?}: {} cone modifications but {} 2-cells", mods.len(), len));
                }
            }
        }
    }
    Ok(cert)
}

/// The category of weighted cones out of the terminal F-object, by exhaustive enumeration.
pub fn weighted_oracle_apex(w: &FFunctor<FAmbient>, d: &FFunctor<FAmbient>, bound: usize) -> Result<FObject> {
    let one = FObject::terminal();
    let mut cones = enumerate_weighted_cones(w, d, &one, false, bound)?;
    cones.sort();
    let mut cells = Vec::new();
    for (i, a) in cones.iter().enumerate() {
        for (j, b) in cones.iter().enumerate() {
            for m in enumerate_weighted_cone_cells(w, d, &one, a, b, bound)? {
                cells.push(((i, j, m), i, j));
            }
        }
    }
    let ids: Vec<(usize, usize, Vec<NatTrans>)> =
        cones.iter().enumerate().map(|(i, c)| (i, i, c.iter().map(NatTrans::identity).collect())).collect();
    let built = build_category(
        (0..cones.len()).collect::<Vec<_>>(),
        cells,
        |x| ids[x].clone(),
        |g, f| (f.0, g.1, g.2.iter().zip(&f.2).map(|(a, b)| a.vcompose(b).expect("composable")).collect()),
        |i| i.to_string(),
        |m| format!("{}→{}", m.0, m.1),
    )?;
    let tight: Vec<bool> = cones
        .iter()
        .map(|legs| is_tight_cone(w, d, &AmbientCone { apex: one.clone(), legs: legs.clone() }))
        .collect();
    Ok(FObject::from_mask(built.cat.clone(), &tight))
}
