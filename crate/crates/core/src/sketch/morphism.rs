//! Sketch morphisms: cone preservation, cone reflection, and the tight part.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fcat::{FFunctor, FiniteFCategory, OneCell, TwoCell};
use crate::fincat::FiniteFunctor;

use super::{Sketch, SketchCone};

/// The identity sketch morphism on a carrier.
pub fn identity_morphism(c: &Arc<FiniteFCategory>) -> FFunctor<FiniteFCategory> {
    FFunctor::build_unchecked(c, |x| x, |f| *f, |a| *a)
}

/// The image of a cone under `i : S → T`.
pub fn image_cone(i: &FFunctor<FiniteFCategory>, t: &FiniteFCategory, cone: &SketchCone) -> Result<SketchCone> {
    let diagram = cone.diagram.then(i)?;
    let apex = *i.obj(cone.apex);
    let gamma = (0..cone.gamma.len())
        .map(|j| {
            let g = &cone.gamma[j];
            let objects = (0..g.source.num_objects()).map(|w| i.one(&cone.leg(j, w)).idx).collect();
            let morphisms = (0..g.source.num_morphisms()).map(|u| i.two(&cone.leg_cell(j, u)).idx).collect();
            let target = t.hom_cat(apex, *diagram.obj(j)).cat.clone();
            FiniteFunctor::new(g.source.clone(), target, objects, morphisms)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SketchCone { weight: cone.weight.clone(), diagram, apex, gamma })
}

/// `i` sends every cone of `s` to a cone of `t`, compared on the nose.
pub fn check_sketch_morphism(i: &FFunctor<FiniteFCategory>, s: &Sketch, t: &Sketch) -> bool {
    i.source == s.carrier
        && i.validate(&t.carrier).is_ok()
        && s.cones.iter().all(|c| image_cone(i, &t.carrier, c).map(|img| t.cones.contains(&img)).unwrap_or(false))
}

/// Every choice of one entry per slot, in lexicographic order.
fn choices<T: Clone>(slots: &[Vec<T>], bound: usize) -> Result<Vec<Vec<T>>> {
    let mut out = vec![Vec::new()];
    for slot in slots {
        let mut next = Vec::new();
        for prefix in &out {
            for x in slot {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
                if next.len() > bound {
                    return Err(Error::bound("cone lifts", bound));
                }
            }
        }
        out = next;
    }
    Ok(out)
}

/// All weighted cones of `s` sent by `i` onto the cone `c` of the target.
pub fn cone_lifts(
    i: &FFunctor<FiniteFCategory>,
    s: &Arc<FiniteFCategory>,
    c: &SketchCone,
    bound: usize,
) -> Result<Vec<SketchCone>> {
    let shape = c.shape().clone();
    let nj = shape.num_objects();
    let pre = |y: usize| (0..s.num_objects()).filter(|&x| *i.obj(x) == y).collect::<Vec<_>>();
    let mut object_slots = vec![pre(c.apex)];
    object_slots.extend((0..nj).map(|j| pre(*c.diagram.obj(j))));
    let one_cells = shape.all_one_cells();
    let two_cells = shape.all_two_cells();
    let mut out = Vec::new();
    for objs in choices(&object_slots, bound)? {
        let (apex, dobj) = (objs[0], &objs[1..]);
        let one_slots: Vec<Vec<OneCell>> = one_cells
            .iter()
            .map(|t| s.one_cells(dobj[t.src], dobj[t.dst]).filter(|f| i.one(f) == c.diagram.one(t)).collect())
            .collect();
        for ones in choices(&one_slots, bound)? {
            let one_of = |t: &OneCell| ones[one_cells.iter().position(|u| u == t).expect("shape 1-cell")];
            let two_slots: Vec<Vec<TwoCell>> = two_cells
                .iter()
                .map(|a| {
                    let (f, g) = (one_of(&shape.cell_source(a)), one_of(&shape.cell_target(a)));
                    s.cells_between(&f, &g).into_iter().filter(|b| i.two(b) == c.diagram.two(a)).collect()
                })
                .collect();
            for twos in choices(&two_slots, bound)? {
                let diagram = FFunctor::build_unchecked(
                    &shape,
                    |j| dobj[j],
                    |t| one_of(t),
                    |a| twos[two_cells.iter().position(|b| b == a).expect("shape 2-cell")],
                );
                out.extend(gamma_lifts(i, s, c, apex, diagram, bound)?);
                if out.len() > bound {
                    return Err(Error::bound("cone lifts", bound));
                }
            }
        }
    }
    Ok(out)
}

fn gamma_lifts(
    i: &FFunctor<FiniteFCategory>,
    s: &Arc<FiniteFCategory>,
    c: &SketchCone,
    apex: usize,
    diagram: FFunctor<FiniteFCategory>,
    bound: usize,
) -> Result<Vec<SketchCone>> {
    let nj = c.gamma.len();
    let mut per_j: Vec<Vec<FiniteFunctor>> = Vec::with_capacity(nj);
    for j in 0..nj {
        let g = &c.gamma[j];
        let dj = *diagram.obj(j);
        let hom = s.hom_cat(apex, dj).cat.clone();
        let obj_slots: Vec<Vec<usize>> = (0..g.source.num_objects())
            .map(|w| s.one_cells(apex, dj).filter(|f| i.one(f).idx == g.obj(w)).map(|f| f.idx).collect())
            .collect();
        let mut lifts = Vec::new();
        for objs in choices(&obj_slots, bound)? {
            let mor_slots: Vec<Vec<usize>> = (0..g.source.num_morphisms())
                .map(|u| {
                    let (a, b) = (objs[g.source.src(u)], objs[g.source.dst(u)]);
                    hom.hom(a, b)
                        .iter()
                        .copied()
                        .filter(|&m| i.two(&TwoCell { src: apex, dst: dj, idx: m }).idx == g.mor(u))
                        .collect()
                })
                .collect();
            for mors in choices(&mor_slots, bound)? {
                let f = FiniteFunctor::new_unchecked(g.source.clone(), hom.clone(), objs.clone(), mors);
                if f.validate().is_ok() {
                    lifts.push(f);
                }
            }
        }
        per_j.push(lifts);
    }
    let mut out = Vec::new();
    for gamma in choices(&per_j, bound)? {
        let cone = SketchCone { weight: c.weight.clone(), diagram: diagram.clone(), apex, gamma };
        if cone.violation(s).is_none() {
            out.push(cone);
        }
    }
    Ok(out)
}

/// Every weighted cone of `s` whose image is a cone of `t` is a cone of `s`.
pub fn check_cone_reflecting(i: &FFunctor<FiniteFCategory>, s: &Sketch, t: &Sketch, bound: usize) -> Result<bool> {
    for c in &t.cones {
        for lift in cone_lifts(i, &s.carrier, c, bound)? {
            if !s.cones.contains(&lift) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The tight part of a sketch: tight 1-cells, all 2-cells between them, and
/// every cone of `t` that lies in it; returned with its inclusion into `t`.
pub fn tight_part_sketch(t: &Sketch, bound: usize) -> Result<(Sketch, FFunctor<FiniteFCategory>)> {
    let (sub, keep) = t.carrier.tight_part()?;
    let sub = Arc::new(sub);
    let n = sub.num_objects();
    let incl = FFunctor::build(
        &sub,
        &*t.carrier,
        |x| x,
        |f| OneCell { idx: keep[f.src * n + f.dst].0[f.idx], ..*f },
        |a| TwoCell { idx: keep[a.src * n + a.dst].1[a.idx], ..*a },
    )?;
    let mut cones = Vec::new();
    for c in &t.cones {
        cones.extend(cone_lifts(&incl, &sub, c, bound)?);
    }
    Ok((Sketch::new(sub, cones)?, incl))
}
