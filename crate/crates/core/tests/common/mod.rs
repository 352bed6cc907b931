//! Fixtures and seeded corruptions for the axiom checks.

#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use ensketch::fcat::{FiniteFCategory, HomCat, TwoCell};
use ensketch::fincat::{CategoryViolation, FiniteCategory, MorId};
use ensketch::fixtures::limits::dotted_fixtures;
use ensketch::fixtures::monads::pair_carrier;
use ensketch::fixtures::monoidal::{monoidal_fixtures, ProductFragment};
use ensketch::fixtures::orthogonal::two_object;
use ensketch::fixtures::sketches::{arrow_sketch, span_sketch};
use ensketch::fixtures::{idempotent_shape, two_cell_shape};
use ensketch::limits::loose_arrow_shape;

pub fn category_fixtures() -> Vec<(String, FiniteCategory)> {
    let arrow = FiniteCategory::walking_arrow();
    let mut out = vec![
        ("walking arrow".to_string(), arrow.clone()),
        ("chain 4".into(), FiniteCategory::chain(4)),
        ("parallel pair".into(), FiniteCategory::parallel_pair()),
        ("chaotic 3".into(), FiniteCategory::chaotic(3)),
        ("discrete 2".into(), FiniteCategory::discrete(2)),
        ("arrow squared".into(), FiniteCategory::product(&arrow, &arrow)),
        ("cospan".into(), FiniteCategory::preorder_named(&["a", "b", "c"], |x, y| x == y || y == 2)),
        ("Z/3".into(), FiniteCategory::monoid(&["0", "1", "2"], |a, b| (a + b) % 3).unwrap()),
    ];
    out.extend(monoidal_fixtures().into_iter().map(|m| (format!("monoidal {}", m.name), (*m.cat).clone())));
    out
}

pub fn fcategory_fixtures() -> Vec<(String, Arc<FiniteFCategory>)> {
    let idem = idempotent_shape();
    vec![
        ("two-cell shape".to_string(), two_cell_shape([true, false])),
        ("idempotent".into(), idem.clone()),
        ("idempotent co".into(), Arc::new(idem.co())),
        ("parallel pair carrier".into(), pair_carrier()),
        ("span carrier".into(), span_sketch().carrier),
        ("arrow carrier".into(), arrow_sketch().carrier),
        ("product fragment".into(), ProductFragment::with_arity(2).sketch.carrier),
        ("loose arrow".into(), loose_arrow_shape().cat),
        ("chaotic pair".into(), two_object(["x", "y"], FiniteCategory::chaotic(2))),
        ("cospan shape".into(), dotted_fixtures().pop().unwrap().shape.cat),
    ]
}

/// Category axioms evaluated directly on the raw composition table.
pub fn is_category(c: &FiniteCategory) -> bool {
    let (m, ms, ids, t) = (c.num_morphisms(), c.morphisms(), c.identities(), c.raw_table());
    if t.len() != m * m || ids.len() != c.num_objects() {
        return false;
    }
    let at = |g: usize, f: usize| t[g * m + f];
    for (x, &i) in ids.iter().enumerate() {
        if i >= m || ms[i].src != x || ms[i].dst != x {
            return false;
        }
    }
    for g in 0..m {
        for f in 0..m {
            match at(g, f) {
                None if ms[f].dst == ms[g].src => return false,
                Some(_) if ms[f].dst != ms[g].src => return false,
                Some(h) if h >= m || ms[h].src != ms[f].src || ms[h].dst != ms[g].dst => return false,
                _ => {}
            }
        }
    }
    for f in 0..m {
        if at(ids[ms[f].dst], f) != Some(f) || at(f, ids[ms[f].src]) != Some(f) {
            return false;
        }
        for g in 0..m {
            for h in 0..m {
                if let (Some(gf), Some(hg)) = (at(g, f), at(h, g)) {
                    if at(h, gf) != at(hg, f) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether the reported violation actually occurs where it says.
pub fn recheck(c: &FiniteCategory, v: &CategoryViolation) -> bool {
    use CategoryViolation::*;
    let (m, ms, t) = (c.num_morphisms(), c.morphisms(), c.raw_table());
    let id = |s: &str| c.find_morphism(s);
    let at = |g: MorId, f: MorId| t[g * m + f];
    let composable = |g: MorId, f: MorId| ms[f].dst == ms[g].src;
    match v {
        DanglingMorphism { morphism } => id(morphism).is_some_and(|f| ms[f].src >= c.num_objects() || ms[f].dst >= c.num_objects()),
        MissingIdentity { .. } => c.identities().len() < c.num_objects(),
        IdentityWrongType { object, .. } => c.find_object(object).is_some_and(|x| {
            let i = c.identities()[x];
            i >= m || ms[i].src != x || ms[i].dst != x
        }),
        MissingComposite { g, f } => matches!((id(g), id(f)), (Some(g), Some(f)) if composable(g, f) && at(g, f).is_none()),
        SpuriousComposite { g, f } => matches!((id(g), id(f)), (Some(g), Some(f)) if !composable(g, f) && at(g, f).is_some()),
        CompositeWrongType { g, f, .. } => matches!((id(g), id(f)), (Some(g), Some(f))
            if at(g, f).is_some_and(|h| h >= m || ms[h].src != ms[f].src || ms[h].dst != ms[g].dst)),
        LeftIdentity { f } => id(f).is_some_and(|f| at(c.identities()[ms[f].dst], f) != Some(f)),
        RightIdentity { f } => id(f).is_some_and(|f| at(f, c.identities()[ms[f].src]) != Some(f)),
        Associativity { h, g, f } => match (id(h), id(g), id(f)) {
            (Some(h), Some(g), Some(f)) => match (at(g, f), at(h, g)) {
                (Some(gf), Some(hg)) => at(h, gf) != at(hg, f),
                _ => false,
            },
            _ => false,
        },
        TableSize { .. } => t.len() != m * m,
    }
}

fn rebuild(c: &FiniteCategory, identities: Vec<MorId>, table: Vec<Option<MorId>>) -> FiniteCategory {
    FiniteCategory::from_raw_parts(c.objects().to_vec(), c.morphisms().to_vec(), identities, table)
}

/// A corrupted copy of `c` that is not a category, with a description.
/// Kinds: moved identity, rewritten composite, deleted composite, spurious
/// composite, broken unit composite.
pub fn corrupt_category<R: Rng>(rng: &mut R, c: &FiniteCategory) -> (String, FiniteCategory) {
    let m = c.num_morphisms();
    let ms = c.morphisms();
    let pairs: Vec<(MorId, MorId)> = (0..m).flat_map(|g| (0..m).map(move |f| (g, f))).collect();
    let (defined, undefined): (Vec<_>, Vec<_>) = pairs.iter().partition(|&&(g, f)| c.raw_table()[g * m + f].is_some());
    loop {
        let mut ids = c.identities().to_vec();
        let mut table = c.raw_table().to_vec();
        let desc = match rng.gen_range(0..5) {
            0 => {
                let x = rng.gen_range(0..c.num_objects());
                let f = rng.gen_range(0..m);
                if f == ids[x] {
                    continue;
                }
                ids[x] = f;
                format!("identity of {} moved to {}", c.object_name(x), ms[f].name)
            }
            1 => {
                let &(g, f) = defined.choose(rng).expect("non-empty table");
                let h = rng.gen_range(0..m);
                if Some(h) == table[g * m + f] {
                    continue;
                }
                table[g * m + f] = Some(h);
                format!("{}∘{} rewritten to {}", ms[g].name, ms[f].name, ms[h].name)
            }
            2 => {
                let &(g, f) = defined.choose(rng).expect("non-empty table");
                table[g * m + f] = None;
                format!("{}∘{} deleted", ms[g].name, ms[f].name)
            }
            3 => {
                let Some(&(g, f)) = undefined.choose(rng) else { continue };
                table[g * m + f] = Some(rng.gen_range(0..m));
                format!("{}∘{} defined", ms[g].name, ms[f].name)
            }
            _ => {
                let f = rng.gen_range(0..m);
                let i = ids[ms[f].src];
                let h = rng.gen_range(0..m);
                if h == f {
                    continue;
                }
                table[f * m + i] = Some(h);
                format!("{}∘id rewritten to {}", ms[f].name, ms[h].name)
            }
        };
        let bad = rebuild(c, ids, table);
        if !is_category(&bad) {
            return (desc, bad);
        }
    }
}

/// Every name a witness may mention.
pub fn vocabulary(c: &FiniteFCategory) -> Vec<String> {
    let mut out: Vec<String> = c.objects().to_vec();
    out.extend(c.all_one_cells().iter().map(|f| c.one_cell_name(f)));
    out.extend(c.all_two_cells().iter().map(|a| c.cell_name(a)));
    out
}

/// Rebuilds `c` with one horizontal composite replaced, or one tight flag
/// cleared. Kinds: unit composite rewritten, composite moved to another
/// boundary, unit made loose, tight composite made loose. `None` when the
/// chosen kind has nothing to act on.
pub fn corrupt_fcategory<R: Rng>(rng: &mut R, c: &FiniteFCategory) -> Option<(String, ensketch::Result<FiniteFCategory>)> {
    let n = c.num_objects();
    let mut homs: Vec<HomCat> = (0..n * n).map(|i| c.hom_cat(i / n, i % n).clone()).collect();
    let units: Vec<usize> = (0..n).map(|x| c.unit(x).idx).collect();
    let orig = |x: usize, y: usize, z: usize, b: MorId, a: MorId| {
        c.hcell(&TwoCell { src: y, dst: z, idx: b }, &TwoCell { src: x, dst: y, idx: a }).idx
    };
    let objects = c.objects().to_vec();
    let mut target: Option<((usize, usize, usize, MorId, MorId), MorId)> = None;
    let desc = match rng.gen_range(0..4) {
        0 => {
            let (x, z) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let h = &c.hom_cat(x, z).cat;
            if h.num_morphisms() < 2 {
                return None;
            }
            let a = rng.gen_range(0..h.num_morphisms());
            let b = c.hom_cat(z, z).cat.identity(units[z]);
            let new = (a + rng.gen_range(1..h.num_morphisms())) % h.num_morphisms();
            target = Some(((x, z, z, b, a), new));
            format!("unit * {} rewritten to {}", h.morphism(a).name, h.morphism(new).name)
        }
        1 => {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            let (hxy, hyz, hxz) = (&c.hom_cat(x, y).cat, &c.hom_cat(y, z).cat, &c.hom_cat(x, z).cat);
            if hxy.num_morphisms() == 0 || hyz.num_morphisms() == 0 {
                return None;
            }
            let (a, b) = (rng.gen_range(0..hxy.num_morphisms()), rng.gen_range(0..hyz.num_morphisms()));
            if hxy.is_identity(a) && hyz.is_identity(b) {
                return None;
            }
            let old = orig(x, y, z, b, a);
            let moved: Vec<MorId> = (0..hxz.num_morphisms())
                .filter(|&k| (hxz.src(k), hxz.dst(k)) != (hxz.src(old), hxz.dst(old)))
                .collect();
            let &new = moved.choose(rng)?;
            target = Some(((x, y, z, b, a), new));
            format!("{} * {} moved to {}", hyz.morphism(b).name, hxy.morphism(a).name, hxz.morphism(new).name)
        }
        2 => {
            let x = rng.gen_range(0..n);
            homs[x * n + x].tight[units[x]] = false;
            format!("unit of {} made loose", objects[x])
        }
        _ => {
            let mut triples = Vec::new();
            for f in c.all_one_cells().into_iter().filter(|f| c.is_tight_cell(f)) {
                for g in c.all_one_cells().into_iter().filter(|g| g.src == f.dst && c.is_tight_cell(g)) {
                    let h = c.comp1(&g, &f);
                    if h != f && h != g {
                        triples.push(h);
                    }
                }
            }
            let &h = triples.choose(rng)?;
            homs[h.src * n + h.dst].tight[h.idx] = false;
            format!("tight composite {} made loose", c.one_cell_name(&h))
        }
    };
    let built = FiniteFCategory::new(objects, homs, units, |x, y, z, b, a| match target {
        Some((key, new)) if key == (x, y, z, b, a) => new,
        _ => orig(x, y, z, b, a),
    });
    Some((desc, built))
}
