//! Seeded random objects and maps of F for property checks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::fcat::{enumerate_fmaps, FMap, FObject};
use crate::fincat::{FiniteCategory, FiniteFunctor};

const BOUND: usize = 10_000;

fn random_preorder<R: Rng>(rng: &mut R, n: usize) -> FiniteCategory {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if i < j && rng.gen_bool(0.4) {
                leq[i][j] = true;
                if rng.gen_bool(0.15) {
                    leq[j][i] = true;
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    FiniteCategory::preorder_named(&refs, |a, b| leq[a][b])
}

/// A random category with at most three objects: usually a preorder,
/// sometimes a parallel pair or the two-element group.
pub fn random_category<R: Rng>(rng: &mut R) -> FiniteCategory {
    match rng.gen_range(0..10) {
        0 => FiniteCategory::parallel_pair(),
        1 => FiniteCategory::monoid(&["1", "s"], |a, b| a ^ b).expect("Z/2"),
        _ => {
            let n = rng.gen_range(0..=3);
            random_preorder(rng, n)
        }
    }
}

/// A random object of F; chordate when `chordate` is set.
pub fn random_fobject<R: Rng>(rng: &mut R, chordate: bool) -> FObject {
    let c = Arc::new(random_category(rng));
    if chordate {
        return FObject::chordate(c);
    }
    let mask: Vec<bool> = (0..c.num_objects()).map(|_| rng.gen_bool(0.6)).collect();
    FObject::from_mask(c, &mask)
}

fn pick<R: Rng>(rng: &mut R, maps: Vec<FMap>) -> Option<FMap> {
    maps.choose(rng).cloned()
}

/// A random map of F. About a third are automorphisms, a sixth are
/// identities on loose parts that enlarge the tight part, and the rest are
/// arbitrary squares between random objects.
pub fn random_fmap<R: Rng>(rng: &mut R, chordate: bool) -> Result<FMap> {
    loop {
        let x = random_fobject(rng, chordate);
        let roll = rng.gen_range(0..6);
        if roll < 2 {
            let autos: Vec<FMap> = enumerate_fmaps(&x, &x, BOUND)?.into_iter().filter(|f| f.is_isomorphism()).collect();
            if let Some(f) = pick(rng, autos) {
                return Ok(f);
            }
        } else if roll == 2 && !chordate {
            let mut mask = x.tight_mask();
            for m in mask.iter_mut() {
                *m = *m || rng.gen_bool(0.5);
            }
            let y = FObject::from_mask(x.loose.clone(), &mask);
            if let Some(f) = FMap::from_loose(&x, &y, FiniteFunctor::identity(&x.loose)) {
                return Ok(f);
            }
        } else {
            let y = random_fobject(rng, chordate);
            if let Some(f) = pick(rng, enumerate_fmaps(&x, &y, BOUND)?) {
                return Ok(f);
            }
        }
    }
}

/// A random object `K` and map `m`.
pub fn random_pair<R: Rng>(rng: &mut R, chordate: bool) -> Result<(FObject, FMap)> {
    let k = random_fobject(rng, chordate);
    Ok((k, random_fmap(rng, chordate)?))
}
