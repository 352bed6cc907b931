//! Generalized adjunction fixtures between small chordate F-categories.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{cat, locally_discrete};
use crate::fcat::{FFunctor, FiniteFCategory, HomCat, OneCell};
use crate::fincat::FiniteCategory;
use crate::orthogonal::GeneralizedAdjunction;

/// Objects `x`, `y` with the given hom-category `x → y`, no 1-cells back,
/// and every 1-cell tight.
pub fn two_object(names: [&str; 2], forward: FiniteCategory) -> Arc<FiniteFCategory> {
    let unit = || HomCat { cat: cat(FiniteCategory::terminal()), tight: vec![true] };
    let n = forward.num_objects();
    let homs = vec![unit(), HomCat { cat: cat(forward), tight: vec![true; n] }, HomCat::empty(), unit()];
    let objects = names.iter().map(|s| s.to_string()).collect();
    Arc::new(
        FiniteFCategory::new(objects, homs, vec![0, 0], |_, y, z, b, a| if y == z { a } else { b })
            .expect("two-object F-category"),
    )
}

fn point() -> Arc<FiniteFCategory> {
    Arc::new(FiniteFCategory::chordate(&FiniteCategory::terminal()).expect("point"))
}

/// The functor out of a one-object F-category picking `y`.
fn pick(a: &Arc<FiniteFCategory>, b: &Arc<FiniteFCategory>, y: usize) -> FFunctor<FiniteFCategory> {
    FFunctor::build(a, b.as_ref(), |_| y, |_| b.unit(y), |_| b.id_cell(&b.unit(y))).expect("constant functor")
}

fn units_to(a: &FiniteFCategory, b: &FiniteFCategory, x: usize) -> BTreeMap<OneCell, OneCell> {
    b.all_one_cells().into_iter().filter(|f| b.is_unit(f)).map(|f| (f, a.unit(x))).collect()
}

/// The inclusion of `{1}` into `0 → 1`, with the constant reflector and
/// unit the arrow. An honest adjunction.
pub fn reflective_arrow() -> GeneralizedAdjunction {
    let b = locally_discrete(FiniteCategory::walking_arrow(), |_| true);
    let a = point();
    let arrow = b.one_cells(0, 1).next().expect("arrow");
    let u = pick(&a, &b, 1);
    let mut left_one = units_to(&a, &b, 0);
    left_one.insert(arrow, a.unit(0));
    GeneralizedAdjunction { eta: vec![arrow, b.unit(1)], left: vec![0, 0], left_one, u, a, b }
}

/// `U : (a0 ⇉ a1) → (b0 → b1)` with `a0 → a1` a chaotic pair `p ≅ q` and
/// `F r = p`. The composite at `(b0, a1)` is an equivalence, not an iso.
pub fn equivalence_not_iso() -> GeneralizedAdjunction {
    let a = two_object(["a0", "a1"], FiniteCategory::preorder_named(&["p", "q"], |_, _| true));
    let b = two_object(["b0", "b1"], FiniteCategory::discrete_named(&["r"]));
    let r = b.find_one_cell(0, 1, "r").expect("r");
    let p = a.find_one_cell(0, 1, "p").expect("p");
    let u = FFunctor::build(
        &a,
        b.as_ref(),
        |x| x,
        |f| if f.src == f.dst { b.unit(f.src) } else { r },
        |c| if c.src == c.dst { b.id_cell(&b.unit(c.src)) } else { b.id_cell(&r) },
    )
    .expect("U");
    let mut left_one = BTreeMap::new();
    for x in 0..2 {
        left_one.insert(b.unit(x), a.unit(x));
    }
    left_one.insert(r, p);
    GeneralizedAdjunction { eta: vec![b.unit(0), b.unit(1)], left: vec![0, 1], left_one, u, a, b }
}

/// `U : 1 → (c ⇉ u)` picking `u` with `c → u` a chaotic pair `p ≅ q`,
/// `η_c = p`. The composites are equivalences; naturality fails at `q`.
pub fn unnatural_unit() -> GeneralizedAdjunction {
    let b = two_object(["c", "u"], FiniteCategory::preorder_named(&["p", "q"], |_, _| true));
    let a = point();
    let u = pick(&a, &b, 1);
    let left_one = b.all_one_cells().into_iter().map(|f| (f, a.unit(0))).collect();
    let p = b.find_one_cell(0, 1, "p").expect("p");
    GeneralizedAdjunction { eta: vec![p, b.unit(1)], left: vec![0, 0], left_one, u, a, b }
}

pub fn generalized_adjunctions() -> Vec<(&'static str, GeneralizedAdjunction)> {
    vec![
        ("reflective-arrow", reflective_arrow()),
        ("equivalence-not-iso", equivalence_not_iso()),
        ("unnatural-unit", unnatural_unit()),
    ]
}
