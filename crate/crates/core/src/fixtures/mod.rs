//! Named fixtures shared by the tests, the acceptance suite and the CLI.

pub mod limits;
pub mod monads;
pub mod monoidal;
pub mod orthogonal;
pub mod sketches;

use std::sync::Arc;

use crate::fcat::{AmbCell, FAmbient, FFunctor, FObject, FiniteFCategory, HomCat, LooseMap, OneCell};
use crate::fincat::{FiniteCategory, FiniteFunctor, ObjId};

pub fn cat(c: FiniteCategory) -> Arc<FiniteCategory> {
    Arc::new(c)
}

/// The functor between preorders with the given object map.
///
/// Panics if the map is not monotone.
pub fn poset_map(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>, objects: &[ObjId]) -> FiniteFunctor {
    let morphisms = (0..a.num_morphisms())
        .map(|m| b.hom(objects[a.src(m)], objects[a.dst(m)]).first().copied().expect("monotone object map"))
        .collect();
    FiniteFunctor::new(a.clone(), b.clone(), objects.to_vec(), morphisms).expect("functor between preorders")
}

/// An F-functor into 𝔽 whose values are preorders, given by the object maps
/// of its 1-cells; 2-cells go to the unique comparison cells.
pub fn poset_functor(
    shape: &Arc<FiniteFCategory>,
    objects: &[FObject],
    one: impl Fn(&OneCell) -> Vec<ObjId>,
) -> FFunctor<FAmbient> {
    let map = |f: &OneCell| {
        let (a, b) = (&objects[f.src], &objects[f.dst]);
        let objs = if shape.is_unit(f) { (0..a.loose.num_objects()).collect() } else { one(f) };
        LooseMap::new(a.clone(), b.clone(), poset_map(&a.loose, &b.loose, &objs)).expect("typed map")
    };
    FFunctor::build(
        shape,
        &FAmbient,
        |x| objects[x].clone(),
        map,
        |c| {
            let (f, g) = (map(&shape.cell_source(c)), map(&shape.cell_target(c)));
            let t = &objects[c.dst].loose;
            let components = (0..f.src.loose.num_objects())
                .map(|x| t.hom(f.functor.obj(x), g.functor.obj(x)).first().copied().expect("comparison cell"))
                .collect();
            AmbCell { src: f, dst: g, components }
        },
    )
    .expect("valid F-functor")
}

/// Locally discrete F-category on a 1-category; `tight` lists the tight morphisms.
pub fn locally_discrete(c: FiniteCategory, tight: impl Fn(usize) -> bool) -> Arc<FiniteFCategory> {
    let mask: Vec<bool> = (0..c.num_morphisms()).map(|m| c.is_identity(m) || tight(m)).collect();
    Arc::new(FiniteFCategory::locally_discrete(&c, &mask).expect("locally discrete F-category"))
}

/// `0 ⇉ 1` with a single 2-cell `f ⇒ g`; `tight` flags `f` and `g`.
pub fn two_cell_shape(tight: [bool; 2]) -> Arc<FiniteFCategory> {
    let unit = || HomCat { cat: cat(FiniteCategory::terminal()), tight: vec![true] };
    let arrow = FiniteCategory::preorder_named(&["f", "g"], |a, b| a <= b);
    let homs = vec![unit(), HomCat { cat: cat(arrow), tight: tight.to_vec() }, HomCat::empty(), unit()];
    Arc::new(
        FiniteFCategory::new(vec!["0".into(), "1".into()], homs, vec![0, 0], |_, y, z, b, a| if y == z { a } else { b })
            .expect("two-cell shape"),
    )
}

/// One object with an idempotent loose endo-1-cell `e` and a 2-cell `1 ⇒ e`.
pub fn idempotent_shape() -> Arc<FiniteFCategory> {
    let hom = FiniteCategory::preorder_named(&["1", "e"], |a, b| a <= b);
    Arc::new(
        FiniteFCategory::new(
            vec!["*".into()],
            vec![HomCat { cat: cat(hom), tight: vec![true, false] }],
            vec![0],
            |_, _, _, b, a| {
                let lvl = |m: usize| [(0, 0), (0, 1), (1, 1)][m];
                match (lvl(b).0.max(lvl(a).0), lvl(b).1.max(lvl(a).1)) {
                    (0, 0) => 0,
                    (0, 1) => 1,
                    _ => 2,
                }
            },
        )
        .expect("idempotent shape"),
    )
}

/// Preorder test objects of 𝔽 used as diagram values.
pub fn arrow_obj(mask: [bool; 2]) -> FObject {
    FObject::from_mask(cat(FiniteCategory::walking_arrow()), &mask)
}

pub fn chain_obj(n: usize) -> FObject {
    FObject::chordate(cat(FiniteCategory::chain(n)))
}
