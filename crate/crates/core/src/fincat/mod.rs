//! Finite categories, functors and natural transformations.

mod category;
mod colimit;
mod construct;
mod enumerate;
mod functor;
mod json;

pub use category::{CategoryViolation, FiniteCategory, MorId, Morphism, ObjId};
pub use colimit::{glue_categories, Glued, Place};
pub use construct::{build_category, full_subcategory, power, product_projections, tuple_index, tuple_parts, Built};
pub use enumerate::{
    enumerate_functors, enumerate_nat_trans, find_isomorphism, first_functor, functor_category,
    functor_category_of, pullback_category, search_functors, FunctorCategory, FunctorSearch, Pullback,
    DEFAULT_BOUND,
};
pub use functor::{check_naturality, FiniteFunctor, NatTrans};
pub use json::{named_category, CategoryDoc, CategorySpec, ComposeDoc, FunctorDoc, MorphismDoc};
