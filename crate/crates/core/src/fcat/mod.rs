//! The base F of full embeddings, finite F-categories, F-functors, loose
//! transformations and modifications.

mod ambient;
mod fobject;
mod two_cat;

pub use ambient::{AmbCell, FAmbient, LooseMap};
pub use fobject::{enumerate_fmap_cells, enumerate_fmaps, hom_ambient_f, F2Hom, FMap, FObject, FObjectDoc};
pub use two_cat::{Co, Enumerable, TwoCategory};
mod fcategory;
pub use fcategory::{
    paste_horizontal, paste_vertical, FCatBuilder, FCatKeys, FCategoryDoc, FiniteFCategory, HCompDoc, HomCat, OneCell,
    TwoCell,
};
mod functor;
pub use functor::{identity_ffunctor, FFunctor, Weakness};
mod transform;
pub use transform::{
    check_loose_natural, check_modification, classify_transformation, co_transformation, Level, LooseTransformation,
    Modification, NaturalityReport, Violation, ViolationKind, WeaknessPair,
};
mod enumerate;
pub use enumerate::{enumerate_loose_transformations, enumerate_modifications, TransformationOptions};
mod funcat;
pub use funcat::{materialize, FunCategory, Materialized};

#[cfg(test)]
mod tests;
