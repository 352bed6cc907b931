//! Weighted, marked-lax and dotted-lax limits, with brute-force
//! certification of their universal properties.

mod dotted;
mod oracle;
mod pointwise;
mod weighted;

pub use dotted::{
    dotted_lax_limit, marked_lax_limit, ConeKey, ConeMorphism, DottedFCategory, DottedLimit, MarkedTwoCategory,
};
pub use oracle::{
    certify_cone, oracle_apex, precompose_cell, precompose_cone, test_categories, test_fobjects, Certificate,
};
pub use pointwise::{certify_pointwise_limit, loose_arrow_shape, pointwise_model_limit, PointwiseLimit, PointwiseSummary};
pub use weighted::{
    check_weighted_limit_universal, enumerate_weighted_cone_cells, enumerate_weighted_cones, is_tight_cone,
    weighted_cone_violation, weighted_limit_end, weighted_oracle_apex, AmbientCone, WeightedLimit,
};

#[cfg(test)]
mod tests;
