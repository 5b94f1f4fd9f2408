pub mod ore;
pub mod telescoper;

pub use ore::OreOp;
pub use telescoper::{
    ct_one_form, has_telescoper_below, kt_dependency, min_telescoper_bivariate, min_telescoper_bounded, telescoper_order,
    verify_telescoper, Telescoped, DEFAULT_MAX_ORDER,
};
