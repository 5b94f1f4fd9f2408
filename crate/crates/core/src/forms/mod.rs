//! Exterior algebra over the rational function field.

pub mod diffform;

pub use diffform::{DiffForm, Index};
