//! Integration of rational functions and closed rational forms.

pub mod oneform;
pub mod pform;
pub mod univar;

pub use oneform::{hermite_one_form, integrate_closed_1form, is_exact_rational, OneFormReduction};
pub use pform::{expand_primitive_derivative, integrate_closed_pform, PrimitiveForm};
pub use univar::{hermite_rat, integrate_univariate, log_part, LogTerm, Primitive};
