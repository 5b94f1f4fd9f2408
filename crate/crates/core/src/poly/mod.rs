//! Exact polynomial and rational function arithmetic over Q.

pub mod gcd;
pub mod monomial;
pub mod mpoly;
pub mod partial;
pub mod ratfunc;
pub mod sqf;
pub mod trace;
pub mod upoly;

pub type Q = num_rational::BigRational;

pub use gcd::{gcd, lcm, resultant};
pub use monomial::Monomial;
pub use mpoly::MPoly;
pub use partial::{partial_fractions, PartialFractions, PartialTerm};
pub use ratfunc::RatFunc;
pub use sqf::{squarefree_factorization, SqfFactorization};
pub use trace::trace_sum;
pub use upoly::UPoly;
