//! Picard's problem for top-degree forms in the smooth projective case.
//!
//! Forms live on projective `m`-space with homogeneous coordinates
//! `xi_0..xi_m` (polynomials in `m + 1` variables) and are written
//! `P * Omega / Q^ell`, where
//! `Omega = sum_i (-1)^i xi_i dxi_0 ^ .. (omit i) .. ^ dxi_m`.

pub mod groebner;
pub mod homogenize;
pub mod reduce;

pub use groebner::{groebner_basis, normal_form, GBasis};
pub use homogenize::{homogenize_m_form, Homogenized};
pub use reduce::{gd_reduce, omega_form, verify_picard_solution, GDResult};

use crate::error::{Error, Result};
use crate::poly::MPoly;

/// `P * Omega / Q^ell` on projective `m`-space.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjForm {
    pub p: MPoly,
    pub q: MPoly,
    pub ell: u32,
    pub m: usize,
}

impl ProjForm {
    /// Checks homogeneity and `ell * deg Q = deg P + m + 1` (skipped for `P = 0`).
    pub fn new(p: MPoly, q: MPoly, ell: u32, m: usize) -> Result<Self> {
        if q.nvars() != m + 1 || p.nvars() != m + 1 {
            return Err(Error::PreconditionViolated(format!("expected polynomials in {} homogeneous variables", m + 1)));
        }
        if !p.is_homogeneous() || !q.is_homogeneous() || q.is_constant() {
            return Err(Error::NotHomogeneous);
        }
        if ell == 0 {
            return Err(Error::DegreeMismatch("pole order must be positive".into()));
        }
        if !p.is_zero() && ell * q.total_degree() != p.total_degree() + m as u32 + 1 {
            return Err(Error::DegreeMismatch(format!(
                "{} * deg Q = {} but deg P + m + 1 = {}",
                ell,
                ell * q.total_degree(),
                p.total_degree() + m as u32 + 1
            )));
        }
        Ok(ProjForm { p, q, ell, m })
    }
}

/// Gradient of `q`.
pub fn jacobian(q: &MPoly) -> Vec<MPoly> {
    (0..q.nvars()).map(|i| q.derivative(i)).collect()
}

/// Smoothness of the hypersurface `Q = 0`: the Jacobian ideal has a finite
/// quotient, i.e. its reduced basis holds a pure power of every variable.
pub fn is_smooth(q: &MPoly) -> Result<bool> {
    if !q.is_homogeneous() || q.is_constant() {
        return Err(Error::NotHomogeneous);
    }
    let g = groebner_basis(&jacobian(q));
    Ok(groebner::has_pure_powers(&g, q.nvars()))
}
