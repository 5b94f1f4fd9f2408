//! Affine `f dx_1 .. dx_m` to `P * Omega / Q^ell` via `x_i = xi_i / xi_0`,
//! using `dx_1 .. dx_m = Omega / xi_0^(m+1)`.

use std::collections::BTreeMap;

use crate::gd::{is_smooth, ProjForm};
use crate::poly::{squarefree_factorization, MPoly, Monomial, RatFunc};

/// `numerator * Omega / denominator`, with `denominator = Q^ell` when the
/// pole order is uniform. `form` is set only when the smooth theory
/// applies; otherwise `violations` says why not.
#[derive(Clone, Debug, PartialEq)]
pub struct Homogenized {
    pub numerator: MPoly,
    pub denominator: MPoly,
    pub q: MPoly,
    pub ell: u32,
    pub form: Option<ProjForm>,
    pub violations: Vec<String>,
}

/// `p(xi_1/xi_0, .., xi_m/xi_0) * xi_0^deg` as a polynomial in `m + 1` variables.
fn homogenize(p: &MPoly, m: usize, deg: u32) -> MPoly {
    let mut out = MPoly::zero(m + 1);
    for (mono, c) in p.terms() {
        let mut e = vec![0u32; m + 1];
        e[0] = deg - mono.degree();
        e[1..].copy_from_slice(&mono.exponents()[..m]);
        out = &out + &MPoly::term(Monomial::from_exponents(e), c.clone());
    }
    out
}

/// Squarefree, pairwise coprime pieces with multiplicities (recursing into contents).
fn squarefree_pieces(p: &MPoly, out: &mut BTreeMap<u32, MPoly>) {
    let Some(&v) = p.vars_used().first() else { return };
    let sqf = squarefree_factorization(p, v).expect("nonzero polynomial");
    for (f, k) in sqf.factors {
        let slot = out.entry(k).or_insert_with(|| MPoly::one(p.nvars()));
        *slot = &*slot * &f;
    }
    squarefree_pieces(&sqf.content, out);
}

/// Homogenizes `f dx_1 .. dx_m` where `f` lives in a ring whose first `m`
/// variables are the form variables.
pub fn homogenize_m_form(f: &RatFunc, m: usize) -> Homogenized {
    let n = m + 1;
    if f.is_zero() {
        return Homogenized {
            numerator: MPoly::zero(n),
            denominator: MPoly::one(n),
            q: MPoly::one(n),
            ell: 0,
            form: None,
            violations: vec!["zero form".into()],
        };
    }
    let (a, b) = (f.num().total_degree(), f.den().total_degree());
    let mut num = homogenize(f.num(), m, a);
    let mut den = homogenize(f.den(), m, b);
    let e = b as i64 - a as i64 - m as i64 - 1;
    let xi0 = MPoly::var(0, n);
    if e >= 0 {
        num = &num * &xi0.pow(e as u32);
    } else {
        den = &den * &xi0.pow((-e) as u32);
    }
    let s = den.normalization_factor();
    let (num, den) = (num.scale(&s), den.scale(&s));

    let mut pieces = BTreeMap::new();
    squarefree_pieces(&den, &mut pieces);
    let ell = *pieces.keys().max().expect("nonconstant denominator");
    let q = pieces.values().fold(MPoly::one(n), |acc, f| &acc * f).canonical();
    // den divides Q^ell up to the missing multiplicities
    let p = (&num * &q.pow(ell)).div_exact(&den).expect("denominator divides Q^ell");

    let mut violations = Vec::new();
    if pieces.len() > 1 {
        violations.push("pole order differs along components of the polar locus".to_string());
    }
    if q.div_exact(&xi0).is_some() && q.total_degree() > 1 {
        violations.push("polar locus contains the hyperplane at infinity xi_0 = 0 together with other components".to_string());
    }
    if !is_smooth(&q).unwrap_or(false) {
        violations.push("polar locus is not a smooth hypersurface".to_string());
    }
    let form = if violations.is_empty() { ProjForm::new(p, q.clone(), ell, m).ok() } else { None };
    Homogenized { numerator: num, denominator: den, q, ell, form, violations }
}
