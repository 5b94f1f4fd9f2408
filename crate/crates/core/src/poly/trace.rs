//! Sums over the roots of a squarefree polynomial, computed in the quotient
//! ring without extracting roots.

use super::mpoly::MPoly;
use super::ratfunc::RatFunc;
use super::gcd::pseudo_divide;
use super::upoly::UPoly;
use super::Q;
use crate::error::{Error, Result};

/// `sum over R(c) = 0 of h(c, ...)`, where `R` is a polynomial in `root`
/// squarefree in that variable and `h` is a rational function whose
/// denominator is invertible modulo `R`.
pub fn trace_sum(respoly: &MPoly, root: usize, h: &RatFunc) -> Result<RatFunc> {
    let n = h.nvars();
    let d = respoly.degree(root);
    if d == 0 {
        return Err(Error::PreconditionViolated("root polynomial has degree zero".into()));
    }
    if h.is_zero() {
        return Ok(RatFunc::zero(n));
    }
    if d == 1 {
        let value = linear_root(respoly, root);
        let den_at = RatFunc::from_poly(h.den().clone()).substitute(root, &value);
        if den_at.is_zero() {
            return Err(Error::NonInvertibleDenominator);
        }
        return Ok(h.substitute(root, &value));
    }
    let r = UPoly::from_mpoly(respoly, root).monic();
    let reduced = reduce_mod(h, respoly, root)?;
    let sums = power_sums(&r);
    let mut acc = RatFunc::zero(n);
    for (j, c) in reduced.coeffs().iter().enumerate() {
        acc = &acc + &(c * &sums[j]);
    }
    Ok(acc)
}

/// The unique root of a polynomial of degree one in `root`.
pub fn linear_root(respoly: &MPoly, root: usize) -> RatFunc {
    let cs = respoly.coeffs_in(root);
    debug_assert_eq!(cs.len(), 2);
    let a0 = RatFunc::from_poly(cs[0].clone());
    let a1 = RatFunc::from_poly(cs[1].clone());
    -&a0.checked_div(&a1).expect("degree one")
}

/// `(r, e)` with `lc(q)^e * p = r (mod q)` and `deg r < deg q` in `z`.
pub fn pseudo_reduce(p: &MPoly, q: &MPoly, z: usize) -> (MPoly, u32) {
    let (dp, dq) = (p.degree(z), q.degree(z));
    if p.is_zero() || dp < dq {
        return (p.clone(), 0);
    }
    (pseudo_divide(p, q, z).1, dp - dq + 1)
}

/// Solves `m x = b` over the fraction field of the polynomial ring by
/// fraction-free (Bareiss) elimination: returns `(y, det)` with `x = y / det`.
fn bareiss_solve(mut m: Vec<Vec<MPoly>>, mut b: Vec<MPoly>) -> Option<(Vec<MPoly>, MPoly)> {
    let n = m.len();
    let nv = b[0].nvars();
    let mut prev = MPoly::one(nv);
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        b.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss step is exact");
            }
            let t = &(&m[k][k] * &b[i]) - &(&m[i][k] * &b[k]);
            b[i] = t.div_exact(&prev).expect("Bareiss step is exact");
            m[i][k] = MPoly::zero(nv);
        }
        prev = m[k][k].clone();
    }
    let det = prev;
    let mut y = vec![MPoly::zero(nv); n];
    for i in (0..n).rev() {
        let mut t = &det * &b[i];
        for j in i + 1..n {
            t = &t - &(&m[i][j] * &y[j]);
        }
        y[i] = t.div_exact(&m[i][i]).expect("Cramer numerators are polynomials");
    }
    Some((y, det))
}

/// Fraction-free inverse of `a` modulo `q` in `z`: `(u, d)` with
/// `a * u = d (mod q)`, `deg u < deg q` and `d` a nonzero polynomial free of
/// `z`. `None` when `a` and `q` have a common root.
pub fn inverse_mod_ff(a: &MPoly, q: &MPoly, z: usize) -> Option<(MPoly, MPoly)> {
    let nv = q.nvars();
    let (a1, e) = pseudo_reduce(a, q, z);
    if a1.is_zero() {
        return None;
    }
    let scale = q.lc_in(z).pow(e);
    let (da, dq) = (a1.degree(z) as usize, q.degree(z) as usize);
    if da == 0 {
        return Some((scale, a1));
    }
    // Sylvester system s * a1 + t * q = 1 with deg s < dq, deg t < da
    let ac = a1.coeffs_in(z);
    let qc = q.coeffs_in(z);
    let size = da + dq;
    let at = |c: &[MPoly], k: isize| if k >= 0 && (k as usize) < c.len() { c[k as usize].clone() } else { MPoly::zero(nv) };
    let m: Vec<Vec<MPoly>> = (0..size)
        .map(|k| {
            let mut row: Vec<MPoly> = (0..dq).map(|j| at(&ac, k as isize - j as isize)).collect();
            row.extend((0..da).map(|j| at(&qc, k as isize - j as isize)));
            row
        })
        .collect();
    let mut rhs = vec![MPoly::zero(nv); size];
    rhs[0] = MPoly::one(nv);
    let (y, det) = bareiss_solve(m, rhs)?;
    let u = MPoly::from_coeffs_in(z, &y[..dq], nv);
    Some((&u * &scale, det))
}

/// Image of `h` in `F[root]/(respoly)`, as a polynomial of degree
/// `< deg respoly` in `root` with coefficients in `F`.
pub fn reduce_mod(h: &RatFunc, respoly: &MPoly, root: usize) -> Result<UPoly> {
    let n = h.nvars();
    let (u, d) = if h.den().uses_var(root) {
        inverse_mod_ff(h.den(), respoly, root).ok_or(Error::NonInvertibleDenominator)?
    } else {
        (MPoly::one(n), h.den().clone())
    };
    let (r, e) = pseudo_reduce(&(h.num() * &u), respoly, root);
    let den = &d * &respoly.lc_in(root).pow(e);
    let coeffs = r.coeffs_in(root).into_iter().map(|c| RatFunc::new(c, den.clone())).collect::<Result<Vec<_>>>()?;
    Ok(UPoly::from_coeffs(root, n, coeffs))
}

/// Power sums `p_0 .. p_{d-1}` of the roots of the monic polynomial `r`
/// (Newton identities).
pub fn power_sums(r: &UPoly) -> Vec<RatFunc> {
    let n = r.nvars();
    let d = r.degree().unwrap_or(0);
    let a = |k: usize| r.coeff(k);
    let mut p = vec![RatFunc::from_int(d as i64, n)];
    for k in 1..d {
        let mut s = a(d - k).scale(&Q::from_integer((k as i64).into()));
        for i in 1..k {
            s = &s + &(&a(d - i) * &p[k - i]);
        }
        p.push(-&s);
    }
    p
}

/// Derivative of the roots of `respoly` with respect to `v`, as an element of
/// the quotient ring: `-(d_v R)(c) / (d_c R)(c)` reduced modulo `R`.
pub fn root_derivative(respoly: &MPoly, root: usize, v: usize) -> Result<RatFunc> {
    let n = respoly.nvars();
    let dv = respoly.derivative(v);
    if dv.is_zero() {
        return Ok(RatFunc::zero(n));
    }
    let dc = respoly.derivative(root);
    let h = -&RatFunc::new(dv, dc)?;
    if respoly.degree(root) == 1 {
        return Ok(h.substitute(root, &linear_root(respoly, root)));
    }
    Ok(reduce_mod(&h, respoly, root)?.to_ratfunc())
}
