//! Reduction-based minimal telescopers.
//!
//! Every derivative `D^i f` is Hermite-reduced to `dg_i + h_i` with `h_i`
//! proper and squarefree. A combination `sum a_i(t) h_i` is exact only when
//! it vanishes, so the minimal telescoper is the first `k(t)`-linear
//! dependency among the residuals.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::forms::DiffForm;
use crate::integrate::hermite_one_form;
use crate::integrate::oneform::check_closed;
use crate::integrate::univar::hermite_ratfunc;
use crate::poly::{lcm, MPoly, Monomial, RatFunc};
use crate::telescoping::ore::OreOp;

/// Orders beyond this give up with `TelescoperBound`.
pub const DEFAULT_MAX_ORDER: usize = 12;

/// `L(input) = d(certificate)` (or `D_x(certificate)` in the bivariate case).
#[derive(Clone, Debug, PartialEq)]
pub struct Telescoped {
    pub operator: OreOp,
    pub certificate: RatFunc,
}

/// Splits each entry's numerator over a common denominator into
/// coefficients of the monomials free of `t`; the coefficients are
/// polynomials in `t` alone.
fn coordinates(cols: &[Vec<RatFunc>], tvar: usize) -> Vec<Vec<RatFunc>> {
    let n = cols[0][0].nvars();
    let mut den = MPoly::one(n);
    for col in cols {
        for e in col {
            den = lcm(&den, e.den());
        }
    }
    let dr = RatFunc::from_poly(den);
    let mut rows: BTreeMap<(usize, Monomial), Vec<MPoly>> = BTreeMap::new();
    for (j, col) in cols.iter().enumerate() {
        for (k, e) in col.iter().enumerate() {
            let num = (e * &dr).num().clone();
            for (mono, c) in num.terms() {
                let te = mono.exponent(tvar);
                let key = (k, mono.with_exponent(tvar, 0));
                let row = rows.entry(key).or_insert_with(|| vec![MPoly::zero(n); cols.len()]);
                row[j] = &row[j] + &MPoly::term(Monomial::one(n).with_exponent(tvar, te), c.clone());
            }
        }
    }
    rows.into_values().map(|r| r.into_iter().map(RatFunc::from_poly).collect()).collect()
}

/// Coefficients `a_0..a_{r-1}` in `k(t)` with `sum a_i col_i + col_r = 0`,
/// where `r = cols.len() - 1`, if any exist.
pub fn kt_dependency(cols: &[Vec<RatFunc>], tvar: usize) -> Option<Vec<RatFunc>> {
    let r = cols.len() - 1;
    let n = cols[0][0].nvars();
    // augmented rows [col_0 .. col_{r-1} | -col_r]
    let mut rows: Vec<Vec<RatFunc>> = coordinates(cols, tvar)
        .into_iter()
        .map(|mut row| {
            row[r] = -&row[r];
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..r {
        let Some(p) = (next..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(next, p);
        let inv = rows[next][c].inv().expect("nonzero pivot");
        let prow: Vec<RatFunc> = rows[next].iter().map(|e| e * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (e, pe) in row.iter_mut().zip(&prow) {
                if !pe.is_zero() {
                    *e = &*e - &(&f * pe);
                }
            }
        }
        rows[next] = prow;
        pivots.push(c);
        next += 1;
    }
    if rows[next..].iter().any(|row| !row[r].is_zero()) {
        return None;
    }
    let mut sol = vec![RatFunc::zero(n); r];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][r].clone();
    }
    Some(sol)
}

/// Minimal telescoper of `f` with respect to `x_s`:
/// `L(f) = D_{x_s}(certificate)`, with `L` primitive in `t`.
pub fn min_telescoper_bivariate(f: &RatFunc, s: usize, tvar: usize) -> Result<Telescoped> {
    min_telescoper_bounded(f, s, tvar, DEFAULT_MAX_ORDER)
}

pub fn min_telescoper_bounded(f: &RatFunc, s: usize, tvar: usize, max_order: usize) -> Result<Telescoped> {
    let n = f.nvars();
    let (g0, h0) = hermite_ratfunc(f, s)?;
    let mut gs = vec![g0];
    let mut hs = vec![vec![h0]];
    for rho in 0..=max_order {
        if rho > 0 {
            let (g, h) = hermite_ratfunc(&hs[rho - 1][0].derivative(tvar), s)?;
            gs.push(&gs[rho - 1].derivative(tvar) + &g);
            hs.push(vec![h]);
        }
        if let Some(a) = kt_dependency(&hs, tvar) {
            let mut coeffs = a;
            coeffs.push(RatFunc::one(n));
            let mut cert = gs[rho].clone();
            for (ai, gi) in coeffs.iter().zip(&gs).take(rho) {
                cert = &cert + &(ai * gi);
            }
            let op = OreOp::new(coeffs, tvar, n);
            let lambda = op.normalizing_factor(true);
            return Ok(Telescoped { operator: op.scale(&lambda), certificate: &cert * &lambda });
        }
    }
    Err(Error::TelescoperBound(max_order))
}

/// Hermite residuals of `D^i w` for `i = 0..=order`.
fn residual_forms(w: &DiffForm, tvar: usize, order: usize) -> Result<Vec<DiffForm>> {
    let mut out = vec![hermite_one_form(w)?.residual];
    for i in 1..=order {
        let next = out[i - 1].map_coeffs(|c| c.derivative(tvar));
        out.push(hermite_one_form(&next)?.residual);
    }
    Ok(out)
}

fn form_vector(w: &DiffForm) -> Vec<RatFunc> {
    w.one_form_coeffs()
}

/// Least `rho <= max_order` for which some `L` of order `rho` makes `L(w)`
/// exact, found directly from the residual forms.
pub fn telescoper_order(w: &DiffForm, tvar: usize, max_order: usize) -> Result<Option<usize>> {
    check_closed(w)?;
    let res = residual_forms(w, tvar, max_order)?;
    let cols: Vec<Vec<RatFunc>> = res.iter().map(form_vector).collect();
    for rho in 0..=max_order {
        if kt_dependency(&cols[..=rho], tvar).is_some() {
            return Ok(Some(rho));
        }
    }
    Ok(None)
}

/// Whether a telescoper of order below `r` exists.
pub fn has_telescoper_below(w: &DiffForm, tvar: usize, r: usize) -> Result<bool> {
    if r == 0 {
        return Ok(false);
    }
    Ok(telescoper_order(w, tvar, r - 1)?.is_some())
}

fn ct_stage(w: &DiffForm, s: usize, tvar: usize) -> Result<(OreOp, RatFunc)> {
    let n = w.nvars();
    let red = hermite_one_form(w)?;
    let f = red.residual.coeff(&[s]);
    let (ls, gs) = if f.is_zero() {
        (OreOp::one(tvar, n), RatFunc::zero(n))
    } else {
        let tel = min_telescoper_bivariate(&f, s, tvar)?;
        (tel.operator, tel.certificate)
    };
    let lg = ls.apply(&red.g);
    if s == 0 {
        return Ok((ls, &lg + &gs));
    }
    let wbar = &ls.apply_form(&red.residual) - &DiffForm::function(gs.clone(), w.nforms()).d();
    if !wbar.coeff(&[s]).is_zero() || !wbar.is_free_of(s) {
        return Err(Error::RationalityAssertionFailed(format!("telescoped form still depends on variable {}", s + 1)));
    }
    let (lbar, g) = ct_stage(&wbar, s - 1, tvar)?;
    let cert = &(&g + &lbar.apply(&gs)) + &lbar.apply(&lg);
    Ok((lbar.mul(&ls), cert))
}

/// Telescoper for a closed rational 1-form with parameter `t`, built one
/// variable at a time from the top. The operator is returned with
/// denominators and rational content cleared; the certificate is checked.
pub fn ct_one_form(w: &DiffForm, tvar: usize) -> Result<Telescoped> {
    if w.degree() != 1 {
        return Err(Error::PreconditionViolated(format!("expected a 1-form, got degree {}", w.degree())));
    }
    check_closed(w)?;
    let m = w.nforms();
    let (op, cert) = ct_stage(w, m - 1, tvar)?;
    let lambda = op.normalizing_factor(false);
    let out = Telescoped { operator: op.scale(&lambda), certificate: &cert * &lambda };
    if !verify_telescoper(w, &out) {
        return Err(Error::RationalityAssertionFailed("telescoper does not satisfy L(w) = d(g)".into()));
    }
    Ok(out)
}

/// `L(w) = d(certificate)`.
pub fn verify_telescoper(w: &DiffForm, t: &Telescoped) -> bool {
    t.operator.apply_form(w) == DiffForm::function(t.certificate.clone(), w.nforms()).d()
}

#[cfg(test)]
mod tests {
    use super::*;

    // x, y, z, t, _c
    const N: usize = 5;
    const T: usize = 3;

    fn v(i: usize) -> MPoly {
        MPoly::var(i, N)
    }

    fn c(k: i64) -> MPoly {
        MPoly::from_int(k, N)
    }

    fn rf(a: MPoly, b: MPoly) -> RatFunc {
        RatFunc::new(a, b).unwrap()
    }

    fn op(cs: Vec<MPoly>) -> OreOp {
        OreOp::new(cs.into_iter().map(RatFunc::from_poly).collect(), T, N)
    }

    #[test]
    fn bivariate_examples() {
        let (x, z, t) = (v(0), v(2), v(T));
        let tel = min_telescoper_bivariate(&rf(c(1), &x - &t), 0, T).unwrap();
        assert_eq!(tel.operator, OreOp::dt(T, N));
        assert_eq!(tel.certificate, rf(c(-1), &x - &t));

        let xt = &x.pow(2) - &t;
        let tel = min_telescoper_bivariate(&rf(c(1), xt.clone()), 0, T).unwrap();
        assert_eq!(tel.operator, op(vec![c(1), &t * &c(2)]));
        assert_eq!(tel.certificate, rf(-&x, xt));

        let tel = min_telescoper_bivariate(&rf(&t.pow(2) + &c(1), z), 2, T).unwrap();
        assert_eq!(tel.operator, op(vec![&t * &c(-2), &t.pow(2) + &c(1)]));
        assert!(tel.certificate.is_zero());
    }

    #[test]
    fn dependency_search() {
        let (x, t) = (v(0), v(T));
        let a = vec![rf(c(1), x.clone())];
        let b = vec![rf(t.clone(), x.clone())];
        assert_eq!(kt_dependency(&[a.clone(), b.clone()], T), Some(vec![RatFunc::from_poly(-&t)]));
        let b2 = vec![rf(c(1), &x + &c(1))];
        assert_eq!(kt_dependency(&[a.clone(), b2], T), None);
        assert_eq!(kt_dependency(&[vec![RatFunc::zero(N)]], T), Some(vec![]));
        assert_eq!(kt_dependency(&[a], T), None);
    }

    #[test]
    fn single_variable_form() {
        // x, t, _c
        let (n, t) = (3, 1);
        let (x, tv) = (MPoly::var(0, n), MPoly::var(t, n));
        let f = RatFunc::new(MPoly::one(n), &x - &tv).unwrap();
        let w = DiffForm::one_form(vec![f.clone()]);
        let tel = ct_one_form(&w, t).unwrap();
        assert_eq!(tel.operator, OreOp::dt(t, n));
        assert_eq!(tel.certificate, -&f);
    }

    #[test]
    fn exact_form_has_order_zero() {
        // x, y, t, _c
        let (n, t) = (4, 2);
        let xy1 = &(&MPoly::var(0, n) * &MPoly::var(1, n)) + &MPoly::one(n);
        let g = RatFunc::new(MPoly::var(t, n), xy1).unwrap();
        let w = DiffForm::function(g.clone(), 2).d();
        let tel = ct_one_form(&w, t).unwrap();
        assert_eq!(tel.operator, OreOp::one(t, n));
        assert_eq!(tel.certificate, g);
        assert_eq!(telescoper_order(&w, t, 3).unwrap(), Some(0));
    }

    #[test]
    fn worked_example() {
        let (x, y, z, t) = (v(0), v(1), v(2), v(T));
        let xyz = &(&x * &y) * &z;
        let w = DiffForm::one_form(vec![
            rf(&(&t * &xyz) - &c(1), &x * &xyz),
            rf(&(&t * &xyz) - &c(1), &y * &xyz),
            rf(&(&(&t.pow(2) * &xyz) + &xyz) - &c(1), &z * &xyz),
        ]);
        let tel = ct_one_form(&w, T).unwrap();
        let expect = op(vec![
            &(&t.pow(2) * &c(2)) + &c(2),
            &(&t.pow(3) * &c(-2)) - &(&t * &c(2)),
            &t.pow(4) - &c(1),
        ]);
        assert_eq!(tel.operator, expect);
        assert_eq!(tel.certificate, rf(&(&t.pow(2) * &c(2)) + &c(2), xyz));
        assert!(verify_telescoper(&w, &tel));
        assert!(!has_telescoper_below(&w, T, 2).unwrap());
        assert_eq!(telescoper_order(&w, T, 3).unwrap(), Some(2));
    }
}
