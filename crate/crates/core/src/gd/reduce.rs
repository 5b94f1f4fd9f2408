//! Pole-order reduction of `P * Omega / Q^ell` modulo the Jacobian ideal.

use crate::error::{Error, Result};
use crate::forms::DiffForm;
use crate::gd::groebner::{groebner_basis, has_pure_powers, normal_form};
use crate::gd::{jacobian, ProjForm};
use crate::poly::{MPoly, RatFunc, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct GDResult {
    /// Pole order of the input.
    pub ell: u32,
    /// `A_0..A_m` of each reduction step, the step with index `k` acting at
    /// pole order `ell - k`.
    pub stages: Vec<Vec<MPoly>>,
    /// `r_1, r_2, ..`; `r_k` sits over `Q^(ell - k + 1)`.
    pub remainders: Vec<MPoly>,
    pub exact: bool,
    /// False when an early exit stopped before pole order 1.
    pub complete: bool,
}

impl GDResult {
    /// `(r_k, pole order)` for the nonzero remainders.
    pub fn reduction(&self) -> Vec<(MPoly, u32)> {
        self.remainders
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(k, r)| (r.clone(), self.ell - k as u32))
            .collect()
    }
}

fn lift(p: &MPoly, m: usize) -> MPoly {
    let map: Vec<usize> = (0..=m).collect();
    p.remap(m + 2, &map)
}

/// `Omega` as a form in `m + 1` variables (ring with one spare variable).
pub fn omega_form(m: usize) -> DiffForm {
    let n = m + 2;
    let mut out = DiffForm::zero(m, m + 1, n);
    for i in 0..=m {
        let idx: Vec<usize> = (0..=m).filter(|&k| k != i).collect();
        let mut c = RatFunc::var(i, n);
        if i % 2 == 1 {
            c = -&c;
        }
        out = &out + &DiffForm::term(c, &idx, m + 1);
    }
    out
}

fn over_q_power(p: &MPoly, q: &MPoly, e: u32, m: usize) -> RatFunc {
    RatFunc::new(lift(p, m), lift(q, m).pow(e)).expect("Q is nonzero")
}

/// The `(m-1)`-form `phi` of one reduction step at pole order `ell >= 2`:
/// `sum_{i<j} (-1)^(i+j) (xi_i A_j - xi_j A_i) / ((ell - 1) Q^(ell-1))` on
/// `dxi` with `i` and `j` omitted. Its differential is
/// `(sum A_i dQ/dxi_i) Omega / Q^ell - (sum dA_i/dxi_i) Omega / ((ell-1) Q^(ell-1))`.
pub fn phi_form(a: &[MPoly], q: &MPoly, ell: u32, m: usize) -> DiffForm {
    let n = m + 2;
    let mut out = DiffForm::zero(m - 1, m + 1, n);
    let scale = Q::new(1.into(), (ell as i64 - 1).into());
    for j in 0..=m {
        for i in 0..j {
            let xi = MPoly::var(i, m + 1);
            let xj = MPoly::var(j, m + 1);
            let mut num = &(&xi * &a[j]) - &(&xj * &a[i]);
            if num.is_zero() {
                continue;
            }
            if (i + j) % 2 == 1 {
                num = -&num;
            }
            let idx: Vec<usize> = (0..=m).filter(|&k| k != i && k != j).collect();
            let c = over_q_power(&num.scale(&scale), q, ell - 1, m);
            out = &out + &DiffForm::term(c, &idx, m + 1);
        }
    }
    out
}

/// `P * Omega / Q^ell` as a form.
pub fn proj_to_form(p: &MPoly, q: &MPoly, ell: u32, m: usize) -> DiffForm {
    omega_form(m).scale(&over_q_power(p, q, ell, m))
}

/// Checks `w = sum d(phi_k) + sum r_k Omega / Q^(ell-k+1)` as forms.
pub fn verify_reconstruction(w: &ProjForm, res: &GDResult) -> bool {
    let m = w.m;
    let mut rhs = DiffForm::zero(m, m + 1, m + 2);
    for (k, a) in res.stages.iter().enumerate() {
        rhs = &rhs + &phi_form(a, &w.q, w.ell - k as u32, m).d();
    }
    for (r, order) in res.reduction() {
        rhs = &rhs + &proj_to_form(&r, &w.q, order, m);
    }
    rhs == proj_to_form(&w.p, &w.q, w.ell, m)
}

/// Reduction of `w` to `sum r_k Omega / Q^(ell-k+1)` plus an exact part. With
/// `early_exit`, stops at the first nonzero remainder; otherwise the
/// reconstruction identity is checked before returning.
pub fn gd_reduce(w: &ProjForm, early_exit: bool) -> Result<GDResult> {
    let jac = jacobian(&w.q);
    let g = groebner_basis(&jac);
    if !has_pure_powers(&g, w.m + 1) {
        return Err(Error::NotSmooth);
    }
    let mut res = GDResult { ell: w.ell, stages: Vec::new(), remainders: Vec::new(), exact: true, complete: true };
    let mut p = w.p.clone();
    let mut ell = w.ell;
    loop {
        if ell == 1 {
            // deg P < deg dQ/dxi_i, so P is its own remainder
            debug_assert_eq!(normal_form(&p, &g).0, p);
            res.exact &= p.is_zero();
            res.remainders.push(p);
            break;
        }
        let (r, a) = normal_form(&p, &g);
        let nonzero = !r.is_zero();
        res.exact &= !nonzero;
        res.remainders.push(r);
        let mut next = MPoly::zero(w.m + 1);
        for (i, ai) in a.iter().enumerate() {
            next = &next + &ai.derivative(i);
        }
        res.stages.push(a);
        p = next.scale(&Q::new(1.into(), (ell as i64 - 1).into()));
        ell -= 1;
        if nonzero && early_exit {
            res.complete = false;
            return Ok(res);
        }
    }
    if !verify_reconstruction(w, &res) {
        return Err(Error::RationalityAssertionFailed("Griffiths-Dwork reconstruction identity fails".into()));
    }
    Ok(res)
}

/// `sum_i d u_i / d x_i == f`.
pub fn verify_picard_solution(f: &RatFunc, u: &[RatFunc]) -> bool {
    let mut acc = RatFunc::zero(f.nvars());
    for (i, ui) in u.iter().enumerate() {
        acc = &acc + &ui.derivative(i);
    }
    &acc == f
}
