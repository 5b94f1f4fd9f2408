//! Closed rational p-forms: peel off one variable at a time, integrating the
//! coefficients of `dx_s ^ dx_I` in `x_s`, and verify by expanding `d` of
//! the resulting logarithmic primitive.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::forms::{DiffForm, Index};
use crate::integrate::oneform::{check_closed, integrate_closed_1form};
use crate::integrate::univar::{integrate_univariate, LogTerm, Primitive};
use crate::poly::RatFunc;

/// A `(p-1)`-form whose coefficients are primitives (rational part plus
/// logarithms). Logarithms produced while eliminating `x_s` have their
/// argument in `x_s` and residues free of `x_s, ..., x_{m-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimitiveForm {
    degree: usize,
    nforms: usize,
    nvars: usize,
    coeffs: BTreeMap<Index, Primitive>,
}

impl PrimitiveForm {
    pub fn zero(degree: usize, nforms: usize, nvars: usize) -> Self {
        PrimitiveForm { degree, nforms, nvars, coeffs: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn nforms(&self) -> usize {
        self.nforms
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Index, Primitive> {
        &self.coeffs
    }

    pub fn coeff(&self, idx: &[usize]) -> Option<&Primitive> {
        self.coeffs.get(idx)
    }

    /// Adds `p` to the coefficient of `dx_idx` (`idx` strictly increasing).
    pub fn add_term(&mut self, idx: Index, p: Primitive) {
        let merged = match self.coeffs.get(&idx) {
            Some(old) => old.add(&p),
            None => p,
        };
        if merged.is_zero() {
            self.coeffs.remove(&idx);
        } else {
            self.coeffs.insert(idx, merged);
        }
    }

    pub fn log_terms(&self) -> impl Iterator<Item = &LogTerm> {
        self.coeffs.values().flat_map(|p| p.logs.iter())
    }

    pub fn to_text(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(idx, p)| {
                let s = p.to_text(names);
                if idx.is_empty() {
                    return s;
                }
                let single = p.logs.len() + usize::from(!p.rational.is_zero()) <= 1;
                let s = if single && !s.contains(" + ") && !s.contains(" - ") { s } else { format!("({})", s) };
                format!("{}*{}", s, crate::forms::diffform::basis_text(idx, names))
            })
            .collect();
        parts.join(" + ")
    }
}

/// `d` of a primitive form, with logarithms differentiated through trace
/// sums. Terms `d(c) * log(b)` from non-constant residues must cancel within
/// each output component and stage; otherwise the result is not rational and
/// `ResidualLogarithm` is returned.
pub fn expand_primitive_derivative(p: &PrimitiveForm) -> Result<DiffForm> {
    let m = p.nforms;
    let mut out = DiffForm::zero(p.degree + 1, m, p.nvars);
    // (output index, stage) -> signed weighted logs whose derivative in the stage variable must vanish
    let mut pending: BTreeMap<(Index, usize), Vec<(bool, RatFunc, &LogTerm)>> = BTreeMap::new();
    for (idx, prim) in &p.coeffs {
        for l in 0..m {
            if idx.contains(&l) {
                continue;
            }
            let pos = idx.iter().filter(|&&i| i < l).count();
            let neg = pos % 2 == 1;
            let mut j = idx.clone();
            j.insert(pos, l);
            let mut val = prim.rational.derivative(l);
            for lt in &prim.logs {
                val = &val + &lt.log_derivative(l)?;
                if lt.respoly.uses_var(l) {
                    let stage = lt.stage(m).ok_or(Error::ResidualLogarithm)?;
                    if (stage..m).any(|v| lt.respoly.uses_var(v)) {
                        return Err(Error::ResidualLogarithm);
                    }
                    let w = lt.residue_derivative(l)?;
                    pending.entry((j.clone(), stage)).or_default().push((neg, w, lt));
                }
            }
            if !val.is_zero() {
                out = &out + &DiffForm::term(if neg { -&val } else { val }, &j, m);
            }
        }
    }
    for ((_, stage), items) in pending {
        let mut acc = RatFunc::zero(p.nvars);
        for (neg, w, lt) in items {
            let d = lt.weighted_log_derivative(&w, stage)?;
            acc = if neg { &acc - &d } else { &acc + &d };
        }
        if !acc.is_zero() {
            return Err(Error::ResidualLogarithm);
        }
    }
    Ok(out)
}

/// Primitive of a closed rational `p`-form, `p >= 1`.
pub fn integrate_closed_pform(w: &DiffForm) -> Result<PrimitiveForm> {
    let p = w.degree();
    let m = w.nforms();
    let n = w.nvars();
    if p == 0 {
        return Err(Error::PreconditionViolated("cannot integrate a 0-form".into()));
    }
    if p == 1 {
        let prim = integrate_closed_1form(w)?;
        let mut out = PrimitiveForm::zero(0, m, n);
        out.add_term(Vec::new(), prim);
        return Ok(out);
    }
    check_closed(w)?;
    let mut cur = w.clone();
    let mut psi = PrimitiveForm::zero(p - 1, m, n);
    for s in (p - 1..m).rev() {
        let a = cur.leading_coefficients(s);
        if !a.is_empty() {
            let mut stage = PrimitiveForm::zero(p - 1, m, n);
            for (idx, coeff) in a {
                stage.add_term(idx, integrate_univariate(&coeff, s)?);
            }
            let dpsi = expand_primitive_derivative(&stage).map_err(|e| match e {
                Error::ResidualLogarithm => Error::RationalityAssertionFailed(format!("logarithms survive after eliminating variable {}", s + 1)),
                e => e,
            })?;
            cur = &cur - &dpsi;
            for (idx, prim) in stage.coeffs {
                psi.add_term(idx, prim);
            }
        }
        if !cur.is_free_of(s) {
            return Err(Error::RationalityAssertionFailed(format!("remaining form still depends on variable {}", s + 1)));
        }
    }
    if !cur.is_zero() {
        return Err(Error::RationalityAssertionFailed("nonzero remainder after the last stage".into()));
    }
    Ok(psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MPoly;

    // x, y, z, _c
    const N: usize = 4;

    fn v(i: usize) -> MPoly {
        MPoly::var(i, N)
    }

    #[test]
    fn polynomial_two_form() {
        let w = DiffForm::term(RatFunc::one(N), &[0, 1], 2);
        let psi = integrate_closed_pform(&w).unwrap();
        assert_eq!(psi.coeff(&[0]), Some(&Primitive::rational(RatFunc::from_poly(-&v(1)))));
        assert_eq!(expand_primitive_derivative(&psi).unwrap(), w);
    }

    #[test]
    fn one_over_xy() {
        let f = RatFunc::new(MPoly::one(N), &v(0) * &v(1)).unwrap();
        let w = DiffForm::term(f, &[0, 1], 2);
        let psi = integrate_closed_pform(&w).unwrap();
        let b = psi.coeff(&[0]).unwrap();
        assert!(b.rational.is_zero());
        assert_eq!(b.logs[0].residue(), Some(RatFunc::new(MPoly::from_int(-1, N), v(0)).unwrap()));
        assert_eq!(b.logs[0].argpoly, RatFunc::from_poly(v(1)));
        assert_eq!(expand_primitive_derivative(&psi).unwrap(), w);
    }

    #[test]
    fn cubic_three_form() {
        let q = &(&v(0).pow(3) + &v(1).pow(3)) + &v(2).pow(3);
        let w = DiffForm::top(RatFunc::new(MPoly::one(N), q).unwrap(), 3);
        let psi = integrate_closed_pform(&w).unwrap();
        assert_eq!(psi.coeffs().len(), 1);
        assert_eq!(psi.log_terms().next().unwrap().root_count(), 3);
        assert_eq!(expand_primitive_derivative(&psi).unwrap(), w);
    }

    #[test]
    fn uncancelled_logs_are_rejected() {
        // -(1/x) log y as the dy coefficient: d gives (1/x^2) log y dx^dy
        let f = RatFunc::new(MPoly::one(N), &v(0) * &v(1)).unwrap();
        let w = DiffForm::term(f, &[0, 1], 2);
        let psi = integrate_closed_pform(&w).unwrap();
        let mut moved = PrimitiveForm::zero(1, 2, N);
        moved.add_term(vec![1], psi.coeff(&[0]).unwrap().clone());
        assert_eq!(expand_primitive_derivative(&moved), Err(Error::ResidualLogarithm));
    }

    #[test]
    fn three_variable_two_form() {
        let (x, y, z) = (v(0), v(1), v(2));
        let q = &(&z * &z) - &x;
        let one = MPoly::one(N);
        let inv_q = RatFunc::new(one.clone(), q.clone()).unwrap();
        let c_xy = &inv_q + &RatFunc::new(one.clone(), &x * &y).unwrap();
        let c_xz = RatFunc::new(&y - &(&(&y * &z) * &MPoly::from_int(2, N)), q.pow(2)).unwrap();
        let w = &(&DiffForm::term(c_xy, &[0, 1], 3) + &DiffForm::term(inv_q.clone(), &[1, 2], 3)) + &DiffForm::term(c_xz, &[0, 2], 3);
        assert!(w.is_closed());
        let a = w.leading_coefficients(2);
        assert_eq!(a.get(&vec![1]), Some(&-&inv_q));

        let psi = integrate_closed_pform(&w).unwrap();
        assert_eq!(expand_primitive_derivative(&psi).unwrap(), w);
        // residues +-1/(2 sqrt x) and +-y/(4 x^(3/2)), kept unsplit
        let c2 = &v(3) * &v(3);
        let dy = psi.coeff(&[1]).unwrap();
        assert!(dy.rational.is_zero());
        assert_eq!(dy.logs.len(), 1);
        assert_eq!(dy.logs[0].respoly, &(&(&x * &c2) * &MPoly::from_int(4, N)) - &one);
        let dx = psi.coeff(&[0]).unwrap();
        let stage3: Vec<&LogTerm> = dx.logs.iter().filter(|l| l.stage(3) == Some(2)).collect();
        assert_eq!(stage3.len(), 1);
        assert_eq!(stage3[0].respoly, &(&(&x.pow(3) * &c2) * &MPoly::from_int(16, N)) - &y.pow(2));
        let two = MPoly::from_int(2, N);
        assert_eq!(dx.rational, RatFunc::new(&(&y * &z) - &(&(&two * &x) * &y), &(&two * &x) * &q).unwrap());
    }
}
