//! Closed rational 1-forms: Hermite reduction variable by variable, full
//! integration with constant-residue logarithms, and the exactness test.

use crate::error::{Error, Result};
use crate::forms::DiffForm;
use crate::integrate::univar::{hermite_ratfunc, log_part, LogTerm, Primitive};
use crate::poly::RatFunc;
use crate::vars::Vars;

/// `input = d(g) + residual`, with every residual coefficient having a
/// squarefree denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct OneFormReduction {
    pub g: RatFunc,
    pub residual: DiffForm,
}

struct Parts {
    g: RatFunc,
    residual: DiffForm,
    logs: Vec<LogTerm>,
}

pub(crate) fn check_closed(w: &DiffForm) -> Result<()> {
    w.ensure_closed(Vars::generic(w.nforms(), w.nvars()).names())
}

fn reduce(w: &DiffForm) -> Result<Parts> {
    if w.degree() != 1 {
        return Err(Error::PreconditionViolated(format!("expected a 1-form, got degree {}", w.degree())));
    }
    check_closed(w)?;
    let m = w.nforms();
    let n = w.nvars();
    let mut cur = w.clone();
    let mut g = RatFunc::zero(n);
    let mut residual = DiffForm::zero(1, m, n);
    let mut logs = Vec::new();
    for s in (0..m).rev() {
        let f = cur.coeff(&[s]);
        if !f.is_zero() {
            let (a, h) = hermite_ratfunc(&f, s)?;
            let stage = log_part(&h, s)?;
            if let Some(bad) = stage.iter().find(|l| !l.has_constant_residues(m)) {
                let names = Vars::generic(m, n);
                return Err(Error::RationalityAssertionFailed(format!(
                    "residue polynomial {} depends on the form variables",
                    bad.respoly.to_text(names.names())
                )));
            }
            let mut coeffs = vec![RatFunc::zero(n); m];
            for (l, c) in coeffs.iter_mut().enumerate().take(s + 1) {
                for lt in &stage {
                    *c = &*c + &lt.log_derivative(l)?;
                }
            }
            if coeffs[s] != h {
                return Err(Error::RationalityAssertionFailed("logarithmic part does not reproduce the reduced integrand".into()));
            }
            let rt = DiffForm::one_form(coeffs);
            cur = &(&cur - &DiffForm::function(a.clone(), m).d()) - &rt;
            g = &g + &a;
            residual = &residual + &rt;
            logs.extend(stage);
        }
        if !cur.is_free_of(s) {
            return Err(Error::RationalityAssertionFailed(format!("remaining form still depends on variable {}", s + 1)));
        }
    }
    debug_assert!(cur.is_zero());
    logs.sort();
    Ok(Parts { g, residual, logs })
}

/// Hermite reduction of a closed 1-form.
pub fn hermite_one_form(w: &DiffForm) -> Result<OneFormReduction> {
    let p = reduce(w)?;
    Ok(OneFormReduction { g: p.g, residual: p.residual })
}

/// Primitive of a closed 1-form: a rational part plus logarithms with
/// constant residues.
pub fn integrate_closed_1form(w: &DiffForm) -> Result<Primitive> {
    let p = reduce(w)?;
    Ok(Primitive { rational: p.g, logs: p.logs })
}

/// Whether the closed 1-form is `d` of a rational function.
pub fn is_exact_rational(w: &DiffForm) -> Result<bool> {
    Ok(hermite_one_form(w)?.residual.is_zero())
}

/// Checks `d(prim) = w` coefficientwise.
pub fn verify_1form_primitive(w: &DiffForm, prim: &Primitive) -> Result<bool> {
    for (l, f) in w.one_form_coeffs().iter().enumerate() {
        if &prim.derivative(l)? != f {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MPoly;

    // x, y, _c
    const N: usize = 3;

    fn v(i: usize) -> MPoly {
        MPoly::var(i, N)
    }

    fn rf(a: MPoly, b: MPoly) -> RatFunc {
        RatFunc::new(a, b).unwrap()
    }

    #[test]
    fn polynomial_potential() {
        let w = DiffForm::one_form(vec![RatFunc::from_poly(v(1)), RatFunc::from_poly(v(0))]);
        let prim = integrate_closed_1form(&w).unwrap();
        assert_eq!(prim, Primitive::rational(RatFunc::from_poly(&v(0) * &v(1))));
        assert!(is_exact_rational(&w).unwrap());
    }

    #[test]
    fn single_log() {
        let b = &(&v(0) * &v(1)) + &MPoly::one(N);
        let w = DiffForm::one_form(vec![rf(v(1), b.clone()), rf(v(0), b.clone())]);
        let prim = integrate_closed_1form(&w).unwrap();
        assert!(prim.rational.is_zero());
        // arguments are monic in their variable: log(y + 1/x) + log(x)
        assert_eq!(prim.logs.len(), 2);
        assert!(prim.logs.iter().all(|l| l.residue() == Some(RatFunc::one(N))));
        assert!(verify_1form_primitive(&w, &prim).unwrap());
        assert!(!is_exact_rational(&w).unwrap());
    }

    #[test]
    fn exact_and_reduced_inputs() {
        let g = rf(MPoly::one(N), &v(0) * &v(1));
        let w = DiffForm::function(g.clone(), 2).d();
        let r = hermite_one_form(&w).unwrap();
        assert_eq!(r.g, g);
        assert!(r.residual.is_zero());

        let w = DiffForm::one_form(vec![rf(MPoly::one(N), v(0)), rf(MPoly::one(N), v(1))]);
        let r = hermite_one_form(&w).unwrap();
        assert!(r.g.is_zero());
        assert_eq!(r.residual, w);
    }

    #[test]
    fn not_closed() {
        let w = DiffForm::one_form(vec![RatFunc::from_poly(v(1)), RatFunc::zero(N)]);
        assert!(matches!(hermite_one_form(&w), Err(Error::NotClosed { .. })));
    }

    // x, y, z, t, _c
    fn example_form() -> DiffForm {
        let n = 5;
        let (x, y, z, t) = (MPoly::var(0, n), MPoly::var(1, n), MPoly::var(2, n), MPoly::var(3, n));
        let xyz = &(&x * &y) * &z;
        let one = MPoly::one(n);
        let c1 = RatFunc::new(&(&t * &xyz) - &one, &x * &xyz).unwrap();
        let c2 = RatFunc::new(&(&t * &xyz) - &one, &y * &xyz).unwrap();
        let c3 = RatFunc::new(&(&(&(&t * &t) * &xyz) + &xyz) - &one, &z * &xyz).unwrap();
        DiffForm::one_form(vec![c1, c2, c3])
    }

    #[test]
    fn hermite_worked_example() {
        let n = 5;
        let (x, y, z, t) = (MPoly::var(0, n), MPoly::var(1, n), MPoly::var(2, n), MPoly::var(3, n));
        let w = example_form();
        let r = hermite_one_form(&w).unwrap();
        assert_eq!(r.g, RatFunc::new(MPoly::one(n), &(&x * &y) * &z).unwrap());
        let expect = DiffForm::one_form(vec![
            RatFunc::new(t.clone(), x).unwrap(),
            RatFunc::new(t.clone(), y).unwrap(),
            RatFunc::new(&(&t * &t) + &MPoly::one(n), z).unwrap(),
        ]);
        assert_eq!(r.residual, expect);

        let prim = integrate_closed_1form(&w).unwrap();
        assert_eq!(prim.rational, r.g);
        assert_eq!(prim.logs.len(), 3);
        assert!(verify_1form_primitive(&w, &prim).unwrap());
        assert!(!is_exact_rational(&w).unwrap());
    }
}
