//! Integration of rational functions in one variable over the field of the
//! remaining variables: Hermite reduction for the rational part and the
//! Lazard–Rioboo–Trager resultant method for the logarithmic part.

use crate::error::{Error, Result};
use crate::poly::gcd::{content_in, gcd, subresultant_prs};
use crate::poly::sqf::squarefree_factorization;
use crate::poly::trace::{inverse_mod_ff, linear_root, pseudo_reduce, root_derivative, trace_sum};
use crate::poly::{MPoly, RatFunc, UPoly, Q};

/// `sum over respoly(c) = 0 of c * log(argpoly(c, ...))`.
///
/// The root variable is the last ring variable. `respoly` is squarefree in
/// it; `argpoly` is monic in its integration variable and its denominator is
/// free of both the integration variable and the root.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LogTerm {
    pub respoly: MPoly,
    pub argpoly: RatFunc,
}

impl LogTerm {
    pub fn root(&self) -> usize {
        self.respoly.nvars() - 1
    }

    pub fn nvars(&self) -> usize {
        self.respoly.nvars()
    }

    /// Number of roots of the residue polynomial.
    pub fn root_count(&self) -> u32 {
        self.respoly.degree(self.root())
    }

    /// The residue when the residue polynomial is linear.
    pub fn residue(&self) -> Option<RatFunc> {
        (self.root_count() == 1).then(|| linear_root(&self.respoly, self.root()))
    }

    /// True when the residues do not depend on any of the first `nforms` variables.
    pub fn has_constant_residues(&self, nforms: usize) -> bool {
        (0..nforms).all(|v| !self.respoly.uses_var(v))
    }

    /// Largest form variable the argument depends on (its integration variable).
    pub fn stage(&self, nforms: usize) -> Option<usize> {
        (0..nforms).rev().find(|&v| self.argpoly.uses_var(v))
    }

    /// `sum c * D_v(b(c)) / b(c)`, where `D_v` also differentiates the root.
    pub fn log_derivative(&self, v: usize) -> Result<RatFunc> {
        let z = self.root();
        let mut db = self.argpoly.derivative(v);
        if self.respoly.uses_var(v) && self.argpoly.uses_var(z) {
            let cv = root_derivative(&self.respoly, z, v)?;
            db = &db + &(&self.argpoly.derivative(z) * &cv);
        }
        if db.is_zero() {
            return Ok(RatFunc::zero(self.nvars()));
        }
        let h = &RatFunc::var(z, self.nvars()) * &db.checked_div(&self.argpoly)?;
        trace_sum(&self.respoly, z, &h)
    }

    /// The residue derivative `d_v c` as an element of the quotient ring by
    /// `respoly` (a polynomial in the root of degree below the root count).
    pub fn residue_derivative(&self, v: usize) -> Result<RatFunc> {
        root_derivative(&self.respoly, self.root(), v)
    }

    /// `sum w(c) * d_v(b(c)) / b(c)` for a weight `w` and a variable `v` the
    /// residues do not depend on.
    pub fn weighted_log_derivative(&self, weight: &RatFunc, v: usize) -> Result<RatFunc> {
        debug_assert!(!self.respoly.uses_var(v));
        let db = self.argpoly.derivative(v);
        if db.is_zero() || weight.is_zero() {
            return Ok(RatFunc::zero(self.nvars()));
        }
        let h = weight * &db.checked_div(&self.argpoly)?;
        trace_sum(&self.respoly, self.root(), &h)
    }

    pub fn to_text(&self, names: &[String]) -> String {
        let arg = self.argpoly.to_text(names);
        match self.residue() {
            Some(c) => {
                let cs = c.to_text(names);
                let cs = if c.is_one() {
                    String::new()
                } else if c.den().is_one() && c.num().nterms() > 1 {
                    format!("({})*", cs)
                } else {
                    format!("{}*", cs)
                };
                format!("{}log({})", cs, arg)
            }
            None => {
                let z = &names[self.root()];
                format!("sum({}: {} = 0, {}*log({}))", z, self.respoly.to_text(names), z, arg)
            }
        }
    }
}

/// Rational part plus logarithmic terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Primitive {
    pub rational: RatFunc,
    pub logs: Vec<LogTerm>,
}

impl Primitive {
    pub fn zero(nvars: usize) -> Self {
        Primitive { rational: RatFunc::zero(nvars), logs: Vec::new() }
    }

    pub fn rational(f: RatFunc) -> Self {
        Primitive { rational: f, logs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.logs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.logs.is_empty()
    }

    /// Sum of two primitives; logarithmic terms are concatenated and sorted.
    pub fn add(&self, other: &Primitive) -> Primitive {
        let mut logs = self.logs.clone();
        logs.extend(other.logs.iter().cloned());
        logs.sort();
        Primitive { rational: &self.rational + &other.rational, logs }
    }

    /// Derivative in `v`, valid when no residue depends on `v`.
    pub fn derivative(&self, v: usize) -> Result<RatFunc> {
        let mut acc = self.rational.derivative(v);
        for l in &self.logs {
            if l.respoly.uses_var(v) {
                return Err(Error::ResidualLogarithm);
            }
            acc = &acc + &l.log_derivative(v)?;
        }
        Ok(acc)
    }

    pub fn to_text(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        if !self.rational.is_zero() || self.logs.is_empty() {
            parts.push(self.rational.to_text(names));
        }
        parts.extend(self.logs.iter().map(|l| l.to_text(names)));
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    s.push_str(" - ");
                    s.push_str(rest);
                }
                None => {
                    s.push_str(" + ");
                    s.push_str(p);
                }
            }
        }
        s
    }
}

/// Antiderivative of a polynomial in `var` with coefficients in the other variables.
fn integrate_polynomial(p: &UPoly) -> RatFunc {
    let n = p.nvars();
    let x = RatFunc::var(p.var(), n);
    let mut acc = RatFunc::zero(n);
    let mut xp = x.clone();
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &(&c.scale(&Q::new(1.into(), ((k + 1) as i64).into())) * &xp);
        }
        xp = &xp * &x;
    }
    acc
}

/// Hermite reduction of `a/d` in `var`: returns `(g, h)` with
/// `a/d = d_var(g) + h`, where `h` is proper in `var` with squarefree
/// denominator. The polynomial part is integrated into `g`.
pub fn hermite_rat(a: &MPoly, d: &MPoly, var: usize) -> Result<(RatFunc, RatFunc)> {
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let n = a.nvars();
    if a.is_zero() {
        return Ok((RatFunc::zero(n), RatFunc::zero(n)));
    }
    if gcd(a, d).degree(var) > 0 {
        return Err(Error::NotCoprime);
    }
    let num = UPoly::from_mpoly(a, var);
    let den = UPoly::from_mpoly(d, var);
    let (poly, rem) = num.divrem(&den);
    let mut g = integrate_polynomial(&poly);
    if rem.is_zero() {
        return Ok((g, RatFunc::zero(n)));
    }
    let sqf = squarefree_factorization(d, var)?;
    let mut a = rem;
    let mut dd = den;
    for (fac, i) in &sqf.factors {
        if *i < 2 {
            continue;
        }
        let v = UPoly::from_mpoly(fac, var);
        let vi = UPoly::from_mpoly(&fac.pow(*i), var);
        let u = dd.divrem(&vi).0;
        let uv = u.mul(&v.derivative());
        for j in (1..*i).rev() {
            let rhs = a.scale_q(&Q::new((-1).into(), (j as i64).into()));
            let (b, c) = UPoly::solve_bezout(&uv, &v, &rhs).ok_or(Error::NotCoprime)?;
            let vj = RatFunc::from_poly(fac.pow(j));
            g = &g + &b.to_ratfunc().checked_div(&vj)?;
            a = c.scale_q(&Q::from_integer((-(j as i64)).into())).sub(&u.mul(&b.derivative()));
        }
        dd = u.mul(&v);
    }
    let h = a.to_ratfunc().checked_div(&dd.to_ratfunc())?;
    Ok((g, h))
}

/// [`hermite_rat`] on a reduced rational function.
pub fn hermite_ratfunc(f: &RatFunc, var: usize) -> Result<(RatFunc, RatFunc)> {
    hermite_rat(f.num(), f.den(), var)
}

/// Canonical residue polynomial: canonical associate, made monic when it is
/// linear in the root with a rational leading coefficient.
fn normalize_respoly(q: &MPoly, z: usize) -> MPoly {
    let q = q.canonical();
    if q.degree(z) == 1 {
        if let Some(c) = q.lc_in(z).constant_value() {
            return q.scale(&c.recip());
        }
    }
    q
}

/// Makes `s` monic in `var` modulo `q` (a polynomial in the root `z`) and
/// reduces its coefficients modulo `q`.
fn monic_argument(s: &MPoly, q: &MPoly, var: usize, z: usize) -> Result<RatFunc> {
    let n = s.nvars();
    if q.degree(z) == 1 {
        let c = linear_root(q, z);
        let b = RatFunc::from_poly(s.clone()).substitute(z, &c);
        let coeffs = UPoly::from_mpoly(b.num(), var);
        let lc = &coeffs.lc() * &RatFunc::from_poly(b.den().clone()).inv()?;
        return b.checked_div(&lc);
    }
    // s * inv(lc) with every coefficient reduced modulo q, over one denominator
    let (u, d) = inverse_mod_ff(&s.lc_in(var), q, z).ok_or(Error::NonInvertibleDenominator)?;
    let parts: Vec<(MPoly, u32)> = s.coeffs_in(var).iter().map(|c| pseudo_reduce(&(c * &u), q, z)).collect();
    let e = parts.iter().map(|p| p.1).max().unwrap_or(0);
    let lcq = q.lc_in(z);
    let mut num = MPoly::zero(n);
    for (k, (r, ek)) in parts.iter().enumerate() {
        let term = r * &lcq.pow(e - ek);
        num = &num + &(&term * &MPoly::var(var, n).pow(k as u32));
    }
    RatFunc::new(num, &d * &lcq.pow(e))
}

/// Logarithmic part of `h` in `var`: `h` must be proper in `var` with a
/// squarefree denominator. Residues use the last ring variable as root.
pub fn log_part(h: &RatFunc, var: usize) -> Result<Vec<LogTerm>> {
    let n = h.nvars();
    let z = n - 1;
    if h.is_zero() {
        return Ok(Vec::new());
    }
    if h.uses_var(z) {
        return Err(Error::PreconditionViolated("integrand uses the root variable".into()));
    }
    let dfull = h.den();
    if h.num().degree(var) >= dfull.degree(var) {
        return Err(Error::PreconditionViolated("integrand is not proper".into()));
    }
    let content = content_in(dfull, var);
    let p = dfull.div_exact(&content).expect("content divides");
    if gcd(&p, &p.derivative(var)).degree(var) > 0 {
        return Err(Error::PreconditionViolated("denominator is not squarefree".into()));
    }
    let a = h.num();
    let zpoly = MPoly::var(z, n);
    // A - z*c*P'  with the content c of the denominator kept on the derivative side
    let second = a - &(&(&zpoly * &content) * &p.derivative(var));
    let dp = p.degree(var);
    let (res, seq) = if dp == 1 {
        (second.clone(), vec![p.clone(), second.clone()])
    } else {
        subresultant_prs(&p, &second, var)
    };
    let sqf = squarefree_factorization(&res, z)?;
    let mut out = Vec::new();
    for (qi, i) in &sqf.factors {
        let i = *i;
        let mut s = if i == dp {
            p.clone()
        } else {
            match seq.iter().find(|r| !r.is_zero() && r.degree(var) == i) {
                Some(r) => r.clone(),
                None => return Err(Error::PreconditionViolated("missing subresultant".into())),
            }
        };
        if i != dp {
            let lc = s.lc_in(var);
            if lc.degree(z) > 0 {
                let lsq = squarefree_factorization(&lc, z)?;
                for (aj, j) in &lsq.factors {
                    let g = gcd(aj, qi);
                    if g.degree(z) > 0 {
                        s = s.div_exact(&g.pow(*j)).expect("exact removal of leading factors");
                    }
                }
            }
        }
        let argpoly = monic_argument(&s, qi, var, z)?;
        out.push(LogTerm { respoly: normalize_respoly(qi, z), argpoly });
    }
    out.sort();
    Ok(out)
}

/// Antiderivative of `f` in `var`.
pub fn integrate_univariate(f: &RatFunc, var: usize) -> Result<Primitive> {
    let (g, h) = hermite_ratfunc(f, var)?;
    let logs = log_part(&h, var)?;
    Ok(Primitive { rational: g, logs })
}

/// `d_var` of a primitive produced by [`integrate_univariate`].
pub fn differentiate(p: &Primitive, var: usize) -> Result<RatFunc> {
    p.derivative(var)
}

#[cfg(test)]
mod tests {
    use super::*;

    // ring: x, y, t, _c
    const N: usize = 4;
    const Z: usize = 3;

    fn p(k: i64) -> MPoly {
        MPoly::from_int(k, N)
    }
    fn x() -> MPoly {
        MPoly::var(0, N)
    }
    fn y() -> MPoly {
        MPoly::var(1, N)
    }
    fn t() -> MPoly {
        MPoly::var(2, N)
    }
    fn z() -> MPoly {
        MPoly::var(Z, N)
    }
    fn rf(a: MPoly, b: MPoly) -> RatFunc {
        RatFunc::new(a, b).unwrap()
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite_rat(&p(1), &(&x() * &x()), 0).unwrap(), (rf(p(-1), x()), RatFunc::zero(N)));
        assert_eq!(hermite_rat(&p(1), &x(), 0).unwrap(), (RatFunc::zero(N), rf(p(1), x())));
        assert_eq!(hermite_rat(&p(1), &MPoly::zero(N), 0), Err(Error::ZeroDenominator));
        assert_eq!(hermite_rat(&x(), &(&x() * &y()), 0), Err(Error::NotCoprime));
    }

    #[test]
    fn hermite_reconstructs() {
        let num = &(&x().pow(5) + &(&y() * &x())) - &p(3);
        let den = &(&(&x() * &x()) + &y()).pow(3) * &(&x() - &t()).pow(2);
        let f = rf(num, den);
        let (g, h) = hermite_ratfunc(&f, 0).unwrap();
        assert_eq!(&g.derivative(0) + &h, f);
        assert!(h.num().degree(0) < h.den().degree(0));
        assert_eq!(gcd(h.den(), &h.den().derivative(0)).degree(0), 0);
    }

    #[test]
    fn log_part_examples() {
        let l = log_part(&rf(p(1), x()), 0).unwrap();
        assert_eq!(l, vec![LogTerm { respoly: &z() - &p(1), argpoly: RatFunc::from_poly(x()) }]);

        let xt = &(&x() * &x()) - &t();
        let l = log_part(&rf(&x() * &p(2), xt.clone()), 0).unwrap();
        assert_eq!(l, vec![LogTerm { respoly: &z() - &p(1), argpoly: RatFunc::from_poly(xt) }]);

        let l = log_part(&rf(p(1), &(&x() * &x()) - &p(2)), 0).unwrap();
        let expect = LogTerm { respoly: &(&z() * &z()).scale(&Q::from_integer(8.into())) - &p(1), argpoly: RatFunc::from_poly(&x() - &z().scale(&Q::from_integer(4.into()))) };
        assert_eq!(l, vec![expect]);
        assert_eq!(l[0].log_derivative(0).unwrap(), rf(p(1), &(&x() * &x()) - &p(2)));
    }

    #[test]
    fn parameter_residue() {
        let f = rf(&(&t() * &t()) + &p(1), y());
        let prim = integrate_univariate(&f, 1).unwrap();
        assert!(prim.rational.is_zero());
        assert_eq!(prim.logs.len(), 1);
        assert_eq!(prim.logs[0].respoly, &(&z() - &(&t() * &t())) - &p(1));
        assert_eq!(prim.logs[0].argpoly, RatFunc::from_poly(y()));
        assert_eq!(differentiate(&prim, 1).unwrap(), f);
    }

    #[test]
    fn integrate_examples() {
        let prim = integrate_univariate(&RatFunc::from_poly(x()), 0).unwrap();
        assert_eq!(prim, Primitive::rational(RatFunc::from_poly(&x() * &x()).scale(&Q::new(1.into(), 2.into()))));
        let f = &rf(p(1), &x() * &x()) + &rf(p(1), x());
        let prim = integrate_univariate(&f, 0).unwrap();
        assert_eq!(prim.rational, rf(p(-1), x()));
        assert_eq!(prim.logs[0].residue(), Some(RatFunc::one(N)));
        assert_eq!(differentiate(&prim, 0).unwrap(), f);
    }

    #[test]
    fn non_constant_residue_over_function_field() {
        // 1/(x*y) in y: residue 1/x
        let f = rf(p(1), &x() * &y());
        let prim = integrate_univariate(&f, 1).unwrap();
        assert_eq!(prim.logs[0].residue(), Some(rf(p(1), x())));
        assert_eq!(differentiate(&prim, 1).unwrap(), f);
        // quadratic respoly with a coefficient in x: 1/(y^2 - x)
        let f = rf(p(1), &(&y() * &y()) - &x());
        let prim = integrate_univariate(&f, 1).unwrap();
        assert_eq!(prim.logs[0].root_count(), 2);
        assert_eq!(differentiate(&prim, 1).unwrap(), f);
    }
}
