use super::mpoly::MPoly;
use super::ratfunc::RatFunc;
use super::Q;

/// Dense univariate polynomial in variable `var` whose coefficients are
/// rational functions free of `var`; i.e. an element of `F[var]` with `F`
/// the field generated by the remaining variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly {
    var: usize,
    nvars: usize,
    coeffs: Vec<RatFunc>,
}

impl UPoly {
    pub fn zero(var: usize, nvars: usize) -> Self {
        UPoly { var, nvars, coeffs: Vec::new() }
    }

    pub fn constant(c: RatFunc, var: usize) -> Self {
        let nvars = c.nvars();
        Self::from_coeffs(var, nvars, vec![c])
    }

    pub fn from_coeffs(var: usize, nvars: usize, coeffs: Vec<RatFunc>) -> Self {
        let mut p = UPoly { var, nvars, coeffs };
        p.trim();
        p
    }

    pub fn from_mpoly(p: &MPoly, var: usize) -> Self {
        let coeffs = p.coeffs_in(var).into_iter().map(RatFunc::from_poly).collect();
        Self::from_coeffs(var, p.nvars(), coeffs)
    }

    /// Monomial `var^k`.
    pub fn monomial(k: usize, var: usize, nvars: usize) -> Self {
        let mut coeffs = vec![RatFunc::zero(nvars); k + 1];
        coeffs[k] = RatFunc::one(nvars);
        UPoly { var, nvars, coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, RatFunc::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(|| RatFunc::zero(self.nvars))
    }

    pub fn lc(&self) -> RatFunc {
        self.coeffs.last().cloned().unwrap_or_else(|| RatFunc::zero(self.nvars))
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let x = RatFunc::var(self.var, self.nvars);
        let mut acc = RatFunc::zero(self.nvars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + c;
        }
        acc
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Self::from_coeffs(self.var, self.nvars, coeffs)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        Self::from_coeffs(self.var, self.nvars, coeffs)
    }

    pub fn neg(&self) -> UPoly {
        UPoly { var: self.var, nvars: self.nvars, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(self.var, self.nvars);
        }
        let mut coeffs = vec![RatFunc::zero(self.nvars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(self.var, self.nvars, coeffs)
    }

    pub fn scale(&self, c: &RatFunc) -> UPoly {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Self::from_coeffs(self.var, self.nvars, coeffs)
    }

    pub fn scale_q(&self, c: &Q) -> UPoly {
        let coeffs = self.coeffs.iter().map(|a| a.scale(c)).collect();
        Self::from_coeffs(self.var, self.nvars, coeffs)
    }

    /// Derivative with respect to the main variable.
    pub fn derivative(&self) -> UPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Q::from_integer((k as i64).into())))
            .collect();
        Self::from_coeffs(self.var, self.nvars, coeffs)
    }

    /// Euclidean division over the coefficient field.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        let lc_inv = d.lc().inv().expect("nonzero leading coefficient");
        let mut q = vec![RatFunc::zero(self.nvars); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = &r.lc() * &lc_inv;
            let k = dr - dd;
            for (j, b) in d.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    r.coeffs[k + j] = &r.coeffs[k + j] - &(&c * b);
                }
            }
            // the leading coefficient cancels exactly
            r.coeffs[dr] = RatFunc::zero(self.nvars);
            r.trim();
            q[k] = c;
        }
        (Self::from_coeffs(self.var, self.nvars, q), r)
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().unwrap();
        self.scale(&inv)
    }

    /// Monic gcd over the coefficient field.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (v, n) = (self.var, self.nvars);
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = UPoly::constant(RatFunc::one(n), v);
        let mut s1 = UPoly::zero(v, n);
        let mut t0 = UPoly::zero(v, n);
        let mut t1 = UPoly::constant(RatFunc::one(n), v);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv().unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Solves `s*a + t*b = c` with `deg s < deg b` for coprime `a, b`.
    pub fn solve_bezout(a: &UPoly, b: &UPoly, c: &UPoly) -> Option<(UPoly, UPoly)> {
        let (g, s0, _) = a.ext_gcd(b);
        if g.degree() != Some(0) {
            return None;
        }
        let s = s0.mul(c).rem(b);
        let (t, r) = c.sub(&s.mul(a)).divrem(b);
        debug_assert!(r.is_zero());
        Some((s, t))
    }

    /// Inverse modulo `m`, if it exists.
    pub fn inverse_mod(&self, m: &UPoly) -> Option<UPoly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        if g.degree() != Some(0) {
            return None;
        }
        Some(s.rem(m))
    }

    pub fn eval(&self, x: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero(self.nvars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> UPoly {
        let coeffs = self.coeffs.iter().map(f).collect();
        Self::from_coeffs(self.var, self.nvars, coeffs)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_is_zero(&self) -> bool {
        self.lc().is_zero()
    }
}

/// Splits a rational function into numerator and denominator polynomials in `var`.
pub fn ratfunc_to_upolys(f: &RatFunc, var: usize) -> (UPoly, UPoly) {
    (UPoly::from_mpoly(f.num(), var), UPoly::from_mpoly(f.den(), var))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclid_over_function_field() {
        // F = Q(y), polynomials in x
        let n = 2;
        let x = MPoly::var(0, n);
        let y = MPoly::var(1, n);
        let a = UPoly::from_mpoly(&(&(&x * &x) - &y), 0);
        let b = UPoly::from_mpoly(&(&x - &MPoly::one(n)), 0);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g.degree(), Some(0));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        let inv = b.inverse_mod(&a).unwrap();
        assert_eq!(inv.mul(&b).rem(&a), UPoly::constant(RatFunc::one(n), 0));
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }
}
