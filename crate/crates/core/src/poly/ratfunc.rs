use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::{div, gcd};
use super::mpoly::MPoly;
use super::Q;
use crate::error::{Error, Result};

/// Reduced fraction of polynomials.
///
/// The denominator is canonical (primitive integer coefficients, positive
/// leading coefficient) and coprime to the numerator, so two equal rational
/// functions have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: MPoly, den: MPoly) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return RatFunc::zero(n);
        }
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.recip()), den: MPoly::one(n) };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() { (num, den) } else { (div(&num, &g), div(&den, &g)) };
        Self::fix_den(num, den)
    }

    /// Rescales so the denominator is canonical; assumes coprimality.
    fn fix_den(num: MPoly, den: MPoly) -> Self {
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.recip()), den: MPoly::one(num.nvars()) };
        }
        let s = den.normalization_factor();
        if s.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.scale(&s), den: den.scale(&s) }
        }
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc { num: MPoly::zero(nvars), den: MPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc { num: MPoly::one(nvars), den: MPoly::one(nvars) }
    }

    pub fn from_poly(p: MPoly) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: MPoly::one(n) }
    }

    pub fn constant(c: Q, nvars: usize) -> Self {
        Self::from_poly(MPoly::constant(c, nvars))
    }

    pub fn from_int(c: i64, nvars: usize) -> Self {
        Self::from_poly(MPoly::from_int(c, nvars))
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Self::from_poly(MPoly::var(i, nvars))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Q> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.num.uses_var(v) || self.den.uses_var(v)
    }

    pub fn scale(&self, c: &Q) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &MPoly) -> RatFunc {
        self * &RatFunc::from_poly(p.clone())
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::fix_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        RatFunc { num: self.num.pow(e as u32), den: self.den.pow(e as u32) }.fix_den_only()
    }

    fn fix_den_only(self) -> RatFunc {
        Self::fix_den(self.num, self.den)
    }

    pub fn derivative(&self, v: usize) -> RatFunc {
        if !self.uses_var(v) {
            return RatFunc::zero(self.nvars());
        }
        if self.den.is_one() {
            return RatFunc::from_poly(self.num.derivative(v));
        }
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return RatFunc { num: self.num.derivative(v), den: self.den.clone() }.reduce();
        }
        // d(n/D) = (n' D - n D') / D^2; only the factor gcd(D, D') can cancel
        let g = gcd(&self.den, &dd);
        let d1 = div(&self.den, &g);
        let num = &(&self.num.derivative(v) * &d1) - &(&self.num * &div(&dd, &g));
        let den = &d1 * &self.den;
        Self::normalize(num, den)
    }

    fn reduce(self) -> RatFunc {
        Self::normalize(self.num, self.den)
    }

    /// Substitutes `v := value`.
    pub fn substitute(&self, v: usize, value: &RatFunc) -> RatFunc {
        if !self.uses_var(v) {
            return self.clone();
        }
        let eval = |p: &MPoly| -> RatFunc {
            let coeffs = p.coeffs_in(v);
            let mut acc = RatFunc::zero(p.nvars());
            for c in coeffs.iter().rev() {
                acc = &(&acc * value) + &RatFunc::from_poly(c.clone());
            }
            acc
        };
        let n = eval(&self.num);
        let d = eval(&self.den);
        n.checked_div(&d).expect("substitution hits a pole")
    }

    pub fn remap(&self, nvars: usize, map: &[usize]) -> RatFunc {
        Self::normalize(self.num.remap(nvars, map), self.den.remap(nvars, map))
    }

    pub fn to_text(&self, names: &[String]) -> String {
        let num = self.num.to_text(names);
        if self.den.is_one() {
            return num;
        }
        let num = if self.num.nterms() > 1 { format!("({})", num) } else { num };
        let den = self.den.to_text(names);
        let simple_den = self.den.nterms() == 1
            && self.den.leading_coefficient().is_one()
            && self.den.leading_monomial().map_or(false, |m| m.exponents().iter().filter(|&&e| e > 0).count() == 1);
        if simple_den {
            format!("{}/{}", num, den)
        } else {
            format!("{}/({})", num, den)
        }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num + &rhs.num);
        }
        if self.den.is_one() {
            return RatFunc { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() };
        }
        if rhs.den.is_one() {
            return RatFunc { num: &self.num + &(&rhs.num * &self.den), den: self.den.clone() };
        }
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::fix_den(num, &self.den * &rhs.den);
        }
        let a1 = div(&self.den, &g);
        let b1 = div(&rhs.den, &g);
        let num = &(&self.num * &b1) + &(&rhs.num * &a1);
        if num.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        let h = gcd(&num, &g);
        let (num, g) = if h.is_one() { (num, g) } else { (div(&num, &h), div(&g, &h)) };
        RatFunc::fix_den(num, &(&a1 * &b1) * &g)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let (n1, d2) = if g1.is_one() { (self.num.clone(), rhs.den.clone()) } else { (div(&self.num, &g1), div(&rhs.den, &g1)) };
        let (n2, d1) = if g2.is_one() { (rhs.num.clone(), self.den.clone()) } else { (div(&rhs.num, &g2), div(&self.den, &g2)) };
        RatFunc::fix_den(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

/// `normalize_ratfunc`: canonical representative of `num / den`.
pub fn normalize_ratfunc(num: MPoly, den: MPoly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MPoly {
        MPoly::var(i, 2)
    }

    #[test]
    fn normalization_examples() {
        let two_x = x(0).scale(&Q::from_integer(2.into()));
        let four_x2 = (&x(0) * &x(0)).scale(&Q::from_integer(4.into()));
        let f = RatFunc::new(two_x, four_x2).unwrap();
        assert_eq!(f.num(), &MPoly::constant(Q::new(1.into(), 2.into()), 2));
        assert_eq!(f.den(), &x(0));

        let g = RatFunc::new(&(&x(0) * &x(0)) - &(&x(1) * &x(1)), &x(0) - &x(1)).unwrap();
        assert_eq!(g, RatFunc::from_poly(&x(0) + &x(1)));

        let z = RatFunc::new(MPoly::zero(2), x(0)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.den(), &MPoly::one(2));
        assert_eq!(RatFunc::new(x(0), MPoly::zero(2)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn field_operations() {
        let a = RatFunc::new(MPoly::one(2), x(0)).unwrap();
        let b = RatFunc::new(MPoly::one(2), &x(0) + &MPoly::one(2)).unwrap();
        // 1/x - 1/(x+1) = 1/(x(x+1))
        let d = &a - &b;
        assert_eq!(d, RatFunc::new(MPoly::one(2), &x(0) * &(&x(0) + &MPoly::one(2))).unwrap());
        assert_eq!(&(&d * &a.inv().unwrap()) + &b, &b + &b.clone());
        let sq = a.derivative(0);
        assert_eq!(sq, RatFunc::new(MPoly::from_int(-1, 2), &x(0) * &x(0)).unwrap());
    }

    #[test]
    fn printing() {
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let f = RatFunc::new(&x(0) + &MPoly::one(2), &x(0) * &x(1)).unwrap();
        assert_eq!(f.to_text(&names), "(x+1)/(x*y)");
        let g = RatFunc::new(MPoly::from_int(-1, 2), x(1)).unwrap();
        assert_eq!(g.to_text(&names), "-1/y");
    }
}

macro_rules! mixed_ops_RatFunc {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    )*};
}
mixed_ops_RatFunc!(Add add, Sub sub, Mul mul);
