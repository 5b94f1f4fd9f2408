//! Linear differential operators `sum a_i(t) D^i` in the parameter `t`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::forms::DiffForm;
use crate::poly::{gcd, lcm, MPoly, RatFunc, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreOp {
    tvar: usize,
    nvars: usize,
    coeffs: Vec<RatFunc>,
}

fn binomial(n: usize, k: usize) -> Q {
    let mut b = Q::one();
    for i in 0..k {
        b = b * Q::from_integer((n - i).into()) / Q::from_integer((i + 1).into());
    }
    b
}

impl OreOp {
    /// `coeffs[i]` multiplies `D^i`; trailing zeros are dropped.
    pub fn new(coeffs: Vec<RatFunc>, tvar: usize, nvars: usize) -> Self {
        let mut op = OreOp { tvar, nvars, coeffs };
        op.trim();
        op
    }

    pub fn zero(tvar: usize, nvars: usize) -> Self {
        OreOp { tvar, nvars, coeffs: Vec::new() }
    }

    pub fn one(tvar: usize, nvars: usize) -> Self {
        OreOp::new(vec![RatFunc::one(nvars)], tvar, nvars)
    }

    /// The derivation `D = d/dt`.
    pub fn dt(tvar: usize, nvars: usize) -> Self {
        OreOp::new(vec![RatFunc::zero(nvars), RatFunc::one(nvars)], tvar, nvars)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn tvar(&self) -> usize {
        self.tvar
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order in `D`; the zero operator has order 0.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn scale(&self, f: &RatFunc) -> OreOp {
        OreOp::new(self.coeffs.iter().map(|c| c * f).collect(), self.tvar, self.nvars)
    }

    pub fn add(&self, other: &OreOp) -> OreOp {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = RatFunc::zero(self.nvars);
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        OreOp::new(coeffs, self.tvar, self.nvars)
    }

    /// `self ∘ other`, using `D^i b = sum_k C(i,k) b^(k) D^(i-k)`.
    pub fn mul(&self, other: &OreOp) -> OreOp {
        if self.is_zero() || other.is_zero() {
            return OreOp::zero(self.tvar, self.nvars);
        }
        let mut out = vec![RatFunc::zero(self.nvars); self.order() + other.order() + 1];
        for (j, b) in other.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            // derivatives b, b', b'', ...
            let mut ders = vec![b.clone()];
            for _ in 0..self.order() {
                let next = ders.last().unwrap().derivative(self.tvar);
                ders.push(next);
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, bk) in ders.iter().enumerate().take(i + 1) {
                    if bk.is_zero() {
                        continue;
                    }
                    let term = (a * bk).scale(&binomial(i, k));
                    out[i - k + j] = &out[i - k + j] + &term;
                }
            }
        }
        OreOp::new(out, self.tvar, self.nvars)
    }

    /// `sum a_i * d^i f / dt^i`.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero(self.nvars);
        let mut der = f.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                der = der.derivative(self.tvar);
            }
            if !a.is_zero() {
                acc = &acc + &(a * &der);
            }
        }
        acc
    }

    /// Coefficientwise application to a form.
    pub fn apply_form(&self, w: &DiffForm) -> DiffForm {
        w.map_coeffs(|c| self.apply(c))
    }

    /// Clears denominators and removes the polynomial content in `t`, with a
    /// positive leading coefficient on the top term.
    pub fn normalized(&self) -> OreOp {
        self.normalize_with(true)
    }

    /// Clears denominators and removes only the rational-number content.
    pub fn normalized_rational(&self) -> OreOp {
        self.normalize_with(false)
    }

    /// The factor `lambda` with `self.normalized() = lambda * self` (and
    /// likewise for the rational variant).
    pub fn normalizing_factor(&self, primitive: bool) -> RatFunc {
        if self.is_zero() {
            return RatFunc::one(self.nvars);
        }
        let mut den = MPoly::one(self.nvars);
        for c in &self.coeffs {
            den = lcm(&den, c.den());
        }
        let nums: Vec<MPoly> = self.coeffs.iter().map(|c| (c * &RatFunc::from_poly(den.clone())).num().clone()).collect();
        let content = if primitive {
            let g = nums.iter().fold(MPoly::zero(self.nvars), |g, p| gcd(&g, p));
            let reduced: Vec<MPoly> = nums.iter().map(|p| p.div_exact(&g).expect("gcd divides")).collect();
            g.scale(&rational_content(&reduced))
        } else {
            MPoly::constant(rational_content(&nums), self.nvars)
        };
        let mut factor = RatFunc::new(den, content).expect("nonzero content");
        let lead = (self.coeffs.last().unwrap() * &factor).num().leading_coefficient();
        if lead.is_negative() {
            factor = -&factor;
        }
        factor
    }

    fn normalize_with(&self, primitive: bool) -> OreOp {
        self.scale(&self.normalizing_factor(primitive))
    }

    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let d = match i {
                0 => String::new(),
                1 => "D".to_string(),
                _ => format!("D^{}", i),
            };
            let cs = c.to_text(names);
            let term = if d.is_empty() {
                cs
            } else if c.is_one() {
                d
            } else if cs.contains(['+', '-', '/']) {
                format!("({})*{}", cs, d)
            } else {
                format!("{}*{}", cs, d)
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// Positive rational `q` such that every `p / q` has integer coefficients with
/// overall gcd 1.
fn rational_content(polys: &[MPoly]) -> Q {
    use num_integer::Integer;
    let mut num = num_bigint::BigInt::zero();
    let mut den = num_bigint::BigInt::one();
    for p in polys {
        for (_, c) in p.terms() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
    }
    if num.is_zero() {
        return Q::one();
    }
    Q::new(num, den)
}

impl fmt::Display for OreOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::vars::Vars::generic(self.tvar, self.nvars);
        write!(f, "{}", self.to_text(names.names()))
    }
}
