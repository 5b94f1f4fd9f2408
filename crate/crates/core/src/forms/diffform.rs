use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::RatFunc;

/// Strictly increasing tuple of form-variable indices (0-based).
pub type Index = Vec<usize>;

/// A `p`-form `sum f_I dx_I` over the form variables `0..nforms`.
///
/// Coefficients live in the full session ring (`nvars` variables, which may
/// include a parameter and the root variable); only the first `nforms`
/// variables carry differentials. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiffForm {
    degree: usize,
    nforms: usize,
    nvars: usize,
    coeffs: BTreeMap<Index, RatFunc>,
}

/// Sign of the permutation sorting `idx`, or `None` on a repeated index.
fn sort_sign(idx: &[usize]) -> Option<(Index, bool)> {
    let mut v = idx.to_vec();
    let mut neg = false;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, neg))
}

impl DiffForm {
    pub fn zero(degree: usize, nforms: usize, nvars: usize) -> Self {
        DiffForm { degree, nforms, nvars, coeffs: BTreeMap::new() }
    }

    /// The 0-form `f`.
    pub fn function(f: RatFunc, nforms: usize) -> Self {
        Self::term(f, &[], nforms)
    }

    /// `f dx_{i1} ^ ... ^ dx_{ip}` for indices in any order.
    pub fn term(f: RatFunc, idx: &[usize], nforms: usize) -> Self {
        let mut w = Self::zero(idx.len(), nforms, f.nvars());
        assert!(idx.iter().all(|&i| i < nforms), "differential index out of range");
        if let Some((sorted, neg)) = sort_sign(idx) {
            w.insert(sorted, if neg { -&f } else { f });
        }
        w
    }

    /// `f_0 dx_0 + ... + f_{m-1} dx_{m-1}`.
    pub fn one_form(coeffs: Vec<RatFunc>) -> Self {
        let m = coeffs.len();
        let n = coeffs.first().map_or(0, RatFunc::nvars);
        let mut w = Self::zero(1, m, n);
        for (i, c) in coeffs.into_iter().enumerate() {
            w.insert(vec![i], c);
        }
        w
    }

    /// `f dx_0 ^ ... ^ dx_{m-1}`.
    pub fn top(f: RatFunc, nforms: usize) -> Self {
        let idx: Vec<usize> = (0..nforms).collect();
        Self::term(f, &idx, nforms)
    }

    pub fn from_terms<I: IntoIterator<Item = (Index, RatFunc)>>(degree: usize, nforms: usize, nvars: usize, terms: I) -> Self {
        let mut w = Self::zero(degree, nforms, nvars);
        for (idx, c) in terms {
            assert_eq!(idx.len(), degree);
            w = &w + &Self::term(c, &idx, nforms);
        }
        w
    }

    fn insert(&mut self, idx: Index, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&idx) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.coeffs.remove(&idx);
                } else {
                    *old = s;
                }
            }
            None => {
                self.coeffs.insert(idx, c);
            }
        }
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> RatFunc {
        self.coeffs.get(idx).cloned().unwrap_or_else(|| RatFunc::zero(self.nvars))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Index, &RatFunc)> {
        self.coeffs.iter()
    }

    /// Coefficients `f_0..f_{m-1}` of a 1-form.
    pub fn one_form_coeffs(&self) -> Vec<RatFunc> {
        assert_eq!(self.degree, 1);
        (0..self.nforms).map(|i| self.coeff(&[i])).collect()
    }

    pub fn scale(&self, f: &RatFunc) -> DiffForm {
        self.map_coeffs(|c| c * f)
    }

    /// Applies `g` to every coefficient.
    pub fn map_coeffs<G: Fn(&RatFunc) -> RatFunc>(&self, g: G) -> DiffForm {
        let mut w = Self::zero(self.degree, self.nforms, self.nvars);
        for (idx, c) in &self.coeffs {
            w.insert(idx.clone(), g(c));
        }
        w
    }

    pub fn wedge(&self, other: &DiffForm) -> DiffForm {
        assert_eq!(self.nforms, other.nforms);
        let mut w = Self::zero(self.degree + other.degree, self.nforms, self.nvars);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let mut cat = i.clone();
                cat.extend_from_slice(j);
                if let Some((idx, neg)) = sort_sign(&cat) {
                    let p = a * b;
                    w.insert(idx, if neg { -&p } else { p });
                }
            }
        }
        w
    }

    /// `sum over v in vars of d_v(f_I) dx_v ^ dx_I`.
    fn d_over<I: Iterator<Item = usize> + Clone>(&self, vars: I) -> DiffForm {
        let mut w = Self::zero(self.degree + 1, self.nforms, self.nvars);
        for (idx, c) in &self.coeffs {
            for v in vars.clone() {
                if idx.contains(&v) {
                    continue;
                }
                let dc = c.derivative(v);
                if dc.is_zero() {
                    continue;
                }
                let pos = idx.iter().filter(|&&i| i < v).count();
                let mut new = idx.clone();
                new.insert(pos, v);
                w.insert(new, if pos % 2 == 1 { -&dc } else { dc });
            }
        }
        w
    }

    /// Exterior derivative.
    pub fn d(&self) -> DiffForm {
        self.d_over(0..self.nforms)
    }

    /// `d^s`: the part of `d` differentiating in variable `s` only.
    pub fn d_single(&self, s: usize) -> Result<DiffForm> {
        if s >= self.nforms {
            return Err(Error::IndexOutOfRange);
        }
        Ok(self.d_over(s..s + 1))
    }

    /// `d_s = d^0 + ... + d^s`.
    pub fn d_prefix(&self, s: usize) -> Result<DiffForm> {
        if s >= self.nforms {
            return Err(Error::IndexOutOfRange);
        }
        Ok(self.d_over(0..s + 1))
    }

    /// One nonzero coefficient of `d(self)`, if any.
    pub fn closedness_witness(&self) -> Option<(Index, RatFunc)> {
        self.d().coeffs.into_iter().next()
    }

    pub fn is_closed(&self) -> bool {
        self.closedness_witness().is_none()
    }

    /// `NotClosed` carrying the witness, rendered with `names`.
    pub fn ensure_closed(&self, names: &[String]) -> Result<()> {
        match self.closedness_witness() {
            None => Ok(()),
            Some((idx, c)) => Err(Error::NotClosed { basis: basis_text(&idx, names), coefficient: c.to_text(names) }),
        }
    }

    /// Splits `self = rest + mu ^ dx_{m-1}` with `rest` and `mu` free of `dx_{m-1}`.
    pub fn decompose_top(&self) -> (DiffForm, DiffForm) {
        let top = self.nforms - 1;
        let mut rest = Self::zero(self.degree, self.nforms, self.nvars);
        let mut mu = Self::zero(self.degree.saturating_sub(1), self.nforms, self.nvars);
        for (idx, c) in &self.coeffs {
            if idx.last() == Some(&top) {
                mu.insert(idx[..idx.len() - 1].to_vec(), c.clone());
            } else {
                rest.insert(idx.clone(), c.clone());
            }
        }
        (rest, mu)
    }

    /// Coefficients `A_I` writing the `dx_s` part of `self` as `dx_s ^ sum A_I dx_I`.
    pub fn leading_coefficients(&self, s: usize) -> BTreeMap<Index, RatFunc> {
        let mut out = BTreeMap::new();
        for (idx, c) in &self.coeffs {
            if let Some(pos) = idx.iter().position(|&i| i == s) {
                let mut rest = idx.clone();
                rest.remove(pos);
                out.insert(rest, if pos % 2 == 1 { -c } else { c.clone() });
            }
        }
        out
    }

    /// True when no coefficient uses `v` and no basis element contains `dx_v`.
    pub fn is_free_of(&self, v: usize) -> bool {
        self.coeffs.iter().all(|(idx, c)| !idx.contains(&v) && !c.uses_var(v))
    }

    /// Terms whose basis element contains `dx_v`.
    pub fn part_with(&self, v: usize) -> DiffForm {
        let mut w = Self::zero(self.degree, self.nforms, self.nvars);
        for (idx, c) in &self.coeffs {
            if idx.contains(&v) {
                w.insert(idx.clone(), c.clone());
            }
        }
        w
    }

    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (idx, c) in &self.coeffs {
            let mut cs = c.to_text(names);
            if self.degree == 0 {
                parts.push(cs);
                continue;
            }
            if c.is_one() {
                parts.push(basis_text(idx, names));
                continue;
            }
            if (-c).is_one() {
                parts.push(format!("-{}", basis_text(idx, names)));
                continue;
            }
            if c.den().is_one() && c.num().nterms() > 1 {
                cs = format!("({})", cs);
            }
            parts.push(format!("{}*{}", cs, basis_text(idx, names)));
        }
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

/// `d(x,y)`-style rendering of a basis element.
pub fn basis_text(idx: &[usize], names: &[String]) -> String {
    if idx.is_empty() {
        return "1".to_string();
    }
    let vs: Vec<&str> = idx.iter().map(|&i| names[i].as_str()).collect();
    format!("d({})", vs.join(","))
}

impl Add for &DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        if self.is_zero() && rhs.degree != self.degree {
            return rhs.clone();
        }
        if rhs.is_zero() && rhs.degree != self.degree {
            return self.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut w = self.clone();
        for (idx, c) in &rhs.coeffs {
            w.insert(idx.clone(), c.clone());
        }
        w
    }
}

impl Sub for &DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        self + &(-rhs)
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        self.map_coeffs(|c| -c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MPoly;

    const N: usize = 3;

    fn v(i: usize) -> RatFunc {
        RatFunc::var(i, N)
    }

    fn one() -> RatFunc {
        RatFunc::one(N)
    }

    #[test]
    fn wedge_signs() {
        let dx = DiffForm::term(one(), &[0], N);
        let dy = DiffForm::term(one(), &[1], N);
        assert_eq!(dx.wedge(&dy), -&dy.wedge(&dx));
        assert!(dx.wedge(&dx).is_zero());
        let f = DiffForm::term(v(1), &[0], N);
        let g = DiffForm::term(v(2), &[1], N);
        assert_eq!(f.wedge(&g), DiffForm::term(&v(1) * &v(2), &[0, 1], N));
        assert_eq!(DiffForm::term(one(), &[1, 0], N), -&DiffForm::term(one(), &[0, 1], N));
    }

    #[test]
    fn derivative_examples() {
        let xy = DiffForm::function(&v(0) * &v(1), N);
        assert_eq!(xy.d(), DiffForm::one_form(vec![v(1), v(0), RatFunc::zero(N)]));
        assert!(xy.d().d().is_zero());
        assert_eq!(xy.d_prefix(N - 1).unwrap(), xy.d());
        assert_eq!(xy.d_single(3), Err(Error::IndexOutOfRange));
    }

    #[test]
    fn closedness() {
        let w = DiffForm::one_form(vec![v(1), RatFunc::zero(N), RatFunc::zero(N)]);
        let (idx, c) = w.closedness_witness().unwrap();
        assert_eq!(idx, vec![0, 1]);
        assert_eq!(c, -&one());
        assert!(DiffForm::one_form(vec![v(1), v(0), RatFunc::zero(N)]).is_closed());
    }

    #[test]
    fn top_split_and_leading_coefficients() {
        let m = 2;
        let f = RatFunc::new(MPoly::one(N), MPoly::var(0, N)).unwrap();
        let w = DiffForm::term(f.clone(), &[0, 1], m);
        let (rest, mu) = w.decompose_top();
        assert!(rest.is_zero());
        assert_eq!(mu, DiffForm::term(f.clone(), &[0], m));
        let dy = DiffForm::term(one(), &[1], m);
        assert_eq!(&rest + &mu.wedge(&dy), w);
        // dx^dy = dy ^ (-dx)
        let a = w.leading_coefficients(1);
        assert_eq!(a[&vec![0]], -&f);
    }

    #[test]
    fn text() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let w = DiffForm::from_terms(2, N, N, vec![(vec![1, 0], one()), (vec![0, 2], &v(0) + &one())]);
        assert_eq!(w.to_text(&names), "-d(x,y) + (x+1)*d(x,z)");
    }
}
