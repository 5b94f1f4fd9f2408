use num_traits::Zero;

use super::gcd::{content_in, div, gcd};
use super::mpoly::MPoly;
use super::Q;
use crate::error::{Error, Result};

/// Squarefree decomposition with respect to one variable:
/// `p = unit * content * prod(f_i ^ m_i)`.
///
/// `content` collects the factors free of the variable; each `f_i` is
/// canonical, squarefree in the variable and of positive degree in it.
#[derive(Clone, Debug, PartialEq)]
pub struct SqfFactorization {
    pub unit: Q,
    pub content: MPoly,
    pub factors: Vec<(MPoly, u32)>,
}

impl SqfFactorization {
    pub fn expand(&self) -> MPoly {
        let mut p = self.content.scale(&self.unit);
        for (f, m) in &self.factors {
            p = &p * &f.pow(*m);
        }
        p
    }

    /// Product of the factors (the squarefree part in the variable, content excluded).
    pub fn squarefree_part(&self) -> MPoly {
        let n = self.content.nvars();
        self.factors.iter().fold(MPoly::one(n), |acc, (f, _)| &acc * f)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }
}

/// Yun's algorithm with respect to `v`.
pub fn squarefree_factorization(p: &MPoly, v: usize) -> Result<SqfFactorization> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = p.nvars();
    let content = content_in(p, v);
    let pp = div(p, &content);
    let mut factors = Vec::new();
    if pp.degree(v) > 0 {
        let dp = pp.derivative(v);
        let a0 = gcd(&pp, &dp);
        let mut b = div(&pp, &a0);
        let c = div(&dp, &a0);
        let mut d = &c - &b.derivative(v);
        let mut i = 1;
        while b.degree(v) > 0 {
            let a = gcd(&b, &d);
            b = div(&b, &a);
            let c = div(&d, &a);
            d = &c - &b.derivative(v);
            if a.degree(v) > 0 {
                factors.push((a.canonical(), i));
            }
            i += 1;
        }
    }
    let mut rebuilt = content.clone();
    for (f, m) in &factors {
        rebuilt = &rebuilt * &f.pow(*m);
    }
    let unit = p.leading_coefficient() / rebuilt.leading_coefficient();
    debug_assert!(!unit.is_zero());
    let _ = n;
    Ok(SqfFactorization { unit, content, factors })
}

/// Squarefree part of `p` in `v`, with the content in `v` removed.
pub fn squarefree_part(p: &MPoly, v: usize) -> Result<MPoly> {
    Ok(squarefree_factorization(p, v)?.squarefree_part())
}
