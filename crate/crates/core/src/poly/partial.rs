use super::mpoly::MPoly;
use super::ratfunc::RatFunc;
use super::sqf::squarefree_factorization;
use super::upoly::UPoly;
use crate::error::Result;

/// One summand `numerator / denfactor^power` of a partial fraction expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialTerm {
    pub denfactor: MPoly,
    pub power: u32,
    pub numerator: RatFunc,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractions {
    /// Polynomial in the variable (coefficients rational in the others).
    pub polypart: RatFunc,
    pub terms: Vec<PartialTerm>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RatFunc {
        let mut acc = self.polypart.clone();
        for t in &self.terms {
            let d = RatFunc::from_poly(t.denfactor.pow(t.power));
            acc = &acc + &t.numerator.checked_div(&d).expect("nonzero factor");
        }
        acc
    }
}

/// Partial fractions of `f` with respect to `var`, over the squarefree
/// factors of the denominator.
pub fn partial_fractions(f: &RatFunc, var: usize) -> Result<PartialFractions> {
    let n = f.nvars();
    let den = UPoly::from_mpoly(f.den(), var);
    let num = UPoly::from_mpoly(f.num(), var);
    let (q, r) = num.divrem(&den);
    let polypart = q.to_ratfunc();
    let mut terms = Vec::new();
    if r.is_zero() {
        return Ok(PartialFractions { polypart, terms });
    }
    let sqf = squarefree_factorization(f.den(), var)?;
    // r / den = (r / (unit*content)) / prod(D_i^i)
    let scale = RatFunc::from_poly(sqf.content.scale(&sqf.unit)).inv()?;
    let r = r.scale(&scale);
    let powers: Vec<UPoly> = sqf.factors.iter().map(|(d, m)| UPoly::from_mpoly(&d.pow(*m), var)).collect();
    let full = powers.iter().fold(UPoly::constant(RatFunc::one(n), var), |acc, p| acc.mul(p));
    for (k, (dfac, mult)) in sqf.factors.iter().enumerate() {
        let pk = &powers[k];
        let cofactor = full.divrem(pk).0;
        let inv = cofactor.inverse_mod(pk).expect("squarefree factors are coprime");
        let mut a = r.mul(&inv).rem(pk);
        let base = UPoly::from_mpoly(dfac, var);
        let mut j = *mult;
        while j >= 1 && !a.is_zero() {
            let (qq, rr) = a.divrem(&base);
            if !rr.is_zero() {
                terms.push(PartialTerm { denfactor: dfac.clone(), power: j, numerator: rr.to_ratfunc() });
            }
            a = qq;
            j -= 1;
        }
    }
    Ok(PartialFractions { polypart, terms })
}
