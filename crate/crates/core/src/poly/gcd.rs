//! Greatest common divisors, pseudo-division and subresultant sequences.
//!
//! The gcd recurses on variables: contents are taken with respect to a main
//! variable, and the primitive parts go through a subresultant polynomial
//! remainder sequence. Everything is exact over the rationals.

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::mpoly::MPoly;
use super::Q;
use crate::error::{Error, Result};

/// Canonical gcd (primitive integer coefficients, positive leading coefficient).
///
/// `gcd(0, 0)` is reported as [`Error::BothZero`].
pub fn gcd_checked(a: &MPoly, b: &MPoly) -> Result<MPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    Ok(gcd(a, b))
}

/// Canonical gcd; `gcd(0, 0)` is the zero polynomial.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    let n = a.nvars();
    if a.is_zero() {
        return b.canonical();
    }
    if b.is_zero() {
        return a.canonical();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(n);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    if a.is_monomial() || b.is_monomial() {
        return MPoly::term(mg, Q::one());
    }
    let a1 = if ma.is_one() { a.clone() } else { a.div_monomial(&ma) };
    let b1 = if mb.is_one() { b.clone() } else { b.div_monomial(&mb) };
    let g = gcd_no_monomial(&a1, &b1);
    if mg.is_one() {
        g
    } else {
        g.mul_monomial(&mg, &Q::one())
    }
}

fn gcd_no_monomial(a: &MPoly, b: &MPoly) -> MPoly {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return MPoly::one(n);
    }
    if a == b {
        return a.canonical();
    }
    // cheap divisibility shortcut
    let (small, big) = if a.nterms() <= b.nterms() { (a, b) } else { (b, a) };
    if small.total_degree() <= big.total_degree() && big.div_exact(small).is_some() {
        return small.canonical();
    }
    let va = a.vars_used();
    let vb = b.vars_used();
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return gcd(&content_in(a, v), b);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return gcd(a, &content_in(b, v));
    }
    // a gcd free of some variable divides every coefficient in it
    for &v in &va {
        if gcd_free_of(a, b, v) {
            return gcd(&content_in(a, v), &content_in(b, v));
        }
    }
    // main variable: smallest degree keeps the remainder sequence short
    let v = *va
        .iter()
        .min_by_key(|&&v| (a.degree(v).max(b.degree(v)), std::cmp::Reverse(v)))
        .unwrap();
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let gc = gcd(&ca, &cb);
    let (pa, pb) = if pa.degree(v) >= pb.degree(v) { (pa, pb) } else { (pb, pa) };
    let last = last_prs_element(&pa, &pb, v);
    let g = if last.degree(v) == 0 {
        MPoly::one(n)
    } else {
        primitive_part_in(&last, v)
    };
    (&gc * &g).canonical()
}

/// Cheap certificate that `gcd(a, b)` does not involve `v`: specialize the
/// other variables at a point where `lc_v(a)` survives; any common factor of
/// positive degree in `v` would survive as a common factor of the images.
fn gcd_free_of(a: &MPoly, b: &MPoly, v: usize) -> bool {
    let n = a.nvars();
    let mut seed: u64 = 0x9e37_79b9 ^ (v as u64);
    for _ in 0..3 {
        let pt: Vec<Q> = (0..n)
            .map(|_| {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                Q::from_integer(((seed >> 33) % 97 + 2).into())
            })
            .collect();
        let ia = univariate_image(a, v, &pt);
        if ia.len() != a.degree(v) as usize + 1 {
            continue;
        }
        let ib = univariate_image(b, v, &pt);
        return dense_gcd_degree(ia, ib) == 0;
    }
    false
}

fn univariate_image(p: &MPoly, v: usize, pt: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); p.degree(v) as usize + 1];
    for (m, c) in p.terms() {
        let mut val = c.clone();
        for (i, &e) in m.exponents().iter().enumerate() {
            if i != v && e > 0 {
                val *= num_traits::pow(pt[i].clone(), e as usize);
            }
        }
        out[m.exponent(v) as usize] += val;
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Degree of the gcd of two dense univariate polynomials over Q; zero
/// polynomials are empty vectors.
fn dense_gcd_degree(mut a: Vec<Q>, mut b: Vec<Q>) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let f = a.last().unwrap() / &lb;
            let off = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[off + i] -= &f * c;
            }
            a.pop();
            while a.last().is_some_and(|c| c.is_zero()) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Gcd of all coefficients of `p` with respect to `v` (free of `v`, canonical).
pub fn content_in(p: &MPoly, v: usize) -> MPoly {
    let mut coeffs: Vec<MPoly> = p.coeffs_in(v).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| (c.nterms(), c.total_degree()));
    let mut g = MPoly::zero(p.nvars());
    for c in coeffs {
        g = gcd(&g, &c);
        if g.is_constant() {
            return MPoly::one(p.nvars());
        }
    }
    g
}

/// `p` divided by its content with respect to `v`, made canonical.
pub fn primitive_part_in(p: &MPoly, v: usize) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").canonical()
}

pub fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero(a.nvars());
    }
    let g = gcd(a, b);
    (&a.div_exact(&g).expect("gcd divides") * b).canonical()
}

/// Pseudo-remainder: `lc_v(b)^(deg a - deg b + 1) * a = q*b + r` with `deg_v r < deg_v b`.
pub fn pseudo_rem(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    pseudo_divide(a, b, v).1
}

/// Pseudo-division `(q, r)` with respect to `v`.
pub fn pseudo_divide(a: &MPoly, b: &MPoly, v: usize) -> (MPoly, MPoly) {
    let n = a.nvars();
    let db = b.degree(v);
    let da = a.degree(v);
    if a.is_zero() || da < db {
        return (MPoly::zero(n), a.clone());
    }
    let lcb = b.lc_in(v);
    let mut e = da - db + 1;
    let mut r = a.clone();
    let mut q = MPoly::zero(n);
    while !r.is_zero() && r.degree(v) >= db {
        let dr = r.degree(v);
        let mut t = r.lc_in(v);
        t = t.mul_monomial(&Monomial::var(v, n).with_exponent(v, dr - db), &Q::one());
        r = &(&lcb * &r) - &(&t * b);
        q = &(&lcb * &q) + &t;
        e -= 1;
    }
    let f = lcb.pow(e);
    (&q * &f, &r * &f)
}

/// Subresultant polynomial remainder sequence of `a` and `b` with respect to
/// `v`, together with the resultant.
///
/// Requires `deg_v a >= deg_v b > 0`. The returned sequence starts with
/// `a, b` and ends with the last nonzero element.
pub fn subresultant_prs(a: &MPoly, b: &MPoly, v: usize) -> (MPoly, Vec<MPoly>) {
    let n = a.nvars();
    let deg = |p: &MPoly| p.degree(v) as i64;
    assert!(deg(a) >= deg(b) && !b.is_zero());
    let mut rs = vec![a.clone(), b.clone()];
    let mut lcs: Vec<MPoly> = vec![MPoly::zero(n)];
    let mut deltas: Vec<i64> = vec![0, deg(a) - deg(b)];
    let mut betas: Vec<MPoly> = vec![MPoly::zero(n)];
    let sign = if (deltas[1] + 1) % 2 == 0 { 1 } else { -1 };
    betas.push(MPoly::from_int(sign, n));
    let mut gamma = MPoly::from_int(-1, n);
    let mut i = 1;
    while !rs[i].is_zero() {
        let ri = rs[i].lc_in(v);
        lcs.push(ri.clone());
        let prem = pseudo_rem(&rs[i - 1], &rs[i], v);
        let next = prem.div_exact(&betas[i]).expect("subresultant division is exact");
        rs.push(next);
        i += 1;
        let d = deltas[i - 1];
        let neg_r = -&lcs[i - 1];
        gamma = if d >= 1 {
            neg_r.pow(d as u32).div_exact(&gamma.pow((d - 1) as u32)).expect("gamma update is exact")
        } else {
            &neg_r.pow(0) * &gamma
        };
        let di = if rs[i].is_zero() { 0 } else { deg(&rs[i - 1]) - deg(&rs[i]) };
        deltas.push(di);
        betas.push(&neg_r * &gamma.pow(di.max(0) as u32));
    }
    rs.pop();
    let k = i - 1;
    if deg(&rs[k]) > 0 {
        return (MPoly::zero(n), rs);
    }
    if deg(&rs[k - 1]) == 1 {
        let res = rs[k].clone();
        return (res, rs);
    }
    let mut s = 1i64;
    let mut cnum = MPoly::one(n);
    let mut cden = MPoly::one(n);
    for j in 1..k {
        if deg(&rs[j - 1]) % 2 == 1 && deg(&rs[j]) % 2 == 1 {
            s = -s;
        }
        let dj = deg(&rs[j]) as u32;
        let rj = &lcs[j];
        cnum = &cnum * &betas[j].pow(dj);
        cden = &cden * &rj.pow((1 + deltas[j]) as u32 * dj);
        let e = deg(&rs[j - 1]) - deg(&rs[j + 1]);
        cnum = &cnum * &rj.pow(e as u32);
    }
    let num = &(&cnum * &rs[k].pow(deg(&rs[k - 1]) as u32)) * &MPoly::from_int(s, n);
    let res = num.div_exact(&cden).expect("resultant is a polynomial");
    (res, rs)
}

fn last_prs_element(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let (_, seq) = subresultant_prs(a, b, v);
    seq.last().cloned().unwrap()
}

/// Resultant of `p` and `q` with respect to `v`.
pub fn resultant(p: &MPoly, q: &MPoly, v: usize) -> Result<MPoly> {
    let n = p.nvars();
    if p.is_zero() || q.is_zero() {
        return Err(Error::NotPolynomialInVar);
    }
    let dp = p.degree(v);
    let dq = q.degree(v);
    if dp == 0 && dq == 0 {
        return Err(Error::NotPolynomialInVar);
    }
    if dq == 0 {
        return Ok(q.pow(dp));
    }
    if dp == 0 {
        return Ok(p.pow(dq));
    }
    if dp < dq {
        let r = resultant(q, p, v)?;
        return Ok(if (dp * dq) % 2 == 1 { -&r } else { r });
    }
    let _ = n;
    Ok(subresultant_prs(p, q, v).0)
}

/// Subresultant sequence indexed for the Lazard-Rioboo-Trager step: returns
/// the resultant and every PRS element (besides the inputs' first entry).
pub fn subresultants(p: &MPoly, q: &MPoly, v: usize) -> (MPoly, Vec<MPoly>) {
    subresultant_prs(p, q, v)
}

/// Exact division that panics on failure; used where divisibility is an
/// algebraic invariant.
pub(crate) fn div(a: &MPoly, b: &MPoly) -> MPoly {
    a.div_exact(b).expect("exact division")
}
