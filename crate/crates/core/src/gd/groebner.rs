//! Buchberger's algorithm under grevlex, with every basis element tracked as
//! a combination of the input generators.

use std::collections::BTreeSet;

use crate::poly::{MPoly, Monomial};

/// Reduced Groebner basis together with `gens[k] = sum_j cofactors[k][j] * originals[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GBasis {
    gens: Vec<MPoly>,
    cofactors: Vec<Vec<MPoly>>,
    originals: Vec<MPoly>,
}

impl GBasis {
    pub fn generators(&self) -> &[MPoly] {
        &self.gens
    }

    pub fn cofactors(&self) -> &[Vec<MPoly>] {
        &self.cofactors
    }

    pub fn originals(&self) -> &[MPoly] {
        &self.originals
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant() && !g.is_zero())
    }
}

/// Full division of `p` by `basis`; returns the remainder and one quotient per basis element.
fn divide(p: &MPoly, basis: &[MPoly]) -> (MPoly, Vec<MPoly>) {
    let n = p.nvars();
    let mut quots = vec![MPoly::zero(n); basis.len()];
    let mut rem = MPoly::zero(n);
    let mut work = p.clone();
    while let Some((m, c)) = work.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let hit = basis.iter().enumerate().find_map(|(k, g)| {
            let (lm, lc) = g.leading_term()?;
            m.div(lm).map(|q| (k, q, &c / lc))
        });
        match hit {
            Some((k, qm, qc)) => {
                work = &work - &basis[k].mul_monomial(&qm, &qc);
                quots[k] = &quots[k] + &MPoly::term(qm, qc);
            }
            None => {
                let t = MPoly::term(m, c);
                work = &work - &t;
                rem = &rem + &t;
            }
        }
    }
    (rem, quots)
}

fn combine(quots: &[MPoly], cofs: &[Vec<MPoly>], width: usize, n: usize) -> Vec<MPoly> {
    let mut out = vec![MPoly::zero(n); width];
    for (q, cof) in quots.iter().zip(cofs) {
        if q.is_zero() {
            continue;
        }
        for (o, c) in out.iter_mut().zip(cof) {
            if !c.is_zero() {
                *o = &*o + &(q * c);
            }
        }
    }
    out
}

fn sub_vec(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Reduced Groebner basis of the ideal generated by `gens` (grevlex),
/// using the coprime-leading-monomial and chain criteria.
pub fn groebner_basis(gens: &[MPoly]) -> GBasis {
    assert!(!gens.is_empty(), "empty generator list");
    let n = gens[0].nvars();
    let width = gens.len();
    let mut basis: Vec<MPoly> = Vec::new();
    let mut cofs: Vec<Vec<MPoly>> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut e = vec![MPoly::zero(n); width];
        e[j] = MPoly::one(n);
        basis.push(g.clone());
        cofs.push(e);
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let lcm_of = |b: &[MPoly], i: usize, j: usize| b[i].leading_monomial().unwrap().lcm(b[j].leading_monomial().unwrap());
    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let &(i, j) = pairs.iter().min_by(|a, b| lcm_of(&basis, a.0, a.1).cmp(&lcm_of(&basis, b.0, b.1)).then(a.cmp(b))).unwrap();
        pairs.remove(&(i, j));
        let (lmi, lci) = basis[i].leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let (lmj, lcj) = basis[j].leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        if lmi.is_coprime(&lmj) {
            continue;
        }
        let l = lmi.lcm(&lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let mi = l.div(&lmi).unwrap();
        let mj = l.div(&lmj).unwrap();
        let ci = lci.recip();
        let cj = lcj.recip();
        let s = &basis[i].mul_monomial(&mi, &ci) - &basis[j].mul_monomial(&mj, &cj);
        let ti = MPoly::term(mi, ci);
        let tj = MPoly::term(mj, cj);
        let scof: Vec<MPoly> = cofs[i].iter().zip(&cofs[j]).map(|(a, b)| &(&ti * a) - &(&tj * b)).collect();
        let (r, quots) = divide(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let rcof = sub_vec(&scof, &combine(&quots, &cofs, width, n));
        let k = basis.len();
        basis.push(r);
        cofs.push(rcof);
        for i in 0..k {
            pairs.insert((i, k));
        }
    }
    interreduce(basis, cofs, gens.to_vec())
}

fn interreduce(basis: Vec<MPoly>, cofs: Vec<Vec<MPoly>>, originals: Vec<MPoly>) -> GBasis {
    let n = originals[0].nvars();
    let width = originals.len();
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let lmi = basis[i].leading_monomial().unwrap();
        let redundant = (0..basis.len()).any(|j| {
            let lmj = basis[j].leading_monomial().unwrap();
            j != i && lmj.divides(lmi) && (lmj != lmi || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut gens: Vec<MPoly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut cof: Vec<Vec<MPoly>> = keep.iter().map(|&i| cofs[i].clone()).collect();
    for k in 0..gens.len() {
        let others: Vec<MPoly> = gens.iter().enumerate().map(|(j, g)| if j == k { MPoly::zero(n) } else { g.clone() }).collect();
        let (r, quots) = divide_skipping_zero(&gens[k], &others);
        let rc = sub_vec(&cof[k], &combine(&quots, &cof, width, n));
        let lc = r.leading_coefficient();
        let inv = lc.recip();
        gens[k] = r.scale(&inv);
        cof[k] = rc.iter().map(|c| c.scale(&inv)).collect();
    }
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|&a, &b| gens[a].leading_monomial().cmp(&gens[b].leading_monomial()));
    GBasis {
        gens: order.iter().map(|&i| gens[i].clone()).collect(),
        cofactors: order.iter().map(|&i| cof[i].clone()).collect(),
        originals,
    }
}

fn divide_skipping_zero(p: &MPoly, basis: &[MPoly]) -> (MPoly, Vec<MPoly>) {
    let idx: Vec<usize> = (0..basis.len()).filter(|&i| !basis[i].is_zero()).collect();
    let sub: Vec<MPoly> = idx.iter().map(|&i| basis[i].clone()).collect();
    let (r, q) = divide(p, &sub);
    let mut quots = vec![MPoly::zero(p.nvars()); basis.len()];
    for (k, &i) in idx.iter().enumerate() {
        quots[i] = q[k].clone();
    }
    (r, quots)
}

/// `p = sum_j quotients[j] * originals[j] + remainder`, with no remainder
/// term divisible by a leading monomial of the basis.
pub fn normal_form(p: &MPoly, g: &GBasis) -> (MPoly, Vec<MPoly>) {
    let (r, quots) = divide(p, &g.gens);
    let q = combine(&quots, &g.cofactors, g.originals.len(), p.nvars());
    (r, q)
}

/// Whether every variable has a pure power among the leading monomials.
pub fn has_pure_powers(g: &GBasis, nvars: usize) -> bool {
    if g.is_unit_ideal() {
        return true;
    }
    (0..nvars).all(|v| g.leading_monomials().any(|m| m.pure_power_var() == Some(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Q;

    fn vars(n: usize) -> Vec<MPoly> {
        (0..n).map(|i| MPoly::var(i, n)).collect()
    }

    fn check_cofactors(g: &GBasis) {
        for (gen, cof) in g.generators().iter().zip(g.cofactors()) {
            let mut acc = MPoly::zero(gen.nvars());
            for (c, o) in cof.iter().zip(g.originals()) {
                acc = &acc + &(c * o);
            }
            assert_eq!(&acc, gen);
        }
    }

    #[test]
    fn trivial_basis() {
        let v = vars(2);
        let g = groebner_basis(&[v[0].clone(), v[1].clone()]);
        assert_eq!(g.generators(), &[v[1].clone(), v[0].clone()]);
        check_cofactors(&g);
    }

    #[test]
    fn hand_computed_pair() {
        // S(x^2 - y, xy - 1) = y(x^2 - y) - x(xy - 1) = x - y^2, whose grevlex
        // leading term is y^2; S(xy - 1, y^2 - x) = x^2 - y reduces to 0
        let v = vars(2);
        let (x, y) = (&v[0], &v[1]);
        let one = MPoly::one(2);
        let g = groebner_basis(&[&(x * x) - y, &(x * y) - &one]);
        check_cofactors(&g);
        assert_eq!(g.generators(), &[&(y * y) - x, &(x * y) - &one, &(x * x) - y]);
        let (r, q) = normal_form(&(&(x * x) - y), &g);
        assert!(r.is_zero());
        assert_eq!(&(&q[0] * &(&(x * x) - y)) + &(&q[1] * &(&(x * y) - &one)), &(x * x) - y);
        let (r, _) = normal_form(&x.pow(3), &g);
        assert_eq!(r, one);
    }

    #[test]
    fn fermat_jacobian() {
        let v = vars(4);
        let four = Q::from_integer(4.into());
        let partials: Vec<MPoly> = v.iter().map(|x| x.pow(3).scale(&four)).collect();
        let g = groebner_basis(&partials);
        check_cofactors(&g);
        let cubes: Vec<MPoly> = v.iter().rev().map(|x| x.pow(3)).collect();
        assert_eq!(g.generators(), cubes.as_slice());
        assert!(has_pure_powers(&g, 4));
        let (r, q) = normal_form(&v[0].pow(4), &g);
        assert!(r.is_zero());
        assert_eq!(q[0], v[0].scale(&Q::new(1.into(), 4.into())));
        let (r, _) = normal_form(&MPoly::one(4), &g);
        assert_eq!(r, MPoly::one(4));
    }

    #[test]
    fn remainder_is_idempotent() {
        let v = vars(3);
        let g = groebner_basis(&[&(&v[0] * &v[1]) - &v[2], &(&v[1] * &v[2]) - &v[0]]);
        check_cofactors(&g);
        let p = &(&v[0].pow(3) * &v[1]) + &v[2].pow(2);
        let (r, _) = normal_form(&p, &g);
        assert_eq!(normal_form(&r, &g).0, r);
    }
}
