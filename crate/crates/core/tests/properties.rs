//! Property tests. Proptest drives seeds; the structured inputs come from
//! the library's seeded generator so that closedness holds by construction.

use proptest::prelude::*;

use formint::cli::parse_form;
use formint::forms::DiffForm;
use formint::gd::{groebner_basis, jacobian, normal_form};
use formint::integrate::univar::{differentiate, hermite_ratfunc, integrate_univariate, log_part};
use formint::poly::{gcd, partial_fractions, resultant, MPoly, RatFunc, Q};
use formint::random::Gen;
use formint::telescoping::OreOp;
use formint::Vars;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn vars(k: usize) -> Vec<usize> {
    (0..k).collect()
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn gcd_contains_planted_factor(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let n = 3;
        let v = vars(n);
        let f = g.factor(n, &v);
        let a = &g.poly(n, &v, 2, 3) * &f;
        let b = &g.poly(n, &v, 2, 3) * &f;
        prop_assume!(!a.is_zero() && !b.is_zero());
        let h = gcd(&a, &b);
        prop_assert!(h.div_exact(&f).is_some());
        prop_assert!(a.div_exact(&h).is_some() && b.div_exact(&h).is_some());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let n = 2;
        let v = vars(n);
        let a = g.factor(n, &v);
        let b = g.factor(n, &v);
        prop_assume!(a.degree(0) > 0 && b.degree(0) > 0);
        let shared = g.below(2) == 0;
        let (a, b) = if shared { (&a * &b, &b * &g.factor(n, &v)) } else { (a, b) };
        prop_assume!(b.degree(0) > 0);
        let r = resultant(&a, &b, 0).unwrap();
        prop_assert_eq!(r.is_zero(), gcd(&a, &b).degree(0) > 0);
    }

    #[test]
    fn partial_fractions_recombine(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let n = 1 + g.below(3);
        let v = vars(n);
        let f = g.ratfunc(n, &v, 3);
        let pf = partial_fractions(&f, 0).unwrap();
        prop_assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn univariate_round_trip(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        // x, _c
        let n = 2;
        let x = [0usize];
        let num = g.poly(n, &x, 4, 3);
        let mut den = g.factor(n, &x);
        for _ in 0..g.below(3) {
            den = &den * &g.factor(n, &x);
        }
        let f = RatFunc::new(num, den).unwrap();
        let p = integrate_univariate(&f, 0).unwrap();
        prop_assert_eq!(differentiate(&p, 0).unwrap(), f.clone());
        let (_, h) = hermite_ratfunc(&f, 0).unwrap();
        prop_assert_eq!(gcd(h.den(), &h.den().derivative(0)).degree(0), 0);
    }

    #[test]
    fn log_part_detects_nonzero_residues(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        // x, _c; distinct shifts give pairwise coprime u_i
        let n = 2;
        let x = MPoly::var(0, n);
        let mut h = RatFunc::zero(n);
        let mut any = false;
        for i in 0..3i64 {
            let u = &x + &MPoly::from_int(i + 1, n);
            let c = if g.below(2) == 0 { any = true; g.rational() } else { Q::from_integer(0.into()) };
            let du = RatFunc::new(u.derivative(0), u).unwrap();
            h = &h + &du.scale(&c);
        }
        let logs = log_part(&h, 0).unwrap();
        prop_assert_eq!(!logs.is_empty(), any);
    }

    #[test]
    fn d_squared_is_zero(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let m = 1 + g.below(4);
        let p = g.below(m);
        let w = g.form(p, m, m + 1, 4);
        prop_assert!(w.d().d().is_zero());
    }

    #[test]
    fn wedge_laws(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let m = 3;
        let n = m + 1;
        let (pa, pb, pc) = (g.below(2), g.below(2), g.below(2));
        let a = g.form(pa, m, n, 2);
        let b = g.form(pb, m, n, 2);
        let b2 = g.form(pb, m, n, 2);
        let c = g.form(pc, m, n, 2);
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        prop_assert_eq!(a.wedge(&(&b + &b2)), &a.wedge(&b) + &a.wedge(&b2));
        let ba = b.wedge(&a);
        let swapped = if (pa * pb) % 2 == 1 { -&ba } else { ba };
        prop_assert_eq!(a.wedge(&b), swapped);
        // d is a graded derivation
        let lhs = a.wedge(&b).d();
        let rhs = &a.d().wedge(&b) + &if pa % 2 == 1 { -&a.wedge(&b.d()) } else { a.wedge(&b.d()) };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn top_variable_identities(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let m = 2 + g.below(2);
        let w = if g.below(2) == 0 { g.closed_one_form(m, m + 1, None) } else { g.closed_p_form(2, m, m + 1) };
        let (rest, mu) = w.decompose_top();
        let upper = mu.wedge(&DiffForm::term(RatFunc::one(m + 1), &[m - 1], m));
        prop_assert_eq!(&rest + &upper, w.clone());
        prop_assert!(rest.d_prefix(m - 2).unwrap().is_zero());
        prop_assert!((&rest.d_single(m - 1).unwrap() + &upper.d_prefix(m - 2).unwrap()).is_zero());
        // d(f dx_m) = d_(m-1)(f) dx_m
        let f = DiffForm::function(g.ratfunc(m + 1, &vars(m), 2), m);
        let top = DiffForm::term(RatFunc::one(m + 1), &[m - 1], m);
        prop_assert_eq!(f.wedge(&top).d(), f.d_prefix(m - 2).unwrap().wedge(&top));
    }

    #[test]
    fn ore_laws(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        // x, y, t, _c
        let (m, n, t) = (2, 4, 2);
        let op = |g: &mut Gen| {
            let k = 1 + g.below(3);
            let coeffs = (0..k).map(|_| RatFunc::from_poly(g.poly(n, &[t], 2, 2))).collect();
            OreOp::new(coeffs, t, n)
        };
        let a = op(&mut g);
        let b = op(&mut g);
        let f = g.ratfunc(n, &[0, 1, t], 2);
        prop_assert_eq!(a.mul(&b).apply(&f), a.apply(&b.apply(&f)));
        let w = g.form(1, m, n, 2);
        prop_assert_eq!(a.apply_form(&w.d()), a.apply_form(&w).d());
    }

    #[test]
    fn euler_identity(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let k = 2 + g.below(3);
        let deg = 1 + g.below(4) as u32;
        let q = g.homogeneous(k, deg, 4);
        prop_assume!(!q.is_zero());
        let mut lhs = MPoly::zero(k);
        for (i, qi) in jacobian(&q).iter().enumerate() {
            lhs = &lhs + &(&MPoly::var(i, k) * qi);
        }
        prop_assert_eq!(lhs, q.scale(&Q::from_integer(deg.into())));
    }

    #[test]
    fn normal_forms_are_canonical(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let k = 3;
        let q = g.diagonal_quartic(k);
        let basis = groebner_basis(&jacobian(&q));
        let p = g.homogeneous(k, 4, 4);
        let (r, quo) = normal_form(&p, &basis);
        prop_assert_eq!(normal_form(&r, &basis).0, r.clone());
        let mut back = r.clone();
        for (qi, gi) in quo.iter().zip(basis.originals()) {
            back = &back + &(qi * gi);
        }
        prop_assert_eq!(back, p.clone());
        // adding an ideal element does not change the normal form
        let shifted = &p + &(&g.homogeneous(k, 1, 2) * &basis.originals()[0]);
        prop_assert_eq!(normal_form(&shifted, &basis).0, r);
    }

    #[test]
    fn parse_print_round_trip(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let v = Vars::with_param(&["x", "y", "z"]);
        let p = g.below(4);
        let w = g.form(p, 3, v.nvars(), 3);
        let text = w.to_text(v.names());
        prop_assert_eq!(parse_form(&text, &v).unwrap(), w);
    }
}
