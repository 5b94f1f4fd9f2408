//! Seeded generators for self-tests: random polynomials, rational
//! functions, forms, and closed forms with known primitives.
//!
//! The seed comes from `FORMINT_SEED` when set, so failing suites replay.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::forms::DiffForm;
use crate::poly::{MPoly, Monomial, RatFunc, Q};

pub const SEED_ENV: &str = "FORMINT_SEED";
pub const DEFAULT_SEED: u64 = 0x5eed_f0a7;

/// `FORMINT_SEED` if set and numeric, otherwise [`DEFAULT_SEED`].
pub fn env_seed() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn from_env() -> Self {
        Self::new(env_seed())
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Nonzero integer in `-k..=k`.
    pub fn nonzero(&mut self, k: i64) -> i64 {
        loop {
            let c = self.rng.gen_range(-k..=k);
            if c != 0 {
                return c;
            }
        }
    }

    /// Nonzero rational with small numerator and denominator.
    pub fn rational(&mut self) -> Q {
        Q::new(self.nonzero(5).into(), self.rng.gen_range(1..=3i64).into())
    }

    /// Random polynomial in `vars` with total degree at most `deg`.
    pub fn poly(&mut self, nvars: usize, vars: &[usize], deg: u32, terms: usize) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for _ in 0..terms {
            let mut e = vec![0u32; nvars];
            let d = self.rng.gen_range(0..=deg);
            for _ in 0..d {
                if let Some(&v) = vars.choose(&mut self.rng) {
                    e[v] += 1;
                }
            }
            p = &p + &MPoly::term(Monomial::from_exponents(e), Q::from_integer(self.nonzero(4).into()));
        }
        p
    }

    /// Polynomial of degree 1 or 2 in some of `vars`, nonconstant.
    pub fn factor(&mut self, nvars: usize, vars: &[usize]) -> MPoly {
        loop {
            let k = 1 + self.below(vars.len().min(2));
            let sub: Vec<usize> = vars.choose_multiple(&mut self.rng, k).copied().collect();
            let deg = 1 + self.below(2) as u32;
            let p = &self.poly(nvars, &sub, deg, 2) + &MPoly::from_int(self.nonzero(3), nvars);
            if !p.is_constant() {
                return p;
            }
        }
    }

    /// `a / b` with `b` a product of one or two small factors.
    pub fn ratfunc(&mut self, nvars: usize, vars: &[usize], deg: u32) -> RatFunc {
        let num = self.poly(nvars, vars, deg, 3);
        let mut den = self.factor(nvars, vars);
        if self.below(2) == 0 {
            den = &den * &self.factor(nvars, vars);
        }
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    /// Random (usually not closed) form of degree `p`.
    pub fn form(&mut self, p: usize, m: usize, nvars: usize, deg: u32) -> DiffForm {
        let vars: Vec<usize> = (0..m).collect();
        let mut w = DiffForm::zero(p, m, nvars);
        for _ in 0..2 {
            let mut idx: Vec<usize> = vars.choose_multiple(&mut self.rng, p).copied().collect();
            idx.sort_unstable();
            let c = if self.below(2) == 0 { RatFunc::from_poly(self.poly(nvars, &vars, deg, 3)) } else { self.ratfunc(nvars, &vars, deg.min(2)) };
            w = &w + &DiffForm::term(c, &idx, m);
        }
        w
    }

    /// `d(log u)` as a 1-form.
    pub fn dlog(u: &MPoly, m: usize) -> DiffForm {
        let f = RatFunc::from_poly(u.clone());
        DiffForm::one_form((0..m).map(|i| f.derivative(i).checked_div(&f).expect("u is nonzero")).collect())
    }

    /// `d(g) + sum_j c_j d(log b_j)` with constant `c_j`; when `tvar` is set,
    /// `g` and the `b_j` may involve the parameter and the `c_j` are
    /// rational in it.
    pub fn closed_one_form(&mut self, m: usize, nvars: usize, tvar: Option<usize>) -> DiffForm {
        let forms: Vec<usize> = (0..m).collect();
        let mut with_t = forms.clone();
        with_t.extend(tvar);
        let g = self.ratfunc(nvars, &with_t, 2);
        let mut w = DiffForm::function(g, m).d();
        for _ in 0..1 + self.below(2) {
            let b = self.factor(nvars, &forms);
            let b = match tvar {
                Some(t) if self.below(2) == 0 => &b + &MPoly::var(t, nvars),
                _ => b,
            };
            let c = match tvar {
                Some(t) if self.below(2) == 0 => &RatFunc::var(t, nvars) + &RatFunc::constant(self.rational(), nvars),
                _ => RatFunc::constant(self.rational(), nvars),
            };
            w = &w + &Self::dlog(&b, m).scale(&c);
        }
        w
    }

    /// Closed `p`-form: `d` of a random `(p-1)`-form plus a wedge of
    /// logarithmic differentials of univariate factors. The `(p-1)`-form has
    /// a single small factor in its denominator.
    pub fn closed_p_form(&mut self, p: usize, m: usize, nvars: usize) -> DiffForm {
        let forms: Vec<usize> = (0..m).collect();
        let mut eta = DiffForm::zero(p - 1, m, nvars);
        let mut idx: Vec<usize> = forms.choose_multiple(&mut self.rng, p - 1).copied().collect();
        idx.sort_unstable();
        let c = RatFunc::new(self.poly(nvars, &forms, 2, 3), self.factor(nvars, &forms)).expect("nonzero factor");
        eta = &eta + &DiffForm::term(c, &idx, m);
        let mut w = eta.d();
        let picks: Vec<usize> = forms.choose_multiple(&mut self.rng, p).copied().collect();
        let mut log_part = DiffForm::function(RatFunc::constant(self.rational(), nvars), m);
        for &v in &picks {
            let u = &MPoly::var(v, nvars) + &MPoly::from_int(self.nonzero(3), nvars);
            log_part = log_part.wedge(&Self::dlog(&u, m));
        }
        w = &w + &log_part;
        w
    }

    /// Diagonal quartic `sum c_i xi_i^4` in `k` homogeneous variables.
    pub fn diagonal_quartic(&mut self, k: usize) -> MPoly {
        (0..k).fold(MPoly::zero(k), |acc, i| &acc + &MPoly::var(i, k).pow(4).scale(&Q::from_integer(self.rng.gen_range(1..=4i64).into())))
    }

    /// Homogeneous polynomial of degree `deg` in `k` variables (possibly zero).
    pub fn homogeneous(&mut self, k: usize, deg: u32, terms: usize) -> MPoly {
        let mut p = MPoly::zero(k);
        for _ in 0..terms {
            let mut e = vec![0u32; k];
            for _ in 0..deg {
                e[self.below(k)] += 1;
            }
            p = &p + &MPoly::term(Monomial::from_exponents(e), Q::from_integer(self.nonzero(3).into()));
        }
        p
    }
}
