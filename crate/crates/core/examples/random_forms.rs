//! Seeded random closed forms (set FORMINT_SEED to replay) pushed through
//! the integrators.

use formint::integrate::oneform::verify_1form_primitive;
use formint::integrate::{expand_primitive_derivative, integrate_closed_1form, integrate_closed_pform};
use formint::random::{env_seed, Gen};
use formint::Vars;

fn main() {
    let seed = env_seed();
    let mut g = Gen::new(seed);
    println!("seed {seed}");

    let v = Vars::with_param(&["x", "y"]);
    let w = g.closed_one_form(2, v.nvars(), v.param());
    let p = integrate_closed_1form(&w).unwrap();
    println!("w   = {}", w.to_text(v.names()));
    println!("F   = {}", p.to_text(v.names()));
    println!("dF == w: {}", verify_1form_primitive(&w, &p).unwrap());

    let v = Vars::new(&["x", "y", "z"], None);
    let w = g.closed_p_form(2, 3, v.nvars());
    let psi = integrate_closed_pform(&w).unwrap();
    println!("w   = {}", w.to_text(v.names()));
    println!("psi = {}", psi.to_text(v.names()));
    println!("d(psi) == w: {}", expand_primitive_derivative(&psi).unwrap() == w);
}
