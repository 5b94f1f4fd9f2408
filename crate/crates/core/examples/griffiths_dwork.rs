//! Griffiths-Dwork reduction on the Fermat quartic surface in P^3.

use formint::gd::reduce::verify_reconstruction;
use formint::gd::{gd_reduce, is_smooth, ProjForm};
use formint::MPoly;

fn main() {
    let xi: Vec<MPoly> = (0..4).map(|i| MPoly::var(i, 4)).collect();
    let names: Vec<String> = (0..4).map(|i| format!("xi{i}")).collect();
    let q = xi.iter().fold(MPoly::zero(4), |acc, v| &acc + &v.pow(4));
    println!("Q = {} smooth: {}", q.to_text(&names), is_smooth(&q).unwrap());

    for (p, ell) in [(MPoly::one(4), 1), (&xi[0].pow(3) * &xi[1], 2), (xi[0].pow(4), 2), (&xi[0].pow(4) * &xi[1].pow(4), 3)] {
        let w = ProjForm::new(p.clone(), q.clone(), ell, 3).unwrap();
        let r = gd_reduce(&w, false).unwrap();
        let parts: Vec<String> = r.reduction().iter().map(|(rem, k)| format!("({}) Omega/Q^{k}", rem.to_text(&names))).collect();
        println!(
            "({}) Omega/Q^{ell}: exact={} remainder=[{}] reconstructs={}",
            p.to_text(&names),
            r.exact,
            parts.join(" + "),
            verify_reconstruction(&w, &r)
        );
    }
}
