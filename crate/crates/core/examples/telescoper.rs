//! Minimal telescoper `L(t, D_t)` with `L(w) = d(g)` for a closed 1-form
//! depending on a parameter.

use formint::cli::parse_form;
use formint::telescoping::{ct_one_form, verify_telescoper};
use formint::Vars;

fn main() {
    let v = Vars::with_param(&["x", "y", "z"]);
    let w = parse_form(
        "(t*x*y*z - 1)/(x^2*y*z) * d(x) + (t*x*y*z - 1)/(x*y^2*z) * d(y) + (t^2*x*y*z + x*y*z - 1)/(x*y*z^2) * d(z)",
        &v,
    )
    .unwrap();
    let tvar = v.param().unwrap();
    let t = ct_one_form(&w, tvar).unwrap();
    println!("L = {}", t.operator.to_text(v.names()));
    println!("g = {}", t.certificate.to_text(v.names()));
    println!("verified: {}", verify_telescoper(&w, &t));
}
