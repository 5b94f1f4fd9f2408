//! Hermite reduction of a closed 1-form: `w = dg + w'` with `w'` having
//! squarefree denominators.

use formint::cli::parse_form;
use formint::integrate::hermite_one_form;
use formint::Vars;

fn main() {
    let v = Vars::with_param(&["x", "y", "z"]);
    let w = parse_form(
        "(t*x*y*z - 1)/(x^2*y*z) * d(x) + (t*x*y*z - 1)/(x*y^2*z) * d(y) + (t^2*x*y*z + x*y*z - 1)/(x*y*z^2) * d(z)",
        &v,
    )
    .unwrap();
    let r = hermite_one_form(&w).unwrap();
    println!("g        = {}", r.g.to_text(v.names()));
    println!("residual = {}", r.residual.to_text(v.names()));
}
