//! Primitive of a closed rational 1-form, with a check that its
//! differential gives the input back.

use formint::cli::parse_form;
use formint::integrate::oneform::verify_1form_primitive;
use formint::integrate::{integrate_closed_1form, is_exact_rational};
use formint::Vars;

fn main() {
    let v = Vars::new(&["x", "y"], None);
    let w = parse_form("(2*x*y + 1/x) * d(x) + (x^2 + 2/(y^2+1)*y) * d(y)", &v).unwrap();
    let p = integrate_closed_1form(&w).unwrap();
    println!("primitive: {}", p.to_text(v.names()));
    for l in &p.logs {
        println!("  log term: {}", l.to_text(v.names()));
    }
    println!("verified:  {}", verify_1form_primitive(&w, &p).unwrap());
    println!("exact:     {}", is_exact_rational(&w).unwrap());
}
