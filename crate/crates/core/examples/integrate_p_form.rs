//! Closed 2-form in three variables whose primitive needs an algebraic
//! logarithmic part.

use formint::cli::parse_form;
use formint::integrate::{expand_primitive_derivative, integrate_closed_pform};
use formint::Vars;

fn main() {
    let v = Vars::new(&["x", "y", "z"], None);
    let w = parse_form("(1/(z^2-x) + 1/(x*y)) * d(x,y) + 1/(z^2-x) * d(y,z) + (y - 2*y*z)/(z^2-x)^2 * d(x,z)", &v).unwrap();
    assert!(w.is_closed());
    let psi = integrate_closed_pform(&w).unwrap();
    println!("{}", psi.to_text(v.names()));
    for l in psi.log_terms() {
        println!("  {}", l.to_text(v.names()));
    }
    println!("d(psi) == w: {}", expand_primitive_derivative(&psi).unwrap() == w);
}
