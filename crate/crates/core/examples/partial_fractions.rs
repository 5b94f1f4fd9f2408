//! Squarefree partial fractions in one variable, with the other variables
//! as coefficients.

use formint::cli::parse_function;
use formint::poly::{partial_fractions, squarefree_factorization};
use formint::Vars;

fn main() {
    let v = Vars::new(&["x", "y"], None);
    let f = parse_function("(x^3 + y)/((x - y)^2 * (x^2 + 1))", &v).unwrap();
    let x = v.index_of("x").unwrap();

    let sqf = squarefree_factorization(f.den(), x).unwrap();
    println!("denominator: {}", f.den().to_text(v.names()));
    for (f, m) in &sqf.factors {
        println!("  ({})^{m}", f.to_text(v.names()));
    }

    let pf = partial_fractions(&f, x).unwrap();
    println!("polynomial part: {}", pf.polypart.to_text(v.names()));
    for t in &pf.terms {
        println!("  ({}) / ({})^{}", t.numerator.to_text(v.names()), t.denfactor.to_text(v.names()), t.power);
    }
    println!("recombines: {}", pf.recombine() == f);
}
