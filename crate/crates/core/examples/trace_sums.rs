//! Sums of a rational function over the roots of a polynomial, computed
//! without leaving the base field.

use formint::cli::parse_function;
use formint::poly::trace_sum;
use formint::Vars;

fn main() {
    let v = Vars::new(&["x"], None);
    let c = v.root();
    let p = |s: &str| parse_function(s, &v).unwrap();

    // sum over c^2 = x of 1/(1 + c) = 2/(1 - x)
    let r = p("_c^2 - x");
    let s = trace_sum(r.num(), c, &p("1/(1 + _c)")).unwrap();
    println!("sum_(c^2 = x) 1/(1+c) = {}", s.to_text(v.names()));

    // power sums of the roots of c^3 - x c - 1
    let r = p("_c^3 - x*_c - 1");
    for k in 1..=4 {
        let s = trace_sum(r.num(), c, &p(&format!("_c^{k}"))).unwrap();
        println!("p_{k} = {}", s.to_text(v.names()));
    }
}
