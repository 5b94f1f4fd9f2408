use formint::gd::{groebner_basis, jacobian, normal_form};
use formint::poly::Q;
use formint::MPoly;

fn main() {
    let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let x: Vec<MPoly> = (0..3).map(|i| MPoly::var(i, 3)).collect();
    // smooth cubic a^3 + b^3 + c^3 + 2abc; its Jacobian ideal is zero-dimensional
    let q = &(&(&x[0].pow(3) + &x[1].pow(3)) + &x[2].pow(3)) + &(&(&x[0] * &x[1]) * &x[2]).scale(&Q::from_integer(2.into()));
    let g = groebner_basis(&jacobian(&q));
    for p in g.generators() {
        println!("g: {}", p.to_text(&names));
    }
    let p = &x[0].pow(2) * &x[1].pow(2);
    let (r, quo) = normal_form(&p, &g);
    println!("NF({}) = {}", p.to_text(&names), r.to_text(&names));
    let back = quo.iter().zip(g.originals()).fold(r.clone(), |acc, (a, b)| &acc + &(a * b));
    println!("cofactors reconstruct: {}", back == p);
}
