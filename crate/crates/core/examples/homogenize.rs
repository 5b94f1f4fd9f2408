//! Affine top-form to projective form; a denominator that picks up a
//! factor of `xi0` violates regularity.

use formint::cli::parse_function;
use formint::gd::homogenize_m_form;
use formint::Vars;

fn main() {
    let v = Vars::new(&["x", "y", "z"], None);
    let names: Vec<String> = (0..4).map(|i| format!("xi{i}")).collect();
    for src in ["1/(x^4 + y^4 + z^4 + 1)", "1/(x^3 + y^3 + z^3)"] {
        let h = homogenize_m_form(&parse_function(src, &v).unwrap(), 3);
        println!("{src}");
        println!("  -> ({}) Omega / ({})", h.numerator.to_text(&names), h.denominator.to_text(&names));
        match &h.form {
            Some(w) => println!("  regular, Q = {}, ell = {}", w.q.to_text(&names), w.ell),
            None => println!("  violations: {:?}", h.violations),
        }
    }
}
