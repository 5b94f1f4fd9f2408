use formint::cli::{parse_expression, parse_form, Parsed};
use formint::Vars;

fn main() {
    let v = Vars::with_param(&["x", "y", "z"]);
    for src in ["(x + t)^3 / (y - 1/2)", "x*d(y) - y*d(x)", "d(x) * d(y) / z", "-3*d(x,y,z)"] {
        match parse_expression(src, &v).unwrap() {
            Parsed::Function(f) => println!("{src:24} function  {}", f.to_text(v.names())),
            Parsed::Form(w) => println!("{src:24} {}-form    {}", w.degree(), w.to_text(v.names())),
        }
    }

    // printed forms parse back to the same value
    let w = parse_form("x*d(y) - y*d(x)", &v).unwrap();
    let dw = w.d();
    println!("d(x dy - y dx) = {}", dw.to_text(v.names()));
    assert_eq!(parse_form(&dw.to_text(v.names()), &v).unwrap(), dw);

    match parse_form("1/x * d(x", &v) {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
}
