use formint::cli::parse_function;
use formint::telescoping::OreOp;
use formint::Vars;

fn main() {
    let v = Vars::new(&["x"], Some("t"));
    let (t, n) = (v.param().unwrap(), v.nvars());
    let d = OreOp::dt(t, n);
    let tt = OreOp::new(vec![parse_function("t", &v).unwrap()], t, n);

    // D t = t D + 1
    println!("D*t   = {}", d.mul(&tt).to_text(v.names()));
    println!("t*D   = {}", tt.mul(&d).to_text(v.names()));

    let f = parse_function("x/(t^2 + x)", &v).unwrap();
    let l = d.mul(&d).add(&tt.mul(&d));
    println!("L     = {}", l.to_text(v.names()));
    println!("L(f)  = {}", l.apply(&f).to_text(v.names()));
}
