//! The JSON documents the `formint` binary prints, produced in-process.

use clap::Parser;
use formint::cli::{run_to_string, Cli};

fn main() {
    let calls: [&[&str]; 5] = [
        &["formint", "integrate1", "--vars", "x,y", "y/(x*y+1)*d(x) + x/(x*y+1)*d(y)"],
        &["formint", "integratep", "--vars", "x,y", "1/(x*y)*d(x,y)"],
        &["formint", "gd", "--vars", "x,y,z", "1/(x^4+y^4+z^4+1)"],
        &["formint", "smooth", "--vars", "a,b,c", "a^3+b^3+c^3"],
        &["formint", "exact1", "--vars", "x,y", "y*d(x)"],
    ];
    for argv in calls {
        let cli = Cli::parse_from(argv);
        let (out, code) = run_to_string(&cli);
        println!("$ {}\n{out}\n(exit {code})\n", argv[1..].join(" "));
    }
}
