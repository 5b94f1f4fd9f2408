use clap::Parser;
use formint::cli::{run_to_string, Cli};

fn main() {
    let cli = Cli::parse();
    let (text, code) = run_to_string(&cli);
    println!("{}", text);
    std::process::exit(code);
}
