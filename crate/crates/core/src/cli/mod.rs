//! Command-line front end: argument model, expression parser and the
//! JSON documents produced by each verb.

pub mod commands;
pub mod parse;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{run, run_to_string};
pub use parse::{parse_expression, parse_form, parse_function, Parsed};

#[derive(Parser, Debug, Clone)]
#[command(name = "formint", version, about = "Exact integration of closed rational differential forms")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Ordered form variables, e.g. `x,y,z` (homogeneous coordinates for
    /// `smooth` and the three-argument `gd`).
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Vec<String>,

    /// Name of the parameter (`telescope` defaults to `t`).
    #[arg(long, global = true)]
    pub param: Option<String>,

    /// Stop the Griffiths-Dwork reduction at the first nonzero remainder.
    #[arg(long, global = true)]
    pub early_exit: bool,

    /// Elimination order, first eliminated first; a permutation of `--vars`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub order: Vec<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Doc)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One line of JSON with sorted keys.
    Doc,
    /// Indented JSON.
    Pretty,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Hermite reduction of a closed 1-form.
    Hermite { form: String },
    /// Primitive of a closed 1-form.
    Integrate1 { form: String },
    /// Primitive of a closed p-form.
    Integratep { form: String },
    /// Whether a closed 1-form is d of a rational function.
    Exact1 { form: String },
    /// Griffiths-Dwork reduction: either an affine top-form coefficient `f`
    /// or a projective form `P Q ell`.
    Gd {
        #[arg(num_args = 1..=3, required = true)]
        args: Vec<String>,
    },
    /// Smoothness of a projective hypersurface.
    Smooth { q: String },
    /// Minimal telescoper of a closed 1-form with parameter.
    Telescope { form: String },
    /// Checks `sum_i d u_i / d x_i = f`.
    VerifyPicard {
        f: String,
        #[arg(required = true)]
        u: Vec<String>,
    },
}

impl Verb {
    pub fn name(&self) -> &'static str {
        match self {
            Verb::Hermite { .. } => "hermite",
            Verb::Integrate1 { .. } => "integrate1",
            Verb::Integratep { .. } => "integratep",
            Verb::Exact1 { .. } => "exact1",
            Verb::Gd { .. } => "gd",
            Verb::Smooth { .. } => "smooth",
            Verb::Telescope { .. } => "telescope",
            Verb::VerifyPicard { .. } => "verify-picard",
        }
    }

    pub fn args(&self) -> Vec<String> {
        match self {
            Verb::Hermite { form } | Verb::Integrate1 { form } | Verb::Integratep { form } | Verb::Exact1 { form } | Verb::Telescope { form } => {
                vec![form.clone()]
            }
            Verb::Gd { args } => args.clone(),
            Verb::Smooth { q } => vec![q.clone()],
            Verb::VerifyPicard { f, u } => std::iter::once(f.clone()).chain(u.iter().cloned()).collect(),
        }
    }
}
