use thiserror::Error;

/// Failure modes across the library. CLI exit codes are derived from the
/// variant via [`Error::exit_code`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero input")]
    ZeroInput,
    #[error("polynomial has degree zero in the requested variable")]
    NotPolynomialInVar,
    #[error("denominator shares a factor with the root polynomial")]
    NonInvertibleDenominator,
    #[error("numerator and denominator are not coprime in the integration variable")]
    NotCoprime,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("form index out of range")]
    IndexOutOfRange,
    #[error("form is not closed: d(form) has coefficient {coefficient} on {basis}")]
    NotClosed { basis: String, coefficient: String },
    #[error("rationality assertion failed: {0}")]
    RationalityAssertionFailed(String),
    #[error("logarithmic terms did not cancel in the derivative expansion")]
    ResidualLogarithm,
    #[error("hypersurface is not smooth")]
    NotSmooth,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree identity violated: {0}")]
    DegreeMismatch(String),
    #[error("regularity assumption violated: {0}")]
    RegularityViolated(String),
    #[error("no telescoper found up to order {0}")]
    TelescoperBound(usize),
    #[error("parse error at line {line}, column {column}: expected {}", expected.join(" or "))]
    Parse { line: usize, column: usize, expected: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotClosed { .. } => 2,
            Error::NotSmooth | Error::RegularityViolated(_) | Error::NotHomogeneous | Error::DegreeMismatch(_) => 3,
            Error::Parse { .. } => 4,
            _ => 5,
        }
    }
}
