use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("indeterminate root count: zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval: lower bound must be below upper bound")]
    EmptyInterval,
    #[error("degree {0} is below the required minimum of 2")]
    DegreeTooSmall(usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("exact coefficients required")]
    ExactRequired,
    #[error("identity singular here")]
    Singular,
    #[error("x = {0} lies outside [0, pi]")]
    OutOfDomain(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
