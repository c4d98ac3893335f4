use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot add monomials with different transcendental parts")]
    IncompatibleMonomials,
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("rational function has a pole at the evaluation point")]
    PoleAtPoint,
    #[error("regularized limit at p = {p} still has a pole")]
    PolePersists { p: u64 },
    #[error("L(s, chi_{d}) has a pole at s = {s}")]
    PoleOfL { s: i64, d: i128 },
    #[error("L({s}, chi_{d}) is not a closed-form value (parity mismatch)")]
    UnsupportedParity { s: i64, d: i128 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid Gram matrix: {0}")]
    InvalidGram(String),
    #[error("lattice is not even: diagonal entry {0} is odd")]
    NotEven(i64),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("no linear recurrence of order <= 6 found for p = {p} with {terms} terms")]
    NoRecurrenceFound { p: u64, terms: usize },
    #[error("weight {weight} violates 2k + b+ - b- = 0 mod 4 for signature ({plus},{minus})")]
    InadmissibleWeight { weight: String, plus: usize, minus: usize },
    #[error("weight {0} is not supported by this operation")]
    UnsupportedWeight(String),
    #[error("exponent {n} is not in Z - q(gamma)")]
    InvalidExponent { n: String },
    #[error("quadratic form is not negative definite")]
    NotDefinite,
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
