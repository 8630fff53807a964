use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("modulus {modulus} exceeds the brute-force bound {bound}")]
    BoundExceeded { modulus: u64, bound: u64 },
    #[error("coefficient denominator vanishes modulo {0}")]
    NotReducible(u64),
    #[error("index n = {0} is not supported here")]
    UnsupportedIndex(usize),
    #[error("leading ODE coefficient is identically zero")]
    ZeroLeadingCoefficient,
    #[error("null space is trivial for n = {n}, k = {k}")]
    EmptyBasis { n: usize, k: u32 },
    #[error("the parameter a must be nonzero")]
    ZeroParameter,
    #[error("gamma function pole at {0}")]
    PoleError(f64),
    #[error("series did not converge within {0} terms")]
    ConvergenceError(usize),
    #[error("argument outside the supported domain: {0}")]
    DomainError(String),
    #[error("lower parameter c = {0} is a non-positive integer")]
    ParameterPole(f64),
    #[error("non-finite input")]
    NonFinite,
    #[error("design matrix condition number {0:e} exceeds the limit")]
    IllConditioned(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
