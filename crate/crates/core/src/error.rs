use thiserror::Error;

/// Errors raised by the analytic routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("discriminant must be nonzero")]
    ZeroDiscriminant,

    #[error("character pair needs distinct discriminants, got {0} twice")]
    EqualDiscriminants(i64),

    #[error("s = {sigma} + {t}i is too close to the pole at s = 1")]
    Pole { sigma: f64, t: f64 },

    #[error("real part {0} is outside the continuation region sigma > -1")]
    Region(f64),

    #[error("{what} = {value:e} is too small to fix a sign or ratio")]
    NearZero { what: &'static str, value: f64 },

    #[error("quadrature did not converge: truncation estimate {estimate:e} exceeds {limit:e}")]
    NonConvergence { estimate: f64, limit: f64 },

    #[error("coefficient table covers n <= {nmax}, query needs n <= {needed}")]
    TableTooShort { nmax: usize, needed: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("gcd({a}, {q}) > 1")]
    NotCoprime { a: u64, q: u64 },

    #[error("coefficient invariant violated at n = {n}: {detail}")]
    Invariant { n: usize, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
