use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("duplicate prime {0}")]
    DuplicatePrime(u64),
    #[error("duplicate shift {0}")]
    DuplicateShift(u64),
    #[error("expected a positive integer, got {0}")]
    NonPositive(i64),
    #[error("{value} + {shift} exceeds the supported integer width")]
    Overflow { value: u64, shift: u64 },
    #[error("empty range [{start}, {end})")]
    EmptyRange { start: u64, end: u64 },
    #[error("invalid sieve configuration: {0}")]
    InvalidConfig(String),
    #[error("shift set must be non-empty")]
    EmptyShiftSet,
    #[error("tail sum must be non-negative")]
    NegativeTailSum,
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("target {target} outside ({lower}, 1]")]
    TargetOutOfRange { target: String, lower: String },
    #[error("prime budget of {0} primes exhausted before reaching the target")]
    PrimeBudgetExhausted(usize),
    #[error("density recursion exceeded depth cap {0}")]
    DepthCap(usize),
    #[error("polynomial degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: u64, cap: u64 },
    #[error("every generator set is empty")]
    EmptyGenerators,
    #[error("generator polynomial is zero")]
    ZeroGenerator,
    #[error("divisibility certificate failed for D = {0}")]
    CertificateFailed(String),
}

impl Error {
    /// True for errors caused by a resource cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::PrimeBudgetExhausted(_) | Error::DegreeCap { .. } | Error::DepthCap(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
