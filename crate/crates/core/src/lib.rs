//! Exact and empirical correlations of ±1-valued completely multiplicative
//! functions λ_P, which equal −1 exactly on the primes of a set P.
//!
//! * [`arith`]: Ω_P, λ_P and Λ_P^H(n) = ∏_{h∈H} λ_P(n+h) pointwise.
//! * [`sieve`]: segmented parity sieve and partial averages S_P(x).
//! * [`density`]: exact local densities η_p^H and η_P^H.
//! * [`spectrum`]: κ_P^H, truncation intervals, α_H and target construction.
//! * [`gf2`]: GF(2) polynomials and closure families of shift sets.
//! * [`report`] and [`commands`]: output formatting and the `lcorr` commands.

pub mod arith;
pub mod commands;
pub mod density;
pub mod error;
pub mod gf2;
pub mod primes;
pub mod report;
pub mod sieve;
pub mod spectrum;

pub use arith::{
    exceptional_primes, lambda, omega, shifted_lambda, DiffSet, PrimeSet, Rational, ShiftSet, Sign,
};
pub use density::{eta_local, eta_local_fast, eta_local_traced, eta_set, DensityCache, LocalDensity};
pub use error::{Error, Result};
pub use gf2::{
    closure_membership, encode, family_from_generators, two_element_member, ClosureFamily, F2Poly,
    TwoElementMember,
};
pub use sieve::{empirical_density, running_average, sieve_parities, SieveConfig, SignSeries};
pub use spectrum::{
    alpha_h, construct_target, kappa_finite, kappa_truncated, spectrum_describe, Correlation,
    CorrelationInterval, SpectrumDescription,
};
