//! Exact coefficients of (log C_λ(z))^p for the generalized Catalan
//! generating function C_λ, computed by three independent routes — direct
//! truncated-series algebra, a Stirling-cycle closed form, and a
//! harmonic-number/partition form — and cross-checked for exact equality.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! tolerances anywhere. The `cli` module exposes the same computations as
//! the `catalan-log` command line tool.

// Coefficient recurrences index by the exponent of z.
#![allow(clippy::needless_range_loop)]

pub mod catalan;
pub mod cli;
pub mod combinatorics;
pub mod identities;
pub mod rational;
pub mod series;

pub use catalan::{
    catalan_series, fuss_catalan_series, u_power_series, u_power_series_lambda,
    verify_functional_equation, Lambda,
};
pub use combinatorics::{binomial, factorial, partitions_of, HarmonicTable, Partition, StirlingTriangle};
pub use identities::{
    alternating_identity_check, grunberg_stirling, knuth_rhs, log_pow_direct, log_pow_harmonic,
    log_pow_stirling, verify_all, ExpansionRequest, FirstFailure, VerificationReport, VerifyOptions,
};
pub use rational::Rational;
pub use series::{Series, SeriesError};
