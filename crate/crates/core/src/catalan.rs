//! Closed-form coefficient generators for the Catalan and generalized
//! Catalan series and for the Lagrange-inversion expansion of u^m, where
//! u = z·(1+u)^λ and C_λ(z) = 1 + u(z).

use thiserror::Error;

use crate::combinatorics::binomial;
use crate::rational::Rational;
use crate::series::Series;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("lambda must be a positive integer")]
pub struct InvalidLambda;

/// The branching parameter λ ≥ 1 of u = z(1+u)^λ. λ=2 is the classical
/// Catalan case; λ=1 gives C_1(z) = 1/(1−z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda(u32);

impl Lambda {
    pub fn new(value: u32) -> Result<Self, InvalidLambda> {
        if value >= 1 {
            Ok(Lambda(value))
        } else {
            Err(InvalidLambda)
        }
    }

    /// λ = 2, the classical case.
    pub fn catalan() -> Self {
        Lambda(2)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl std::fmt::Display for Lambda {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// C(z) = Σ C(2n,n)/(n+1)·z^n, the Catalan generating function.
pub fn catalan_series(order: usize) -> Series {
    Series::from_fn(order, |n| Rational::new(binomial(2 * n as i64, n), n as i64 + 1))
}

/// C_λ(z) = Σ C(1+nλ, n)/(1+nλ)·z^n. λ=2 recovers `catalan_series`.
pub fn fuss_catalan_series(lam: Lambda, order: usize) -> Series {
    let lam = lam.get() as i64;
    Series::from_fn(order, |n| {
        let top = 1 + n as i64 * lam;
        Rational::new(binomial(top, n), top)
    })
}

/// [z^n] u^m for u = z(1+u)², by Lagrange inversion:
/// (m/n)·C(2n, n−m) for n ≥ m ≥ 1, zero below the valuation; u^0 = 1.
pub fn u_power_series(m: u32, order: usize) -> Series {
    u_power_series_lambda(m, Lambda::catalan(), order)
}

/// [z^n] u^m for u = z(1+u)^λ: (m/n)·C(λn, n−m) for n ≥ m ≥ 1, zero for
/// n < m; the m = 0 limit is the constant series 1.
pub fn u_power_series_lambda(m: u32, lam: Lambda, order: usize) -> Series {
    if m == 0 {
        return Series::one(order);
    }
    Series::from_fn(order, |n| u_power_coeff(n, m as usize, lam))
}

/// Single coefficient [z^n] u^m (same convention as the series builders).
pub(crate) fn u_power_coeff(n: usize, m: usize, lam: Lambda) -> Rational {
    if m == 0 {
        return if n == 0 { Rational::one() } else { Rational::zero() };
    }
    if n < m {
        return Rational::zero();
    }
    let top = lam.get() as i64 * n as i64;
    Rational::new(binomial(top, n - m) * m as i64, n as i64)
}

/// Checks, by exact series algebra over the closed-form coefficients, that
/// u(z) satisfies u = z·(1+u)^λ up to the order and that C_λ = 1 + u matches
/// `fuss_catalan_series`.
pub fn verify_functional_equation(lam: Lambda, order: usize) -> bool {
    let u = u_power_series_lambda(1, lam, order);
    let one_plus_u = &Series::one(order) + &u;
    let rhs = one_plus_u.pow(lam.get()).shifted_up(1);
    u == rhs && one_plus_u == fuss_catalan_series(lam, order)
}
