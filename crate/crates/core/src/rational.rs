//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! Every coefficient in this crate is a [`Rational`]. Values are kept in
//! canonical form at all times (lowest terms, positive denominator, zero as
//! 0/1), so equality is plain structural comparison and every identity check
//! downstream can compare values with `==`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational literal: {0:?}")]
    ParseError(String),
}

/// An exact rational number, always stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form. Panics when `den` is zero.
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num.into(), den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer<T: Into<BigInt>>(value: T) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact quotient; the one fallible field operation.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ArithmeticError> {
        if rhs.is_zero() {
            Err(ArithmeticError::DivisionByZero)
        } else {
            Ok(Rational(&self.0 / &rhs.0))
        }
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, exp: u32) -> Rational {
        Rational(self.0.pow(exp as i32))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Rational::from_integer(value)
    }
}

impl From<&BigInt> for Rational {
    fn from(value: &BigInt) -> Self {
        Rational::from_integer(value.clone())
    }
}

macro_rules! forward_binop {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op for Rational {
            type Output = Rational;
            fn $op(self, rhs: Rational) -> Rational {
                Rational((self.0).$op(rhs.0))
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $op(self, rhs: &Rational) -> Rational {
                Rational((self.0).$op(&rhs.0))
            }
        }
        impl $Op<Rational> for &Rational {
            type Output = Rational;
            fn $op(self, rhs: Rational) -> Rational {
                Rational((&self.0).$op(rhs.0))
            }
        }
        impl $Op<&Rational> for &Rational {
            type Output = Rational;
            fn $op(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$op(&rhs.0))
            }
        }
        impl $OpAssign for Rational {
            fn $op_assign(&mut self, rhs: Rational) {
                (self.0).$op_assign(rhs.0);
            }
        }
        impl $OpAssign<&Rational> for Rational {
            fn $op_assign(&mut self, rhs: &Rational) {
                (self.0).$op_assign(&rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

// Div panics on a zero divisor, like the primitive integer types;
// use `checked_div` where the divisor is not known to be nonzero.
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Lowest-terms form: "num/den", or just "num" for integers.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Accepts both "num/den" and plain "num".
impl FromStr for Rational {
    type Err = ArithmeticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithmeticError::ParseError(s.to_string());
        match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(ArithmeticError::DivisionByZero);
                }
                Ok(Rational::new(num, den))
            }
            None => {
                let num: BigInt = s.trim().parse().map_err(|_| bad())?;
                Ok(Rational::from_integer(num))
            }
        }
    }
}
