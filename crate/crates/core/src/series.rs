//! Truncated formal power series over exact rationals.
//!
//! A series of order N stores coefficients of z^0..z^N and is understood
//! modulo z^{N+1}. Binary operations truncate to the minimum operand order,
//! so the algebra is total; nothing ever extends an order silently.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("formal logarithm needs constant term 1, found {0}")]
    ConstantTermNotOne(Rational),
    #[error("formal exponential needs constant term 0, found {0}")]
    ConstantTermNotZero(Rational),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Wraps an explicit coefficient list; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the z^0 coefficient");
        Series { coeffs }
    }

    /// Coefficients produced by `f(n)` for n in 0..=order.
    pub fn from_fn<F: FnMut(usize) -> Rational>(order: usize, f: F) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = Rational::one();
        Series { coeffs }
    }

    /// The monomial z (zero when order is 0).
    pub fn z(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        if order >= 1 {
            coeffs[1] = Rational::one();
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// [z^n]; n must not exceed the truncation order.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Copy truncated to a lower (or equal) order.
    pub fn truncated(&self, order: usize) -> Series {
        assert!(order <= self.order(), "truncation can only lower the order");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scaled(&self, factor: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Multiplication by z^k within the same order: coefficients shift up,
    /// the top k fall off the truncation.
    pub fn shifted_up(&self, k: usize) -> Series {
        let order = self.order();
        Series::from_fn(order, |n| {
            if n >= k {
                self.coeffs[n - k].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Formal logarithm of a series with constant term 1, by the recurrence
    /// n·l_n = n·a_n − Σ_{k=1}^{n−1} k·l_k·a_{n−k} (from log(a)' = a'/a).
    pub fn log(&self) -> Result<Series, SeriesError> {
        if self.coeffs[0] != Rational::one() {
            return Err(SeriesError::ConstantTermNotOne(self.coeffs[0].clone()));
        }
        let order = self.order();
        let mut log_coeffs = vec![Rational::zero(); order + 1];
        for n in 1..=order {
            let mut sum = Rational::from_integer(n as i64) * &self.coeffs[n];
            for k in 1..n {
                sum -= Rational::from_integer(k as i64) * &log_coeffs[k] * &self.coeffs[n - k];
            }
            log_coeffs[n] = sum / Rational::from_integer(n as i64);
        }
        Ok(Series { coeffs: log_coeffs })
    }

    /// Formal exponential of a series with constant term 0, by the recurrence
    /// n·e_n = Σ_{k=1}^{n} k·a_k·e_{n−k} (from E' = a'·E), e_0 = 1.
    pub fn exp(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero(self.coeffs[0].clone()));
        }
        let order = self.order();
        let mut exp_coeffs = vec![Rational::zero(); order + 1];
        exp_coeffs[0] = Rational::one();
        for n in 1..=order {
            let mut sum = Rational::zero();
            for k in 1..=n {
                sum += Rational::from_integer(k as i64) * &self.coeffs[k] * &exp_coeffs[n - k];
            }
            exp_coeffs[n] = sum / Rational::from_integer(n as i64);
        }
        Ok(Series { coeffs: exp_coeffs })
    }

    /// p-th power by binary exponentiation; p = 0 gives the constant series 1
    /// at this series' order.
    pub fn pow(&self, p: u32) -> Series {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut exp = p;
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl std::fmt::Debug for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Series[order {}: ", self.order())?;
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

/// Cauchy product truncated to the minimum operand order.
impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for Series {
            type Output = Series;
            fn $op(self, rhs: Series) -> Series {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&Series> for Series {
            type Output = Series;
            fn $op(self, rhs: &Series) -> Series {
                (&self).$op(rhs)
            }
        }
        impl $Op<Series> for &Series {
            type Output = Series;
            fn $op(self, rhs: Series) -> Series {
                self.$op(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::catalan_series;
    use proptest::prelude::*;

    fn series(coeffs: &[(i64, i64)]) -> Series {
        Series::from_coeffs(coeffs.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    fn geometric(order: usize) -> Series {
        // 1/(1-z)
        Series::from_fn(order, |_| Rational::one())
    }

    #[test]
    fn add_truncates_to_min_order() {
        let a = series(&[(1, 1), (1, 1)]); // 1 + z
        let b = series(&[(1, 1), (-1, 1)]); // 1 - z
        let sum = &a + &b;
        assert_eq!(sum, series(&[(2, 1), (0, 1)]));

        let long = Series::one(5);
        let short = Series::one(3);
        assert_eq!((&long + &short).order(), 3);
        assert_eq!((&long * &short).order(), 3);

        let zero = Series::zero(1);
        assert_eq!(&a + &zero, a.truncated(1));
    }

    #[test]
    fn mul_examples() {
        let a = series(&[(1, 1), (1, 1), (0, 1)]); // 1 + z at order 2
        let b = series(&[(1, 1), (-1, 1), (0, 1)]); // 1 - z at order 2
        assert_eq!(&a * &b, series(&[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(&a * &Series::one(2), a);
    }

    #[test]
    fn catalan_functional_equation_via_mul() {
        // C·(1 − z·C) = 1 is zC² − C + 1 = 0 rearranged.
        let c = catalan_series(10);
        let zc = c.shifted_up(1);
        let product = &c * &(&Series::one(10) - &zc);
        assert_eq!(product, Series::one(10));
    }

    #[test]
    fn log_examples() {
        let l = geometric(4).log().unwrap();
        assert_eq!(
            l,
            series(&[(0, 1), (1, 1), (1, 2), (1, 3), (1, 4)])
        );

        // log C(z) = z + (3/2)z² + (10/3)z³, the ½·C(2n,n)/n closed form.
        let lc = catalan_series(3).log().unwrap();
        assert_eq!(lc, series(&[(0, 1), (1, 1), (3, 2), (10, 3)]));

        assert_eq!(Series::one(6).log().unwrap(), Series::zero(6));
    }

    #[test]
    fn log_requires_unit_constant_term() {
        let err = Series::zero(3).log().unwrap_err();
        assert_eq!(err, SeriesError::ConstantTermNotOne(Rational::zero()));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(Series::zero(5).exp().unwrap(), Series::one(5));

        let e = Series::z(3).exp().unwrap();
        assert_eq!(e, series(&[(1, 1), (1, 1), (1, 2), (1, 6)]));

        let c = catalan_series(12);
        assert_eq!(c.log().unwrap().exp().unwrap(), c);
    }

    #[test]
    fn exp_requires_zero_constant_term() {
        let err = Series::one(3).exp().unwrap_err();
        assert_eq!(err, SeriesError::ConstantTermNotZero(Rational::one()));
    }

    #[test]
    fn pow_examples() {
        let a = series(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(a.pow(0), Series::one(2));
        assert_eq!(a.pow(1), a);

        // (log C)² = z² + 3z³ + ...
        let lc = catalan_series(3).log().unwrap();
        assert_eq!(lc.pow(2), series(&[(0, 1), (0, 1), (1, 1), (3, 1)]));
    }

    #[test]
    fn values_transfer_between_threads() {
        fn check<T: Send + Sync>() {}
        check::<Rational>();
        check::<Series>();

        let c = catalan_series(10);
        let handle = std::thread::spawn(move || c.log().unwrap());
        assert_eq!(handle.join().unwrap(), catalan_series(10).log().unwrap());
    }

    fn arb_series(order: usize) -> impl Strategy<Value = Series> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), order + 1)
            .prop_map(|v| Series::from_coeffs(v.into_iter().map(|(n, d)| Rational::new(n, d)).collect()))
    }

    fn arb_unit_series(order: usize) -> impl Strategy<Value = Series> {
        arb_series(order).prop_map(|mut s| {
            s.coeffs[0] = Rational::one();
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn exp_log_roundtrip(a in arb_unit_series(8)) {
            prop_assert_eq!(a.log().unwrap().exp().unwrap(), a);
        }

        #[test]
        fn log_of_product_is_sum_of_logs(a in arb_unit_series(8), b in arb_unit_series(8)) {
            let lhs = (&a * &b).log().unwrap();
            let rhs = &a.log().unwrap() + &b.log().unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pow_matches_naive_product(a in arb_series(6), p in 0u32..6) {
            let mut naive = Series::one(6);
            for _ in 0..p {
                naive = &naive * &a;
            }
            prop_assert_eq!(a.pow(p), naive);
        }

        #[test]
        fn truncation_coherence(a in arb_unit_series(10), m in 0usize..=10) {
            // computing at order 10 then truncating == computing at order m
            prop_assert_eq!(a.log().unwrap().truncated(m), a.truncated(m).log().unwrap());
            let b = &a - &Series::one(10); // constant term 0
            prop_assert_eq!(b.exp().unwrap().truncated(m), b.truncated(m).exp().unwrap());
            prop_assert_eq!(a.pow(3).truncated(m), a.truncated(m).pow(3));
        }
    }
}
