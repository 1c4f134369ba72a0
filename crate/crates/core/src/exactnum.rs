//! Exact scalar and polynomial arithmetic.
//!
//! Integers are arbitrary-precision ([`BigInt`]) and rationals ([`Rational`])
//! are kept in lowest terms with a positive denominator; zero is `0/1`. Both
//! are backed by `num-bigint`/`num-rational`, which maintain exactly this
//! normalization. On top of them this module provides dense rational
//! polynomials ([`RatPolynomial`]), the power-sum polynomials
//!
//! ```text
//! P_m(N) = sum_{x=0}^{N-1} x^m          (with 0^0 = 1)
//! ```
//!
//! computed by the triangular recurrence on binomial transforms, and the
//! closed form `geo_tail(e) = 1/(1 - 2^e)` for the geometric series
//! `sum_{n>=1} 2^(e(n-1))`.

mod polynomial;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
pub use polynomial::RatPolynomial;

use num_traits::{One, Zero};

use crate::{Error, Result};

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den` in lowest terms.
///
/// # Panics
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// `2^e` as an exact rational, for any sign of `e`.
pub fn pow2(e: i64) -> Rational {
    let mag = BigInt::one() << e.unsigned_abs() as usize;
    if e >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

/// Closed form of the geometric series `sum_{n>=1} 2^(e(n-1)) = 1/(1 - 2^e)`.
///
/// Requires `e <= -1`; for `e >= 0` the series diverges and the exact value
/// does not exist, so an [`Error::DivergentSeries`] is returned.
///
/// The truncation identity `geo_tail(e) - sum_{n=1}^{N} 2^(e(n-1)) =
/// 2^(eN) * geo_tail(e)` holds exactly and is what makes every tail in this
/// crate computable in closed form.
pub fn geo_tail(e: i64) -> Result<Rational> {
    if e >= 0 {
        return Err(Error::DivergentSeries(e));
    }
    Ok((int(1) - pow2(e)).recip())
}

/// The unique polynomial `P_m` with `P_m(N) = sum_{x=0}^{N-1} x^m`.
///
/// Uses the convention `0^0 = 1`, so `P_0(N) = N`. For `m >= 1` the constant
/// term is zero and the degree is `m + 1`. The coefficients come from the
/// triangular recurrence obtained by summing the telescoping identity
/// `(x+1)^(m+1) - x^(m+1) = sum_i C(m+1, i) x^i` over `0 <= x < N`:
///
/// ```text
/// (m+1) P_m(N) = N^(m+1) - sum_{i<m} C(m+1, i) P_i(N)
/// ```
pub fn power_sum_poly(m: u32) -> RatPolynomial {
    let m = m as usize;
    let mut sums: Vec<RatPolynomial> = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let mut p = RatPolynomial::monomial(i + 1, int(1));
        for (r, lower) in sums.iter().enumerate() {
            let c = crate::combinatorics::binomial(i as u64 + 1, r as i64);
            p = &p - &lower.scale(&Rational::from_integer(c));
        }
        sums.push(p.scale(&rat(1, i as i64 + 1)));
    }
    sums.pop().expect("at least one power sum")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn power_sum_loop(m: u32, n: u64) -> Rational {
        // BigInt::pow already follows the 0^0 = 1 convention
        let mut total = BigInt::zero();
        for x in 0..n {
            total += BigInt::from(x).pow(m);
        }
        Rational::from_integer(total)
    }

    #[test]
    fn rational_serialization() {
        assert_eq!(rat(5, 3).to_string(), "5/3");
        assert_eq!(rat(-6, 3).to_string(), "-2");
        assert_eq!(rat(0, 7).to_string(), "0");
        assert_eq!(rat(2, -4).to_string(), "-1/2");
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&int(3), &int(2)), Ok(rat(3, 2)));
    }

    #[test]
    fn pow2_both_signs() {
        assert_eq!(pow2(0), int(1));
        assert_eq!(pow2(5), int(32));
        assert_eq!(pow2(-3), rat(1, 8));
    }

    #[test]
    fn geo_tail_values() {
        assert_eq!(geo_tail(-1), Ok(int(2)));
        assert_eq!(geo_tail(-2), Ok(rat(4, 3)));
        assert_eq!(geo_tail(-4), Ok(rat(16, 15)));
        assert_eq!(geo_tail(0), Err(Error::DivergentSeries(0)));
        assert_eq!(geo_tail(3), Err(Error::DivergentSeries(3)));
    }

    #[test]
    fn geo_tail_truncation_identity() {
        for e in -6..=-1i64 {
            let tail = geo_tail(e).unwrap();
            let mut partial = int(0);
            for n in 1..=40i64 {
                partial += pow2(e * (n - 1));
                assert_eq!(&tail - &partial, pow2(e * n) * &tail);
            }
        }
    }

    #[test]
    fn power_sum_small_cases() {
        assert_eq!(power_sum_poly(0).coeffs(), &[int(0), int(1)]);
        assert_eq!(power_sum_poly(1).coeffs(), &[int(0), rat(-1, 2), rat(1, 2)]);
        assert_eq!(
            power_sum_poly(2).coeffs(),
            &[int(0), rat(1, 6), rat(-1, 2), rat(1, 3)]
        );
    }

    #[test]
    fn power_sum_shape() {
        for m in 1..=12u32 {
            let p = power_sum_poly(m);
            assert_eq!(p.degree(), Some(m as usize + 1));
            assert_eq!(p.coeff(0), int(0));
            assert_eq!(p.eval(&int(0)), int(0));
        }
    }

    #[test]
    fn power_sum_zero_power_convention() {
        // P_0(1) = 0^0 = 1
        assert_eq!(power_sum_poly(0).eval(&int(1)), int(1));
    }

    #[test]
    fn power_sum_matches_loop() {
        for m in 0..=8u32 {
            let p = power_sum_poly(m);
            for n in 0..=30u64 {
                assert_eq!(p.eval(&int(n as i64)), power_sum_loop(m, n), "m={m} n={n}");
            }
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (any::<i32>(), 1..10_000i32).prop_map(|(n, d)| rat(n as i64, d as i64))
    }

    fn assert_normalized(r: &Rational) {
        assert!(r.denom().is_positive());
        assert!(r.numer().gcd(r.denom()).is_one());
        if r.numer().is_zero() {
            assert!(r.denom().is_one());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn normalization_preserved_by_arithmetic(a in arb_rational(), b in arb_rational()) {
            assert_normalized(&(&a + &b));
            assert_normalized(&(&a - &b));
            assert_normalized(&(&a * &b));
            if !b.is_zero() {
                assert_normalized(&checked_div(&a, &b).unwrap());
            }
            assert_normalized(&(&a - &a)); // zero must come out as 0/1
        }

        #[test]
        fn faulhaber_matches_loop(m in 0..10u32, n in 0..200u64) {
            let p = power_sum_poly(m);
            prop_assert_eq!(p.eval(&int(n as i64)), power_sum_loop(m, n));
        }
    }
}
