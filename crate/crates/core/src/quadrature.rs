//! Inscribed-triangle exhaustion of the region under `y = x^s` on `[0, 1]`.
//!
//! Iteration `n` works on the dyadic grid with `2^n` subdivisions. Over every
//! odd apex `k` (grid points `(k-1, k, k+1)`, scaled by `2^-n`) the inscribed
//! triangle against the curve has exact area
//!
//! ```text
//! area(k, s, n) = second_difference(k, s) / 2^(n(s+1) + 1)
//! ```
//!
//! where `second_difference(k, s) = (k+1)^s - 2 k^s + (k-1)^s`. The same area
//! falls out of the 3x3 shoelace determinant on the raw curve points; both
//! routes are implemented and must agree exactly.
//!
//! Summing one iteration's triangles gives [`iteration_area`]; summing over
//! all iterations exhausts the region, and since every tail is a finite sum
//! of geometric series the limit identity
//!
//! ```text
//! exhaustion_partial(s, n) + exhaustion_tail(s, n) = 1/2 - 1/(s+1)
//! ```
//!
//! holds exactly for every truncation point. Rearranged, that is Archimedes'
//! quadrature generalized to all integer powers: the integral of `x^s` over
//! `[0, 1]` equals `1/2` minus the exhausted area.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactnum::{geo_tail, int, pow2, power_sum_poly, rat, RatPolynomial, Rational};
use crate::{Error, Result};

/// `(k+1)^s - 2 k^s + (k-1)^s`, the discrete convexity of `x^s` at `k`.
pub fn second_difference(k: u64, s: u32) -> BigInt {
    let k = BigInt::from(k);
    (&k + 1u32).pow(s) - k.pow(s) * 2u32 + (&k - 1u32).pow(s)
}

/// Exact area of the inscribed triangle with apex `k` on the grid `2^n`,
/// from the second-difference closed form. Fails only for `k = 0`, which has
/// no left neighbor.
pub fn triangle_area(k: u64, s: u32, n: u32) -> Result<Rational> {
    if k == 0 {
        return Err(Error::ApexOutOfRange);
    }
    let exponent = n as i64 * (s as i64 + 1) + 1;
    Ok(Rational::from_integer(second_difference(k, s)) * pow2(-exponent))
}

/// The same area through the shoelace determinant on the three curve points
/// `(x, x^s)` for `x = (k-1)/2^n, k/2^n, (k+1)/2^n`. Kept deliberately
/// independent of [`second_difference`] so the two routes check each other.
pub fn triangle_area_shoelace(k: u64, s: u32, n: u32) -> Result<Rational> {
    if k == 0 {
        return Err(Error::ApexOutOfRange);
    }
    let grid = pow2(n as i64);
    let xs: Vec<Rational> = [k - 1, k, k + 1]
        .iter()
        .map(|&i| int(i as i64) / &grid)
        .collect();
    let ys: Vec<Rational> = xs.iter().map(|x| x.pow(s as i32)).collect();
    let cross = (&xs[1] - &xs[0]) * (&ys[2] - &ys[0]) - (&xs[2] - &xs[0]) * (&ys[1] - &ys[0]);
    Ok(cross * rat(1, 2))
}

/// The second difference along odd apexes as a polynomial:
/// `T_s(x) = (2x+2)^s - 2 (2x+1)^s + (2x)^s`, of degree `s - 2`.
///
/// Its coefficient at `x^(s-k)` equals `M(s, 2, k) * 2^(s-k+1)`: the
/// minimal-2-cover counts weight the grid geometry.
///
/// # Panics
///
/// Panics if `s < 2`.
pub fn triangle_poly(s: u32) -> RatPolynomial {
    assert!(s >= 2, "triangle polynomials need s >= 2, got {s}");
    let outer = RatPolynomial::from_coeffs(vec![int(2), int(2)]).pow(s);
    let middle = RatPolynomial::from_coeffs(vec![int(1), int(2)]).pow(s);
    let inner = RatPolynomial::from_coeffs(vec![int(0), int(2)]).pow(s);
    &(&outer - &middle.scale(&int(2))) + &inner
}

/// `sum_x T_s(x)` as a polynomial in the iteration size `N`:
/// `Q_s(N) = sum_{x=0}^{N-1} T_s(x)`, degree `s - 1`, zero constant term.
fn summed_triangle_poly(s: u32) -> RatPolynomial {
    let t = triangle_poly(s);
    let mut q = RatPolynomial::zero();
    for (i, c) in t.coeffs().iter().enumerate() {
        q = &q + &power_sum_poly(i as u32).scale(c);
    }
    q
}

/// Total area of the `2^(n-1)` triangles inscribed at iteration `n`, in
/// closed form: `Q_s(2^(n-1)) / 2^(n(s+1) + 1)`.
///
/// # Panics
///
/// Panics if `s < 2` or `n < 1`.
pub fn iteration_area(s: u32, n: u32) -> Rational {
    assert!(n >= 1, "iterations are numbered from 1, got {n}");
    let q = summed_triangle_poly(s);
    q.eval(&pow2(n as i64 - 1)) * pow2(-(n as i64 * (s as i64 + 1) + 1))
}

/// [`iteration_area`] by direct summation over all odd apexes
/// `k = 1, 3, .., 2^n - 1`. Exponentially many terms; kept for cross-checks
/// at small `n`.
///
/// # Panics
///
/// Panics if `s < 2`, `n < 1`, or `n > 20` (the direct walk would be huge).
pub fn iteration_area_direct(s: u32, n: u32) -> Rational {
    assert!(s >= 2, "exhaustion needs s >= 2, got {s}");
    assert!((1..=20).contains(&n), "direct summation supports 1 <= n <= 20, got {n}");
    let mut total = Rational::zero();
    for x in 0..(1u64 << (n - 1)) {
        total += triangle_area(2 * x + 1, s, n).expect("odd apexes are positive");
    }
    total
}

/// Snapshot of the exhaustion after finitely many iterations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustionState {
    pub s: u32,
    /// Number of completed iterations.
    pub iterations: u32,
    /// Grid resolution `2^n` of the last completed iteration.
    pub grid: BigInt,
    /// Exact area inscribed so far; always strictly below the limit.
    pub accumulated: Rational,
}

/// Runs `n` iterations and returns the accumulated state.
///
/// # Panics
///
/// Panics if `s < 2` or `n < 1`.
pub fn exhaustion_partial(s: u32, n: u32) -> ExhaustionState {
    assert!(n >= 1, "iterations are numbered from 1, got {n}");
    let mut accumulated = Rational::zero();
    for i in 1..=n {
        accumulated += iteration_area(s, i);
    }
    ExhaustionState {
        s,
        iterations: n,
        grid: BigInt::from(1u32) << n,
        accumulated,
    }
}

/// Exact value of `sum_{i > n} iteration_area(s, i)` in closed form: the
/// summed triangle polynomial splits the series into finitely many geometric
/// tails, each handled by [`geo_tail`]. `n = 0` gives the full series.
pub fn exhaustion_tail(s: u32, n: u32) -> Rational {
    let q = summed_triangle_poly(s);
    let mut total = Rational::zero();
    for (d, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // area_i = (1/2) sum_d q_d 2^(-d) (2^(d-s-1))^i
        let e = d as i64 - s as i64 - 1;
        let tail = geo_tail(e).expect("d <= s - 1 keeps every ratio below one");
        total += c * pow2(-(d as i64 + 1)) * pow2(e * (n as i64 + 1)) * tail;
    }
    total
}

/// The exhaustion limit `1/2 - 1/(s+1)`, reached from below.
pub fn exhaustion_limit(s: u32) -> Rational {
    exhaustion_tail(s, 0)
}

/// The integral of `x^s` over `[0, 1]`, recovered as `1/2` minus the
/// exhausted area between the chord and the curve.
pub fn unit_power_integral(s: u32) -> Rational {
    rat(1, 2) - exhaustion_limit(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::min_cover_count;
    use crate::exactnum::BigInt;
    use proptest::prelude::*;

    #[test]
    fn second_difference_values() {
        for s in 2..=10u32 {
            assert_eq!(second_difference(1, s), (BigInt::from(1u32) << s) - 2u32);
        }
        assert_eq!(second_difference(3, 3), BigInt::from(18));
        assert_eq!(second_difference(2, 4), BigInt::from(50));
        let row: Vec<BigInt> = (1..=4).map(|k| second_difference(k, 5)).collect();
        let want: Vec<BigInt> = [30, 180, 570, 1320].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(row, want);
    }

    #[test]
    fn triangle_area_values() {
        assert_eq!(triangle_area(1, 2, 1).unwrap(), rat(1, 8));
        assert_eq!(triangle_area(1, 4, 0).unwrap(), int(7));
        assert_eq!(triangle_area(0, 3, 1), Err(Error::ApexOutOfRange));
        assert_eq!(triangle_area_shoelace(0, 3, 1), Err(Error::ApexOutOfRange));
    }

    #[test]
    fn shoelace_agrees_with_formula() {
        for s in 2..=6u32 {
            for n in 0..=4u32 {
                for k in 1..(1u64 << n).max(2) {
                    assert_eq!(
                        triangle_area(k, s, n).unwrap(),
                        triangle_area_shoelace(k, s, n).unwrap(),
                        "k={k} s={s} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn triangle_poly_rows() {
        let expected: [&[i64]; 5] = [
            &[2],
            &[6, 12],
            &[14, 48, 48],
            &[30, 140, 240, 160],
            &[62, 360, 840, 960, 480],
        ];
        for (s, row) in (2..=6u32).zip(expected) {
            let want: Vec<Rational> = row.iter().map(|&c| int(c)).collect();
            assert_eq!(triangle_poly(s).coeffs(), want, "s={s}");
        }
        assert_eq!(triangle_poly(7).coeffs(), [126, 868, 2520, 3920, 3360, 1344].map(int));
        assert_eq!(
            triangle_poly(8).coeffs(),
            [254, 2016, 6944, 13440, 15680, 10752, 3584].map(int)
        );
    }

    #[test]
    fn triangle_poly_factors_through_cover_counts() {
        for s in 2..=10u32 {
            let t = triangle_poly(s);
            assert_eq!(t.degree(), Some(s as usize - 2));
            for k in 2..=s {
                let weight = Rational::from_integer(
                    min_cover_count(s, 2, k) * (BigInt::from(1u32) << (s - k + 1)),
                );
                assert_eq!(t.coeff((s - k) as usize), weight, "s={s} k={k}");
            }
        }
    }

    #[test]
    fn iteration_area_known_values() {
        for n in 1..=6u32 {
            assert_eq!(iteration_area(2, n), pow2(-(2 * n as i64 + 1)));
        }
        for n in 1..=10u32 {
            assert_eq!(iteration_area(3, n), int(3) * pow2(-(2 * n as i64 + 2)));
        }
        assert_eq!(iteration_area(4, 1), rat(7, 32));
        assert_eq!(iteration_area(4, 2), rat(31, 512));
        assert_eq!(iteration_area(5, 2), rat(75, 1024));
    }

    #[test]
    fn closed_form_matches_direct_summation() {
        for s in 2..=6u32 {
            for n in 1..=6u32 {
                assert_eq!(iteration_area(s, n), iteration_area_direct(s, n), "s={s} n={n}");
            }
        }
    }

    #[test]
    fn quarter_ratio_for_low_powers() {
        // the per-iteration sum is a monomial for s = 2 and s = 3, so the
        // ratio of successive iterations is exactly 1/4; for s >= 4 the ratio
        // only tends to 1/4
        for s in [2u32, 3] {
            for n in 1..=9u32 {
                assert_eq!(iteration_area(s, n + 1) / iteration_area(s, n), rat(1, 4));
            }
        }
        assert_eq!(iteration_area(4, 2) / iteration_area(4, 1), rat(31, 112));
    }

    #[test]
    fn exhaustion_state_snapshots() {
        let st = exhaustion_partial(2, 1);
        assert_eq!(st.accumulated, rat(1, 8));
        assert_eq!(st.grid, BigInt::from(2));
        assert_eq!(st.iterations, 1);
        assert_eq!(exhaustion_tail(2, 1), rat(1, 24));
        assert_eq!(exhaustion_tail(3, 0), rat(1, 4));
        assert_eq!(exhaustion_tail(4, 2), rat(53, 2560));
    }

    #[test]
    fn partial_plus_tail_is_the_limit() {
        for s in 2..=8u32 {
            let limit = rat(1, 2) - rat(1, s as i64 + 1);
            assert_eq!(exhaustion_limit(s), limit, "s={s}");
            for n in 1..=8u32 {
                let st = exhaustion_partial(s, n);
                assert_eq!(&st.accumulated + &exhaustion_tail(s, n), limit, "s={s} n={n}");
                assert!(st.accumulated < limit, "strictly below the limit");
            }
        }
    }

    #[test]
    fn limit_identity_through_s20() {
        for s in 2..=20u32 {
            assert_eq!(int(2) * exhaustion_limit(s), rat(s as i64 - 1, s as i64 + 1));
            assert_eq!(unit_power_integral(s), rat(1, s as i64 + 1));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn shoelace_route_agrees(s in 2..7u32, n in 0..5u32, k in 1..40u64) {
            prop_assert_eq!(
                triangle_area(k, s, n).unwrap(),
                triangle_area_shoelace(k, s, n).unwrap()
            );
        }
    }
}
