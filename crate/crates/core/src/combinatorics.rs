//! Counting: binomials, Stirling set numbers, minimal-cover counts, their
//! generating polynomials, and Gaussian binomials.
//!
//! The central quantity is the Hearne–Wagner count of minimal covers
//!
//! ```text
//! M(s, j, k) = C(s, k) * (2^j - j - 1)^(s-k) * S(k, j)
//! ```
//!
//! the number of families of `j` distinct nonempty subsets of an `s`-element
//! set that cover it minimally (every member owns a privately covered
//! element) and leave exactly `k` elements covered once. All conventions used
//! here take `0^0 = 1`, which makes the formulas total: outside the support
//! (`k > s`, `j > k`, `j < 1` with `s >= 1`) the count is zero by itself.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{pow2, RatPolynomial, Rational};

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Stirling number of the second kind `S(k, j)`: partitions of a `k`-set
/// into `j` nonempty blocks. `S(0, 0) = 1`; zero for `j > k` or when exactly
/// one of `k`, `j` is zero.
pub fn stirling2(k: u32, j: u32) -> BigInt {
    if j > k {
        return BigInt::zero();
    }
    // rolling row of S(i, .) for i = 0..=k
    let mut row = vec![BigInt::one()];
    for _ in 1..=k {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (b, v) in row.iter().enumerate() {
            // S(i, b) contributes to S(i+1, b) with weight b and to S(i+1, b+1)
            next[b] += v * b;
            next[b + 1] += v;
        }
        row = next;
    }
    row.into_iter().nth(j as usize).unwrap_or_else(BigInt::zero)
}

/// Hearne–Wagner count `M(s, j, k)` of minimal `j`-covers of an `s`-set with
/// exactly `k` uniquely covered elements.
pub fn min_cover_count(s: u32, j: u32, k: u32) -> BigInt {
    if k > s {
        return BigInt::zero();
    }
    let base: BigInt = (BigInt::one() << j) - j - 1u32;
    binomial(s as u64, k as i64) * base.pow(s - k) * stirling2(k, j)
}

/// `M(s, k)`: minimal covers of any size with `k` uniquely covered elements.
fn min_cover_count_all_sizes(s: u32, k: u32) -> BigInt {
    (0..=k).map(|j| min_cover_count(s, j, k)).sum()
}

/// All nonzero counts `M(s, j, k)` for fixed `s` and `j`, keyed by `k`. The
/// closed-form counterpart of
/// [`covers::count_by_unique`](crate::covers::count_by_unique).
pub fn min_cover_counts(s: u32, j: u32) -> BTreeMap<u32, BigInt> {
    (0..=s)
        .map(|k| (k, min_cover_count(s, j, k)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// The generating polynomial `M_s(x) = sum_k M(s, k) x^k` assembled directly
/// from the cover counts.
pub fn gen_poly_direct(s: u32) -> RatPolynomial {
    let coeffs = (0..=s)
        .map(|k| Rational::from_integer(min_cover_count_all_sizes(s, k)))
        .collect();
    RatPolynomial::from_coeffs(coeffs)
}

/// The same polynomial through the Hearne–Wagner inclusion–exclusion form
///
/// ```text
/// M_s(x) = sum_{j=0}^{s} (1/j!) sum_{l=0}^{j} (-1)^(j-l) C(j, l) (2^j - j - 1 + l x)^s
/// ```
///
/// The rational intermediates cancel to the integer coefficients of
/// [`gen_poly_direct`]; the two routes are kept separate so they can be
/// checked against each other.
pub fn gen_poly_hw(s: u32) -> RatPolynomial {
    let mut total = RatPolynomial::zero();
    for j in 0..=s {
        let j_fact = Rational::from_integer(factorial(j));
        for l in 0..=j {
            let a: BigInt = (BigInt::one() << j) - j - 1u32;
            let linear = RatPolynomial::from_coeffs(vec![
                Rational::from_integer(a),
                Rational::from_integer(BigInt::from(l)),
            ]);
            let sign = if (j - l) % 2 == 0 { 1 } else { -1 };
            let c = Rational::from_integer(binomial(j as u64, l as i64) * sign) / &j_fact;
            total = &total + &linear.pow(s).scale(&c);
        }
    }
    total
}

/// The flipped polynomial `sum_k M(s, k) / 2^k * x^(s-k)`, i.e.
/// `x^s * M_s(1/(2x))` cleared of negative powers. Its coefficient at
/// `x^(s-k)` is exactly the weight the triangle of rationals attaches to the
/// cover counts of unique-size `k`.
pub fn flipped_poly(s: u32) -> RatPolynomial {
    let mut coeffs = vec![Rational::zero(); s as usize + 1];
    for k in 0..=s {
        coeffs[(s - k) as usize] =
            Rational::from_integer(min_cover_count_all_sizes(s, k)) * pow2(-(k as i64));
    }
    RatPolynomial::from_coeffs(coeffs)
}

/// The `q`-integer `[n]_q = (q^n - 1)/(q - 1) = 1 + q + ... + q^(n-1)`.
///
/// # Panics
///
/// Panics if `q < 2`.
pub fn q_int(n: u32, q: u64) -> BigInt {
    assert!(q >= 2, "q-integers require q >= 2, got {q}");
    let q = BigInt::from(q);
    let mut power = BigInt::one();
    let mut total = BigInt::zero();
    for _ in 0..n {
        total += &power;
        power *= &q;
    }
    total
}

/// The `q`-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32, q: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * q_int(i, q))
}

/// The Gaussian binomial coefficient, computed by the product formula
/// `prod_{i=1}^{m} (q^(n-m+i) - 1)/(q^i - 1)` with exact rational
/// intermediates. Zero outside `0 <= m <= n`.
///
/// # Panics
///
/// Panics if `q < 2`, or if the product fails to reduce to an integer. The
/// latter is an internal-consistency guard: Gaussian binomials are always
/// integral, so it cannot fire on correct arithmetic.
pub fn q_binomial(n: u32, m: i64, q: u64) -> BigInt {
    assert!(q >= 2, "q-binomials require q >= 2, got {q}");
    if m < 0 || m as u32 > n {
        return BigInt::zero();
    }
    let m = m as u32;
    let q = BigInt::from(q);
    let mut acc = Rational::one();
    for i in 1..=m {
        let num = q.pow(n - m + i) - 1u32;
        let den = q.pow(i) - 1u32;
        acc *= Rational::new(num, den);
    }
    assert!(
        acc.is_integer(),
        "internal consistency: q-binomial product ({n}, {m})_q at q = {q} reduced to {acc}"
    );
    acc.to_integer()
}
