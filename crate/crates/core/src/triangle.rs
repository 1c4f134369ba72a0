//! The triangle of rationals `R(s, j)` obtained by splitting the exhaustion
//! series for `y = x^s` along minimal-cover counts.
//!
//! Each inscribed-triangle iteration contributes `M(s, j, k)`-weighted terms,
//! and summing the series per `(s, j)` in closed form (every tail is a finite
//! combination of geometric series) yields an exact rational
//!
//! ```text
//! R(s, j) = sum_{k=2}^{s} M(s, j, k) / 2^k * G(s, s - k)
//! ```
//!
//! where `G(s, m) = sum_{n >= 1} 2^(-(n-1)(s+1)) P_m(2^(n-1))` and `P_m` is
//! the power-sum polynomial. The columns have striking structure: both edges
//! equal `1/(2^s - 1)` and the `j = 2` column is exactly `(s-1)/(s+1)`, twice
//! the exhaustion limit.
//!
//! The module also provides exact truncations ([`entry_partial`] /
//! [`entry_tail`], which always recombine to the full value), row sums, an
//! integral lower bound on the row sum, a report on how the reduced
//! denominators line up with Gaussian binomials at `q = 2`, and OEIS b-file
//! import/export for the numerator and denominator sequences.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, min_cover_count, q_binomial};
use crate::exactnum::{geo_tail, int, pow2, power_sum_poly, rat, Rational};
use crate::{Error, Result};

/// One entry of the triangle, tagged with its position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleEntry {
    pub s: u32,
    pub j: u32,
    pub value: Rational,
}

impl TriangleEntry {
    /// Numerator of the reduced value.
    pub fn numerator(&self) -> &BigInt {
        self.value.numer()
    }

    /// Denominator of the reduced value; always positive.
    pub fn denominator(&self) -> &BigInt {
        self.value.denom()
    }
}

/// `G(s, m)`: the exhaustion series summed against the power-sum polynomial
/// `P_m`, in closed form through geometric tails. Needs `m <= s - 1` so every
/// ratio stays below one.
pub(crate) fn geo_power_sum(s: u32, m: u32) -> Rational {
    assert!(m < s, "geo_power_sum needs m <= s - 1, got m={m} s={s}");
    let mut total = Rational::zero();
    for (d, c) in power_sum_poly(m).coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let tail = geo_tail(d as i64 - s as i64 - 1).expect("d <= m + 1 <= s");
        total += c * tail;
    }
    total
}

fn check_position(s: u32, j: u32) {
    assert!(s >= 2, "the triangle starts at s = 2, got s={s}");
    assert!((1..=s).contains(&j), "need 1 <= j <= s, got j={j} s={s}");
}

/// The exact value `R(s, j)` for `s >= 2`, `1 <= j <= s`.
///
/// # Panics
///
/// Panics if the position lies outside the triangle.
pub fn entry(s: u32, j: u32) -> TriangleEntry {
    check_position(s, j);
    let mut value = Rational::zero();
    for k in 2..=s {
        let weight = Rational::from_integer(min_cover_count(s, j, k)) * pow2(-(k as i64));
        value += weight * geo_power_sum(s, s - k);
    }
    TriangleEntry { s, j, value }
}

/// The first `n` iterations' contribution to `R(s, j)`, exactly.
///
/// # Panics
///
/// Panics if the position lies outside the triangle or `n < 1`.
pub fn entry_partial(s: u32, j: u32, n: u32) -> Rational {
    check_position(s, j);
    assert!(n >= 1, "iterations are numbered from 1, got {n}");
    let weighted: Vec<(Rational, crate::exactnum::RatPolynomial)> = (2..=s)
        .map(|k| {
            let w = Rational::from_integer(min_cover_count(s, j, k)) * pow2(-(k as i64));
            (w, power_sum_poly(s - k))
        })
        .collect();
    let mut total = Rational::zero();
    for i in 1..=n {
        let grid = pow2(i as i64 - 1);
        let scale = pow2(-((i as i64 - 1) * (s as i64 + 1)));
        for (w, p) in &weighted {
            total += w * p.eval(&grid) * &scale;
        }
    }
    total
}

/// The exact remainder `R(s, j) - entry_partial(s, j, n)` in closed form;
/// `n = 0` gives the whole value back.
///
/// # Panics
///
/// Panics if the position lies outside the triangle.
pub fn entry_tail(s: u32, j: u32, n: u32) -> Rational {
    check_position(s, j);
    let mut total = Rational::zero();
    for k in 2..=s {
        let w = Rational::from_integer(min_cover_count(s, j, k)) * pow2(-(k as i64));
        for (d, c) in power_sum_poly(s - k).coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = d as i64 - s as i64 - 1;
            let tail = geo_tail(e).expect("d <= s - 1 keeps every ratio below one");
            total += &w * c * pow2(e * n as i64) * tail;
        }
    }
    total
}

/// Row `s` of the triangle: `R(s, 1) .. R(s, s)`.
pub fn row(s: u32) -> Vec<TriangleEntry> {
    (1..=s).map(|j| entry(s, j)).collect()
}

/// Rows `2 ..= max_s`, the shape consumed by the renderers.
pub fn rows(max_s: u32) -> Vec<Vec<TriangleEntry>> {
    assert!(max_s >= 2, "the triangle starts at s = 2, got max_s={max_s}");
    (2..=max_s).map(row).collect()
}

/// Sum of row `s`.
pub fn row_sum(s: u32) -> Rational {
    row(s).into_iter().map(|e| e.value).sum()
}

/// Independently verified values for rows 2 through 8, as reduced
/// numerator/denominator pairs in row order.
const REFERENCE: &[(u32, u32, i64, i64)] = &[
    (2, 1, 1, 3),
    (2, 2, 1, 3),
    (3, 1, 1, 7),
    (3, 2, 1, 2),
    (3, 3, 1, 7),
    (4, 1, 1, 15),
    (4, 2, 3, 5),
    (4, 3, 10, 21),
    (4, 4, 1, 15),
    (5, 1, 1, 31),
    (5, 2, 2, 3),
    (5, 3, 865, 651),
    (5, 4, 71, 186),
    (5, 5, 1, 31),
    (6, 1, 1, 63),
    (6, 2, 5, 7),
    (6, 3, 2630, 651),
    (6, 4, 1427, 651),
    (6, 5, 181, 651),
    (6, 6, 1, 63),
    (7, 1, 1, 127),
    (7, 2, 3, 4),
    (7, 3, 163133, 11811),
    (7, 4, 306553, 15748),
    (7, 5, 36667, 11811),
    (7, 6, 145, 762),
    (7, 7, 1, 127),
    (8, 1, 1, 255),
    (8, 2, 7, 9),
    (8, 3, 3368938, 66929),
    (8, 4, 129115655, 602361),
    (8, 5, 46958822, 602361),
    (8, 6, 43662, 10795),
    (8, 7, 4036, 32385),
    (8, 8, 1, 255),
];

/// The reference entries for rows 2 through 8 as ready-made values.
pub fn reference_entries() -> Vec<TriangleEntry> {
    REFERENCE
        .iter()
        .map(|&(s, j, num, den)| TriangleEntry { s, j, value: rat(num, den) })
        .collect()
}

/// An integral lower bound for the row sum, with the row sum it bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundResult {
    pub s: u32,
    /// The bound `int_0^1 sum_j M(s,j)/2^j x^(s-j) dx`, evaluated through an
    /// inclusion-exclusion expansion of the cover counts.
    pub bound: Rational,
    pub row_sum: Rational,
    /// How `bound` compares to `row_sum`. The bound undershoots only at
    /// `s = 2`; from `s = 3` on it exceeds the row sum, so it bounds the
    /// integral rather than the triangle rows.
    pub comparison: Ordering,
}

/// Evaluates the lower-bound expansion
///
/// ```text
/// sum_{j=0}^{s} sum_{l=0}^{j} (-1)^(j-l) C(j,l)/j! *
///     [ sum_{t=1}^{s+1} a^(t-1) b^(s+1-t) ] / (s+1)
/// ```
///
/// with `a = 2^j - j - 1 + l/2` and `b = l/2`. For `j >= 2` the bracketed
/// sum telescopes to `(a^(s+1) - b^(s+1)) / (a - b)`; the implementation
/// computes the sum literally and asserts the telescoped form agrees.
///
/// # Panics
///
/// Panics if `s < 2`.
pub fn lower_bound(s: u32) -> LowerBoundResult {
    assert!(s >= 2, "the triangle starts at s = 2, got s={s}");
    let mut bound = Rational::zero();
    let mut j_factorial = BigInt::one();
    for j in 0..=s {
        if j > 0 {
            j_factorial *= j;
        }
        let base = Rational::from_integer((BigInt::one() << j) - j - 1u32);
        for l in 0..=j {
            let a = &base + rat(l as i64, 2);
            let b = rat(l as i64, 2);
            let mut t_sum = Rational::zero();
            for t in 1..=(s + 1) {
                t_sum += a.pow(t as i32 - 1) * b.pow((s + 1 - t) as i32);
            }
            let term = t_sum / int(s as i64 + 1);
            if j >= 2 {
                let telescoped = (a.pow(s as i32 + 1) - b.pow(s as i32 + 1))
                    / (int(s as i64 + 1) * (&a - &b));
                assert_eq!(term, telescoped, "telescoping identity at s={s} j={j} l={l}");
            }
            let sign = if (j - l) % 2 == 0 { 1 } else { -1 };
            let coefficient =
                Rational::new(binomial(j as u64, l as i64) * sign, j_factorial.clone());
            bound += coefficient * term;
        }
    }
    LowerBoundResult {
        s,
        comparison: bound.cmp(&row_sum(s)),
        row_sum: row_sum(s),
        bound,
    }
}

/// How one entry's reduced denominator relates to the Gaussian binomials
/// `[s choose m]_2` of its own row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryClassification {
    pub s: u32,
    pub j: u32,
    pub denominator: BigInt,
    /// All `m` with `[s choose m]_2` equal to the denominator.
    pub exact_hits: Vec<u32>,
    /// All `m` with the denominator dividing `[s choose m]_2`; a superset of
    /// the exact hits.
    pub divisor_hits: Vec<u32>,
}

impl EntryClassification {
    /// True when no Gaussian binomial in the row is divisible by the
    /// denominator.
    pub fn is_unmatched(&self) -> bool {
        self.divisor_hits.is_empty()
    }
}

/// Denominator-vs-Gaussian-binomial report over rows `2 ..= max_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub max_s: u32,
    pub entries: Vec<EntryClassification>,
}

impl ConjectureReport {
    /// The distinct denominators that appear verbatim as Gaussian binomials.
    pub fn exact_hit_denominators(&self) -> BTreeSet<BigInt> {
        self.entries
            .iter()
            .filter(|e| !e.exact_hits.is_empty())
            .map(|e| e.denominator.clone())
            .collect()
    }

    /// Positions whose denominator divides no Gaussian binomial of its row.
    pub fn unmatched_positions(&self) -> Vec<(u32, u32)> {
        self.entries
            .iter()
            .filter(|e| e.is_unmatched())
            .map(|e| (e.s, e.j))
            .collect()
    }
}

/// Classifies every entry of rows `2 ..= max_s` against the Gaussian
/// binomials `[s choose m]_2` for `m = 0 ..= s`.
///
/// # Panics
///
/// Panics if `max_s < 2`.
pub fn conjecture_report(max_s: u32) -> ConjectureReport {
    assert!(max_s >= 2, "the triangle starts at s = 2, got max_s={max_s}");
    let mut entries = Vec::new();
    for s in 2..=max_s {
        let gaussians: Vec<BigInt> = (0..=s).map(|m| q_binomial(s, m as i64, 2)).collect();
        for e in row(s) {
            let denominator = e.denominator().clone();
            let exact_hits: Vec<u32> = (0..=s).filter(|&m| gaussians[m as usize] == denominator).collect();
            let divisor_hits: Vec<u32> = (0..=s)
                .filter(|&m| (&gaussians[m as usize] % &denominator).is_zero())
                .collect();
            entries.push(EntryClassification {
                s,
                j: e.j,
                denominator,
                exact_hits,
                divisor_hits,
            });
        }
    }
    ConjectureReport { max_s, entries }
}

/// Which side of each entry goes into a b-file export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequencePart {
    Numerators,
    Denominators,
}

/// Renders rows `2 ..= max_s`, read in row order, as OEIS b-file lines
/// (`index value`, one per line, indexed consecutively from `offset`).
/// Returns the empty string when `max_s < 2`.
pub fn oeis_export(part: SequencePart, max_s: u32, offset: u64) -> String {
    let mut out = String::new();
    if max_s < 2 {
        return out;
    }
    let mut index = offset;
    for entries in rows(max_s) {
        for e in entries {
            let value = match part {
                SequencePart::Numerators => e.numerator(),
                SequencePart::Denominators => e.denominator(),
            };
            out.push_str(&format!("{index} {value}\n"));
            index += 1;
        }
    }
    out
}

/// Parses b-file text: one `index value` pair per line, `#` comment lines
/// and blank lines skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>> {
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(index), Some(value), None) = (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(Error::InvalidInput(format!(
                "line {}: expected `index value`, got {line:?}",
                lineno + 1
            )));
        };
        let index: i64 = index.parse().map_err(|_| {
            Error::InvalidInput(format!("line {}: bad index {index:?}", lineno + 1))
        })?;
        let value: BigInt = value.parse().map_err(|_| {
            Error::InvalidInput(format!("line {}: bad value {value:?}", lineno + 1))
        })?;
        entries.push((index, value));
    }
    Ok(entries)
}
