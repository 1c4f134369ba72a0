//! Exact arithmetic for the dyadic exhaustion of the curves `y = x^s` and the
//! minimal-cover combinatorics that organizes it.
//!
//! Inscribing triangles on successively halved grids exhausts the region
//! between a chord and the curve `y = x^s`; for `s = 2` this is the classical
//! quadrature of the parabola, and the areas added at each step form exact
//! geometric data. Splitting the same areas along the Hearne–Wagner counts of
//! minimal `j`-covers of an `s`-set produces a triangle of rationals whose
//! reduced denominators show a striking affinity with Gaussian binomial
//! coefficients at `q = 2`. This crate computes all of it exactly:
//!
//! - [`exactnum`]: arbitrary-precision rationals, dense rational polynomials,
//!   power-sum (Faulhaber) polynomials, and closed-form geometric tails.
//! - [`combinatorics`]: binomials, Stirling set numbers, minimal-cover counts
//!   `M(s,j,k)`, their generating polynomials, and `q`-binomials.
//! - [`covers`]: brute-force enumeration of minimal covers over bitmask
//!   families, classified by the number of uniquely covered elements.
//! - [`quadrature`]: inscribed-triangle areas on dyadic grids, per-iteration
//!   sums, and the exhaustion series with its exact tail.
//! - [`triangle`]: the triangle of rationals `R(s,j)`, truncations with exact
//!   tails, row sums, an integral lower bound, the `q`-binomial denominator
//!   report, and OEIS b-file export.
//! - [`output`]: deterministic table/CSV/JSON rendering for the CLI.
//!
//! Every quantity is an exact integer or rational; there is no floating point
//! anywhere in the crate. Results of division-free operations are plain
//! values, and fallible operations return [`enum@Error`].

use num_bigint::BigInt;
use thiserror::Error;

pub mod combinatorics;
pub mod covers;
pub mod exactnum;
pub mod output;
pub mod quadrature;
pub mod triangle;

/// Errors surfaced by fallible operations.
///
/// Precondition violations on in-range arguments (for example `entry(1, 1)`)
/// panic instead: they are caller bugs, not runtime conditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division by a zero rational.
    #[error("division by zero")]
    DivisionByZero,

    /// `geo_tail(e)` requires `e <= -1`; the series diverges otherwise.
    #[error("geometric series with ratio 2^{0} diverges; need exponent <= -1")]
    DivergentSeries(i64),

    /// Triangle apex `k = 0` has no left neighbor on the grid.
    #[error("apex index k must be at least 1")]
    ApexOutOfRange,

    /// An enumeration would scan more candidate families than the desk-scale
    /// ceiling allows. Carries the exact search-space size.
    #[error("search space C(2^{s} - 1, {j}) = {space} exceeds the ceiling {ceiling}; \
             enable the override to enumerate anyway")]
    SearchSpaceExceeded {
        s: u32,
        j: u32,
        space: BigInt,
        ceiling: BigInt,
    },

    /// Malformed input to a constructor or parser.
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
