//! Turán numbers and the two numeric conditions of the spectral criterion.
//!
//! The criterion relates an edge-extremal problem to its signless Laplacian
//! counterpart through two per-`n` inequalities:
//!
//! ```text
//! (1)  | ex(n) - ex(n-1) - pi/(r-1)! n^(r-1) | <= sigma n^(r-1)
//! (2)  | q(H_n) - 2r ex(n)/n |                <= sigma n^(r-2)
//! ```
//!
//! Both are checked here for user-chosen `sigma` and `n` ranges. Passing at
//! desk scale says nothing about the asymptotic thresholds the criterion
//! actually needs; the checkers only report slacks.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::build::binomial;
use crate::scalar::Scalar;
use crate::split::scan_splits;

/// Turán density of the Fano plane.
pub const FANO_DENSITY: f64 = 0.75;

/// `C(n,3) - C(floor(n/2),3) - C(ceil(n/2),3)`, the edge count of `B_n`.
///
/// This is the Turán number of the Fano plane only for sufficiently large
/// `n` (the threshold is not explicit); the formula itself is evaluated for
/// every `n`.
pub fn fano_turan_number(n: u64) -> u64 {
    binomial(n, 3) - binomial(n / 2, 3) - binomial(n.div_ceil(2), 3)
}

/// Lower and upper bounds on `q(B_n)`.
///
/// Even `n`: both equal `3n²/4 - 3n/2`. Odd `n`: the Rayleigh value of the
/// uniform vector, `3n²/4 - 3n/2 - 3/4 + 3/(2n)`, and the two-block bound at
/// the larger part, `3n²/4 - 3n/2 - 1/4`.
pub fn bn_q_bounds<T: Scalar>(n: usize) -> Result<(T, T)> {
    if n < 4 {
        return Err(Error::ArgumentRange(format!("q(B_n) bounds need n >= 4, got {n}")));
    }
    let nn = T::of_usize(n);
    let base = T::lit(0.75) * nn * nn - T::lit(1.5) * nn;
    if n.is_multiple_of(2) {
        Ok((base, base))
    } else {
        Ok((base - T::lit(0.75) + T::lit(1.5) / nn, base - T::lit(0.25)))
    }
}

/// Inputs shared by both criterion conditions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionParams {
    /// Turán density, in `(1/2, 1)`.
    pub pi: f64,
    pub r: usize,
    pub sigma: f64,
    pub n_range: RangeInclusive<u64>,
}

impl CriterionParams {
    pub fn new(pi: f64, r: usize, sigma: f64, n_range: RangeInclusive<u64>) -> Result<Self> {
        if !(pi > 0.5 && pi < 1.0) {
            return Err(Error::ArgumentRange(format!("density {pi} must lie in (1/2, 1)")));
        }
        if r < 2 {
            return Err(Error::ArgumentRange(format!("uniformity {r} must be at least 2")));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::ArgumentRange(format!("sigma {sigma} must be positive")));
        }
        if *n_range.start() < 2 || n_range.is_empty() {
            return Err(Error::ArgumentRange(format!(
                "n range {}..={} must be non-empty and start at 2 or more",
                n_range.start(),
                n_range.end()
            )));
        }
        Ok(Self { pi, r, sigma, n_range })
    }

    /// The Fano instantiation: density 3/4, 3-uniform.
    pub fn fano(sigma: f64, n_range: RangeInclusive<u64>) -> Result<Self> {
        Self::new(FANO_DENSITY, 3, sigma, n_range)
    }
}

/// One `n` of a criterion check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriterionRow {
    pub n: u64,
    pub slack: f64,
    /// Allowed slack, `sigma n^(r-1)` or `sigma n^(r-2)`.
    pub bound: f64,
    pub pass: bool,
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Condition (1): growth of the Turán number versus `pi/(r-1)! n^(r-1)`.
pub fn check_condition1<F>(params: &CriterionParams, ex_fn: F) -> Result<Vec<CriterionRow>>
where
    F: Fn(u64) -> u64,
{
    let r = params.r;
    let coefficient = params.pi / factorial(r - 1);
    Ok(params
        .n_range
        .clone()
        .map(|n| {
            let growth = ex_fn(n) as f64 - ex_fn(n - 1) as f64;
            let scale = (n as f64).powi(r as i32 - 1);
            let slack = (growth - coefficient * scale).abs();
            let bound = params.sigma * scale;
            CriterionRow {
                n,
                slack,
                bound,
                pass: slack <= bound,
            }
        })
        .collect())
}

/// Condition (2): `q(H_n)` versus the average-degree proxy `2r ex(n)/n`.
pub fn check_condition2<Q, F>(params: &CriterionParams, q_fn: Q, ex_fn: F) -> Result<Vec<CriterionRow>>
where
    Q: Fn(u64) -> Result<f64>,
    F: Fn(u64) -> u64,
{
    let r = params.r;
    params
        .n_range
        .clone()
        .map(|n| {
            let proxy = 2.0 * r as f64 * ex_fn(n) as f64 / n as f64;
            let slack = (q_fn(n)? - proxy).abs();
            let bound = params.sigma * (n as f64).powi(r as i32 - 2);
            Ok(CriterionRow {
                n,
                slack,
                bound,
                pass: slack <= bound,
            })
        })
        .collect()
}

/// `q(H_n)` for the Fano family: the best complete 2-colorable split.
pub fn fano_extremal_q(n: u64) -> Result<f64> {
    let n = usize::try_from(n).map_err(|_| Error::ArgumentRange(format!("n = {n} too large")))?;
    Ok(scan_splits::<f64>(n)?.best().q_value)
}
