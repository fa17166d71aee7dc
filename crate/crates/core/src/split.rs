//! Signless Laplacian spectral radius of complete 2-colorable 3-graphs via
//! their two-block reduction.
//!
//! On the complete 2-colorable 3-graph with parts of sizes `a` and `b` the
//! principal eigenvector is constant on each part, say `x` and `y` with
//! `a x³ + b y³ = 1`. Writing `u = x³`, `v = y³`, the Rayleigh value becomes
//!
//! ```text
//! C'(a,b,u,v) = b C(a,2) (2u + v + 3 u^(2/3) v^(1/3))
//!             + a C(b,2) (2v + u + 3 u^(1/3) v^(2/3))
//! ```
//!
//! which is concave along the constraint line, so its maximum over
//! `u in (0, 1/a)` is found by golden-section search.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const GOLDEN_BUDGET: usize = 200;
const BRACKET_MARGIN: f64 = 1e-12;

fn pairs<T: Scalar>(k: usize) -> T {
    T::of_usize(k * k.saturating_sub(1) / 2)
}

/// `C'(a, b, u, v)`.
pub fn two_block_objective<T: Scalar>(a: usize, b: usize, u: T, v: T) -> T {
    let third = T::one() / T::lit(3.0);
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let u13 = u.max(T::zero()).powf(third);
    let v13 = v.max(T::zero()).powf(third);
    T::of_usize(b) * pairs::<T>(a) * (two * u + v + three * u13 * u13 * v13)
        + T::of_usize(a) * pairs::<T>(b) * (two * v + u + three * u13 * v13 * v13)
}

/// `C(a, b, x, y)`: the same quantity in terms of the block entries.
pub fn two_block_form<T: Scalar>(a: usize, b: usize, x: T, y: T) -> T {
    let (x3, y3) = (x * x * x, y * y * y);
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    T::of_usize(b) * pairs::<T>(a) * (two * x3 + y3 + three * x * x * y)
        + T::of_usize(a) * pairs::<T>(b) * (two * y3 + x3 + three * x * y * y)
}

/// `3n²/4 - 3n/2 - (a - n/2)²`, the upper bound on `q` of the complete
/// 2-colorable 3-graph with a part of size `a`.
pub fn split_upper_bound<T: Scalar>(n: usize, a: usize) -> T {
    let nn = T::of_usize(n);
    let offset = T::of_usize(a) - nn / T::lit(2.0);
    T::lit(0.75) * nn * nn - T::lit(1.5) * nn - offset * offset
}

/// `t = (n - 5) / (2n - 4)`, the exponent parameter of the split bound.
pub fn bernoulli_parameter<T: Scalar>(n: usize) -> T {
    (T::of_usize(n) - T::lit(5.0)) / (T::lit(2.0) * T::of_usize(n) - T::lit(4.0))
}

/// `R_1(a, b, t)`: the `u`-coefficient of the weighted AM-GM relaxation of
/// `C'` divided by `a`. `q <= max(R_1(a,b,t), R_1(b,a,t))`.
pub fn split_ratio_bound<T: Scalar>(a: usize, b: usize, t: T) -> T {
    let s = (T::of_usize(a) / T::of_usize(b)).powf((t + T::one()) / T::lit(3.0));
    let two = T::lit(2.0);
    (T::of_usize(b) * pairs::<T>(a) * (two + two * s) + T::of_usize(a) * pairs::<T>(b) * (T::one() + s * s))
        / T::of_usize(a)
}

/// Maximizes a concave function on `[lo, hi]` by golden-section search.
///
/// Stops once the bracket is narrower than `xtol`; returns the argmax
/// estimate and its value.
pub fn golden_section_max<T, F>(f: F, mut lo: T, mut hi: T, xtol: T, max_iter: usize) -> Result<(T, T)>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let ratio = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);
    let mut c = hi - ratio * (hi - lo);
    let mut d = lo + ratio * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..max_iter {
        if hi - lo <= xtol {
            let x = (lo + hi) / T::lit(2.0);
            return Ok((x, f(x)));
        }
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = f(d);
        }
    }
    Err(Error::NoConvergence { iterations: max_iter })
}

/// Optimal block weights for one split `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitProfile<T> {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    /// `x³`, the cube of the part-1 eigenvector entry.
    pub u: T,
    /// `y³`.
    pub v: T,
    /// Maximum of `C'`, equal to `q` of the split's complete 3-graph.
    pub q_value: T,
    pub x: T,
    pub y: T,
}

impl<T: Scalar> SplitProfile<T> {
    /// `a u + b v`, which is 1 for a valid profile.
    pub fn constraint(&self) -> T {
        T::of_usize(self.a) * self.u + T::of_usize(self.b) * self.v
    }

    pub fn upper_bound(&self) -> T {
        split_upper_bound(self.n, self.a)
    }

    /// Block eigenvector expanded to all `n` vertices, part 1 first.
    pub fn eigenvector(&self) -> Vec<T> {
        std::iter::repeat_n(self.x, self.a)
            .chain(std::iter::repeat_n(self.y, self.b))
            .collect()
    }
}

/// `q` of the complete 2-colorable 3-graph with parts `(a, b)`.
pub fn two_block_q<T: Scalar>(a: usize, b: usize) -> Result<SplitProfile<T>> {
    if a < 1 || b < 1 || a + b < 3 {
        return Err(Error::ArgumentRange(format!(
            "two-block split needs a, b >= 1 and a + b >= 3, got ({a}, {b})"
        )));
    }
    let aa = T::of_usize(a);
    let bb = T::of_usize(b);
    let objective = |u: T| two_block_objective(a, b, u, (T::one() - aa * u) / bb);
    let hi = aa.recip();
    let margin = T::lit(BRACKET_MARGIN).min(hi / T::lit(4.0));
    let xtol = T::epsilon() * T::lit(8.0) * hi;
    let (u, q_value) = golden_section_max(objective, margin, hi - margin, xtol, GOLDEN_BUDGET)?;
    let v = (T::one() - aa * u) / bb;
    let third = T::one() / T::lit(3.0);
    Ok(SplitProfile {
        n: a + b,
        a,
        b,
        u,
        v,
        q_value,
        x: u.powf(third),
        y: v.powf(third),
    })
}

/// Profiles for every split of `n` vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitScan<T> {
    pub n: usize,
    /// Indexed by `a - 1`.
    pub profiles: Vec<SplitProfile<T>>,
    pub best_a: usize,
}

impl<T: Scalar> SplitScan<T> {
    pub fn best(&self) -> &SplitProfile<T> {
        &self.profiles[self.best_a - 1]
    }

    pub fn profile(&self, a: usize) -> Option<&SplitProfile<T>> {
        a.checked_sub(1).and_then(|i| self.profiles.get(i))
    }

    /// `|best_a - n/2| <= 1/2`.
    pub fn is_balanced(&self) -> bool {
        (2 * self.best_a).abs_diff(self.n) <= 1
    }
}

/// Scans `a = 1..n-1` and picks the split with the largest `q`.
///
/// Values within a relative `1e-9` of the maximum count as ties, resolved
/// toward `a = ceil(n/2)` (and then toward the split closest to it).
pub fn scan_splits<T: Scalar>(n: usize) -> Result<SplitScan<T>> {
    if n < 4 {
        return Err(Error::ArgumentRange(format!("split scan needs n >= 4, got {n}")));
    }
    let profiles = (1..n).map(|a| two_block_q::<T>(a, n - a)).collect::<Result<Vec<_>>>()?;
    let top = profiles.iter().map(|p| p.q_value).fold(T::neg_infinity(), T::max);
    let tie = T::lit(1e-9) * top.abs().max(T::one());
    let target = n.div_ceil(2);
    let best_a = profiles
        .iter()
        .filter(|p| p.q_value >= top - tie)
        .min_by_key(|p| (p.a.abs_diff(target), std::cmp::Reverse(p.a)))
        .map(|p| p.a)
        .expect("at least one split");
    Ok(SplitScan { n, profiles, best_a })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use approx::assert_relative_eq;

    use super::*;

    #[test]
    fn symmetric_splits() {
        let p = two_block_q::<f64>(2, 2).unwrap();
        assert_relative_eq!(p.q_value, 6.0, max_relative = 1e-12);
        assert_relative_eq!(p.u, 0.25, max_relative = 1e-6);
        assert_relative_eq!(p.v, 0.25, max_relative = 1e-6);

        let p = two_block_q::<f64>(4, 4).unwrap();
        assert_relative_eq!(p.q_value, 36.0, max_relative = 1e-12);
        assert_relative_eq!(p.u, 0.125, max_relative = 1e-6);
    }

    #[test]
    fn unbalanced_splits_match_offline_values() {
        // Computed independently to 20 digits by root-finding on dC'/du.
        for (a, b, q) in [
            (5, 4, 46.881_063_880_271_487),
            (1, 3, 4.675_888_669_572_704),
            (3, 2, 10.899_710_195_949_175),
            (5, 6, 73.878_896_895_953_492),
        ] {
            let p = two_block_q::<f64>(a, b).unwrap();
            assert_relative_eq!(p.q_value, q, max_relative = 1e-13);
            let (lo, hi) = crate::turan::bn_q_bounds::<f64>(9).unwrap();
            if a + b == 9 {
                assert!(lo <= p.q_value && p.q_value <= hi);
            }
        }
    }

    #[test]
    fn profile_invariants() {
        for (a, b) in [(1, 2), (2, 1), (7, 3), (10, 10), (1, 20)] {
            let p = two_block_q::<f64>(a, b).unwrap();
            assert!((p.constraint() - 1.0).abs() <= 1e-10);
            assert!(p.u > 0.0 && p.v > 0.0);
            assert!(p.q_value <= p.upper_bound() + 1e-6);
            assert_relative_eq!(two_block_form(a, b, p.x, p.y), p.q_value, max_relative = 1e-12);
        }
    }

    #[test]
    fn relaxation_bound_chain() {
        for n in 4..=40 {
            let t = bernoulli_parameter::<f64>(n);
            for a in 1..n {
                let q = two_block_q::<f64>(a, n - a).unwrap().q_value;
                let relaxed = split_ratio_bound(a, n - a, t).max(split_ratio_bound(n - a, a, t));
                assert!(q <= relaxed + 1e-9, "n = {n}, a = {a}");
                assert!(relaxed <= split_upper_bound::<f64>(n, a) + 1e-9, "n = {n}, a = {a}");
            }
        }
    }

    #[test]
    fn swap_symmetry() {
        for (a, b) in [(1, 5), (3, 8), (6, 7)] {
            let p = two_block_q::<f64>(a, b).unwrap();
            let q = two_block_q::<f64>(b, a).unwrap();
            assert!((p.q_value - q.q_value).abs() <= 1e-9);
        }
    }

    #[test]
    fn scan_examples() {
        assert_eq!(scan_splits::<f64>(8).unwrap().best_a, 4);
        let s9 = scan_splits::<f64>(9).unwrap();
        assert_eq!(s9.best_a, 5);
        assert!((s9.profile(4).unwrap().q_value - s9.profile(5).unwrap().q_value).abs() < 1e-9);
        let s4 = scan_splits::<f64>(4).unwrap();
        assert_eq!(s4.best_a, 2);
        assert!(s4.profile(1).unwrap().q_value < s4.best().q_value);
        assert!(s4.is_balanced());
    }

    #[test]
    fn argument_errors() {
        assert!(two_block_q::<f64>(0, 3).is_err());
        assert!(two_block_q::<f64>(1, 1).is_err());
        assert!(scan_splits::<f64>(3).is_err());
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        let (x, fx) = golden_section_max(|x: f64| -(x - 0.3) * (x - 0.3) + 2.0, 0.0, 1.0, 1e-12, 200).unwrap();
        // The argmax is only determined to about sqrt(eps) on a flat peak.
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 2.0).abs() < 1e-15);
        assert_eq!(
            golden_section_max(|x: f64| x, 0.0, 1.0, 0.0, 10).unwrap_err(),
            Error::NoConvergence { iterations: 10 }
        );
    }

    #[test]
    fn single_precision_profile() {
        let p = two_block_q::<f32>(4, 4).unwrap();
        assert!((p.q_value - 36.0).abs() < 1e-3);
    }
}
