//! Brute-force maximization of the Rayleigh form, independent of the power
//! iteration.
//!
//! Substituting `u_v = x_v^r` turns the unit sphere into the probability
//! simplex and the form into
//!
//! ```text
//! sum_v d(v) u_v + r sum_e (prod_{v in e} u_v)^(1/r)      (Q)
//! r sum_e (prod_{v in e} u_v)^(1/r)                       (A)
//! ```
//!
//! a linear term plus geometric means, hence concave. The search moves mass
//! between pairs of coordinates, maximizing each 1-D restriction by
//! golden-section search, from several random starting points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{form, Operator, WeightVector};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub restarts: usize,
    /// Full sweeps over all vertex pairs per restart.
    pub steps: usize,
    pub seed: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            restarts: 4,
            steps: 200,
            seed: 0,
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;
const LINE_SEARCH_ITERS: usize = 80;

struct Simplex<'a, T> {
    h: &'a Hypergraph,
    op: Operator,
    u: Vec<T>,
    inv_r: T,
    r: T,
}

impl<'a, T: Scalar> Simplex<'a, T> {
    fn geometric_mean(&self, edge: &[usize], i: usize, ui: T, j: usize, uj: T) -> T {
        let product = edge.iter().fold(T::one(), |acc, &v| {
            let value = if v == i {
                ui
            } else if v == j {
                uj
            } else {
                self.u[v]
            };
            acc * value
        });
        product.max(T::zero()).powf(self.inv_r)
    }

    /// Objective restricted to the edges touching `i` or `j`, after moving `t`
    /// units of mass from `j` to `i`.
    fn pair_objective(&self, edges: &[usize], i: usize, j: usize, t: T) -> T {
        let ui = self.u[i] + t;
        let uj = self.u[j] - t;
        let mut total = T::zero();
        if self.op == Operator::SignlessLaplacian {
            total = T::of_usize(self.h.degree(i)) * ui + T::of_usize(self.h.degree(j)) * uj;
        }
        for &e in edges {
            total = total + self.r * self.geometric_mean(self.h.edge(e), i, ui, j, uj);
        }
        total
    }

    fn sweep(&mut self) {
        let n = self.u.len();
        let ratio = T::lit(INV_PHI);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.clear();
                edges.extend_from_slice(self.h.incident(i));
                edges.extend_from_slice(self.h.incident(j));
                edges.sort_unstable();
                edges.dedup();
                if edges.is_empty() {
                    continue;
                }
                let (mut lo, mut hi) = (-self.u[i], self.u[j]);
                let base = self.pair_objective(&edges, i, j, T::zero());
                let mut c = hi - ratio * (hi - lo);
                let mut d = lo + ratio * (hi - lo);
                let mut fc = self.pair_objective(&edges, i, j, c);
                let mut fd = self.pair_objective(&edges, i, j, d);
                for _ in 0..LINE_SEARCH_ITERS {
                    if fc >= fd {
                        hi = d;
                        d = c;
                        fd = fc;
                        c = hi - ratio * (hi - lo);
                        fc = self.pair_objective(&edges, i, j, c);
                    } else {
                        lo = c;
                        c = d;
                        fc = fd;
                        d = lo + ratio * (hi - lo);
                        fd = self.pair_objective(&edges, i, j, d);
                    }
                }
                // Interior optimum or one of the faces of the simplex.
                let candidates = [(lo + hi) / T::lit(2.0), -self.u[i], self.u[j]];
                let mut best = (T::zero(), base);
                for t in candidates {
                    let value = self.pair_objective(&edges, i, j, t);
                    if value > best.1 {
                        best = (t, value);
                    }
                }
                let t = best.0;
                self.u[i] = (self.u[i] + t).max(T::zero());
                self.u[j] = (self.u[j] - t).max(T::zero());
            }
        }
    }

    fn to_unit_vector(&self) -> Vec<T> {
        let total: T = self.u.iter().copied().sum();
        self.u
            .iter()
            .map(|&v| (v / total).max(T::zero()).powf(self.inv_r))
            .collect()
    }
}

/// Multi-start pairwise coordinate ascent for
/// `max { x^T (T x) : x >= 0, ||x||_r = 1 }`.
///
/// The first restart starts at the uniform vector, later ones at random
/// points of the simplex. Deterministic for a fixed seed. Returns the best
/// value and the unit vector attaining it.
pub fn rayleigh_maximize_bruteforce<T: Scalar>(
    h: &Hypergraph,
    op: Operator,
    opts: &OracleOptions,
) -> Result<(T, WeightVector<T>)> {
    if opts.restarts < 1 {
        return Err(Error::ArgumentRange("restarts must be at least 1".into()));
    }
    let n = h.vertex_count();
    let r = h.uniformity();
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best: Option<(T, Vec<T>)> = None;
    for restart in 0..opts.restarts {
        let start: Vec<T> = if restart == 0 {
            vec![T::one() / T::of_usize(n); n]
        } else {
            let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
            let total: f64 = raw.iter().sum();
            raw.iter().map(|&v| T::lit(v / total)).collect()
        };
        let mut simplex = Simplex {
            h,
            op,
            u: start,
            inv_r: T::one() / T::of_usize(r),
            r: T::of_usize(r),
        };
        let mut value = form(h, op, &simplex.to_unit_vector())?;
        for _ in 0..opts.steps {
            simplex.sweep();
            let next = form(h, op, &simplex.to_unit_vector())?;
            let improved = next - value;
            value = value.max(next);
            if improved <= T::epsilon() * value.abs().max(T::one()) {
                break;
            }
        }
        let x = simplex.to_unit_vector();
        let value = form(h, op, &x)?;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, x));
        }
    }
    let (value, x) = best.expect("at least one restart");
    Ok((value, WeightVector::new(x)?))
}
