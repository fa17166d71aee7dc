use crate::hypergraph::Hypergraph;
use crate::scalar::{powu, Scalar};

use super::{apply_into, Operator};

/// Collatz–Wielandt bounds at one iterate, already un-shifted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket<T> {
    pub lower: T,
    pub upper: T,
    /// Rayleigh value `x^T (T x)` at the iterate, clamped into the bracket.
    pub estimate: T,
}

impl<T: Scalar> Bracket<T> {
    pub fn gap(&self) -> T {
        self.upper - self.lower
    }
}

/// Shifted power iteration for a nonnegative tensor on one connected
/// hypergraph.
///
/// With `y = T(x) + shift x^[r-1]` the ratios `y_i / x_i^(r-1)` bracket
/// `rho(T) + shift` for every positive `x`, and the next iterate is
/// `y^[1/(r-1)]` rescaled to unit `r`-norm. A positive shift makes the
/// shifted tensor primitive on connected inputs, which is what the iteration
/// needs to converge; the lower bound never decreases and the upper bound
/// never increases along the way.
pub struct PowerIteration<'a, T> {
    h: &'a Hypergraph,
    op: Operator,
    shift: T,
    x: Vec<T>,
    y: Vec<T>,
    iterations: usize,
    evaluated: bool,
}

impl<'a, T: Scalar> PowerIteration<'a, T> {
    /// Starts from the uniform unit vector.
    pub fn new(h: &'a Hypergraph, op: Operator, shift: T) -> Self {
        let n = h.vertex_count();
        let start = super::WeightVector::uniform(n, h.uniformity()).into_inner();
        Self {
            h,
            op,
            shift,
            x: start,
            y: vec![T::zero(); n],
            iterations: 0,
            evaluated: false,
        }
    }

    /// Number of iterates whose bracket has been evaluated.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Current iterate (unit `r`-norm).
    pub fn current(&self) -> &[T] {
        &self.x
    }

    fn evaluate(&mut self) {
        if self.evaluated {
            return;
        }
        apply_into(self.h, self.op, &self.x, &mut self.y);
        let r1 = self.h.uniformity() - 1;
        for (yi, &xi) in self.y.iter_mut().zip(&self.x) {
            *yi = *yi + self.shift * powu(xi, r1);
        }
        self.iterations += 1;
        self.evaluated = true;
    }

    /// Bracket at the current iterate.
    pub fn bracket(&mut self) -> Bracket<T> {
        self.evaluate();
        let r1 = self.h.uniformity() - 1;
        let mut lower = T::infinity();
        let mut upper = T::neg_infinity();
        let mut rayleigh = T::zero();
        for (&yi, &xi) in self.y.iter().zip(&self.x) {
            let denom = powu(xi, r1);
            let ratio = if denom > T::zero() { yi / denom } else { T::infinity() };
            lower = lower.min(ratio);
            upper = upper.max(ratio);
            rayleigh = rayleigh + xi * yi;
        }
        let lower = lower - self.shift;
        let upper = upper - self.shift;
        Bracket {
            lower,
            upper,
            estimate: (rayleigh - self.shift).max(lower).min(upper),
        }
    }

    /// Moves to the next iterate.
    pub fn advance(&mut self) {
        self.evaluate();
        let r = self.h.uniformity();
        let root = T::one() / T::of_usize(r - 1);
        for (xi, &yi) in self.x.iter_mut().zip(&self.y) {
            *xi = if r == 2 { yi } else { yi.max(T::zero()).powf(root) };
        }
        let norm: T = self
            .x
            .iter()
            .map(|&v| powu(v, r))
            .sum::<T>()
            .powf(T::one() / T::of_usize(r));
        if norm > T::zero() {
            for xi in &mut self.x {
                *xi = *xi / norm;
            }
        }
        self.evaluated = false;
    }
}
