//! Adjacency and signless Laplacian tensors of a uniform hypergraph, applied
//! implicitly to weight vectors, and their spectral radii.
//!
//! For an `r`-graph the adjacency tensor has entry `1/(r-1)!` on every index
//! tuple spelling an edge. Each edge containing `i` is spelled by `(r-1)!`
//! orderings of the other indices, so the coefficient cancels and
//!
//! ```text
//! (A x)_i = sum over edges e containing i of prod_{v in e, v != i} x_v
//! (Q x)_i = d(i) x_i^(r-1) + (A x)_i
//! ```
//!
//! Both tensors are nonnegative and symmetric, and weakly irreducible exactly
//! on connected hypergraphs. The spectral radius is computed per connected
//! component by shifted power iteration with a Collatz–Wielandt bracket
//! (see [`PowerIteration`]).

mod oracle;
mod power;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::{powu, Scalar};

pub use oracle::{rayleigh_maximize_bruteforce, OracleOptions};
pub use power::{Bracket, PowerIteration};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Operator {
    /// `A(H)`, spectral radius `λ(H)`.
    Adjacency,
    /// `Q(H) = D(H) + A(H)`, spectral radius `q(H)`.
    SignlessLaplacian,
}

impl Operator {
    /// Diagonal shift used when the caller does not pick one. The adjacency
    /// tensor has a zero diagonal and its unshifted iteration can oscillate on
    /// bipartite-like inputs; `Q` already has a positive diagonal.
    pub fn default_shift<T: Scalar>(self) -> T {
        match self {
            Operator::Adjacency => T::one(),
            Operator::SignlessLaplacian => T::zero(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Operator::Adjacency => "adjacency",
            Operator::SignlessLaplacian => "signless_laplacian",
        }
    }
}

/// Per-vertex real weights.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct WeightVector<T>(Vec<T>);

impl<T: Scalar> WeightVector<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self(values))
    }

    pub fn filled(n: usize, value: T) -> Self {
        Self(vec![value; n])
    }

    /// Constant vector of unit `r`-norm, `n^(-1/r)` in every entry.
    pub fn uniform(n: usize, r: usize) -> Self {
        if n == 0 {
            return Self(Vec::new());
        }
        let entry = T::of_usize(n).powf(-T::one() / T::of_usize(r));
        Self(vec![entry; n])
    }

    #[inline]
    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(sum |x_i|^r)^(1/r)`.
    pub fn r_norm(&self, r: usize) -> T {
        let sum: T = self.0.iter().map(|&v| powu(v.abs(), r)).sum();
        sum.powf(T::one() / T::of_usize(r))
    }

    /// Rescaled to unit `r`-norm. The zero vector is returned unchanged.
    pub fn normalized(&self, r: usize) -> Self {
        let norm = self.r_norm(r);
        if norm == T::zero() {
            return self.clone();
        }
        self.scaled(norm.recip())
    }

    pub fn scaled(&self, factor: T) -> Self {
        Self(self.0.iter().map(|&v| v * factor).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= T::zero())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&v| v > T::zero())
    }

    pub fn min(&self) -> Option<T> {
        self.0.iter().copied().reduce(T::min)
    }
}

impl<T> std::ops::Index<usize> for WeightVector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

/// Outcome of [`spectral_radius`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult<T> {
    pub rho: T,
    /// Collatz–Wielandt bracket at the final iterate.
    pub lower: T,
    pub upper: T,
    /// Unit `r`-norm, supported on the winning component.
    pub eigenvector: WeightVector<T>,
    pub iterations: usize,
    /// `max_i |T(x)_i - rho x_i^(r-1)|`.
    pub residual: T,
    pub converged: bool,
}

impl<T: Scalar> SpectralResult<T> {
    /// Turns a non-converged result into [`Error::IterationLimit`].
    pub fn into_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::IterationLimit {
                iterations: self.iterations,
                lower: self.lower.to_f64_lossy(),
                upper: self.upper.to_f64_lossy(),
            })
        }
    }

    pub fn gap(&self) -> T {
        self.upper - self.lower
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions<T> {
    pub tol: T,
    pub max_iter: usize,
    /// `None` picks [`Operator::default_shift`].
    pub shift: Option<T>,
}

impl<T: Scalar> Default for SpectralOptions<T> {
    fn default() -> Self {
        Self {
            tol: T::lit(1e-10),
            max_iter: 100_000,
            shift: None,
        }
    }
}

impl<T: Scalar> SpectralOptions<T> {
    pub fn with_tol(tol: T) -> Self {
        Self { tol, ..Self::default() }
    }
}

fn check_len<T>(h: &Hypergraph, x: &[T]) -> Result<()> {
    if x.len() != h.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: h.vertex_count(),
            found: x.len(),
        });
    }
    Ok(())
}

/// Product of `x` over `edge` with position `skip` left out.
#[inline]
fn product_except<T: Scalar>(x: &[T], edge: &[usize], skip: usize) -> T {
    edge.iter()
        .enumerate()
        .filter(|&(k, _)| k != skip)
        .fold(T::one(), |acc, (_, &v)| acc * x[v])
}

pub(crate) fn apply_into<T: Scalar>(h: &Hypergraph, op: Operator, x: &[T], out: &mut [T]) {
    out.iter_mut().for_each(|o| *o = T::zero());
    for edge in h.edges() {
        for (k, &i) in edge.iter().enumerate() {
            out[i] = out[i] + product_except(x, edge, k);
        }
    }
    if op == Operator::SignlessLaplacian {
        let r1 = h.uniformity() - 1;
        for (i, o) in out.iter_mut().enumerate() {
            *o = *o + T::of_usize(h.degree(i)) * powu(x[i], r1);
        }
    }
}

/// `T(x)` for the chosen operator.
pub fn apply<T: Scalar>(h: &Hypergraph, op: Operator, x: &WeightVector<T>) -> Result<WeightVector<T>> {
    check_len(h, x.values())?;
    let mut out = vec![T::zero(); x.len()];
    apply_into(h, op, x.values(), &mut out);
    Ok(WeightVector(out))
}

/// `A(H) x`.
pub fn apply_adjacency<T: Scalar>(h: &Hypergraph, x: &WeightVector<T>) -> Result<WeightVector<T>> {
    apply(h, Operator::Adjacency, x)
}

/// `Q(H) x = D(H) x + A(H) x`.
pub fn apply_signless_laplacian<T: Scalar>(h: &Hypergraph, x: &WeightVector<T>) -> Result<WeightVector<T>> {
    apply(h, Operator::SignlessLaplacian, x)
}

/// The homogeneous form `x^T (T x)` without any normalization check.
///
/// For `Q` this is `sum_e (sum_{v in e} x_v^r + r prod_{v in e} x_v)`, for
/// `A` only the product part.
pub fn form<T: Scalar>(h: &Hypergraph, op: Operator, x: &[T]) -> Result<T> {
    check_len(h, x)?;
    let r = h.uniformity();
    let rr = T::of_usize(r);
    Ok(h.edges()
        .iter()
        .map(|edge| {
            let product = edge.iter().fold(T::one(), |acc, &v| acc * x[v]);
            let mut term = rr * product;
            if op == Operator::SignlessLaplacian {
                term = term + edge.iter().map(|&v| powu(x[v], r)).sum::<T>();
            }
            term
        })
        .sum())
}

fn normalization_tolerance<T: Scalar>() -> T {
    T::lit(1e-9).max(T::epsilon() * T::lit(64.0))
}

fn check_unit_nonnegative<T: Scalar>(h: &Hypergraph, x: &WeightVector<T>) -> Result<()> {
    check_len(h, x.values())?;
    if let Some(index) = x.values().iter().position(|&v| v < T::zero()) {
        return Err(Error::NegativeEntry { index });
    }
    let norm = x.r_norm(h.uniformity());
    if (norm - T::one()).abs() > normalization_tolerance() {
        return Err(Error::NotNormalized {
            norm: norm.to_f64_lossy(),
        });
    }
    Ok(())
}

/// Rayleigh value of `Q(H)` at a nonnegative unit vector; a lower bound for `q(H)`.
pub fn rayleigh_q<T: Scalar>(h: &Hypergraph, x: &WeightVector<T>) -> Result<T> {
    rayleigh(h, Operator::SignlessLaplacian, x)
}

/// Rayleigh value `x^T (T x)` at a nonnegative unit vector.
pub fn rayleigh<T: Scalar>(h: &Hypergraph, op: Operator, x: &WeightVector<T>) -> Result<T> {
    check_unit_nonnegative(h, x)?;
    form(h, op, x.values())
}

/// `max_i |T(x)_i - rho x_i^(r-1)|`.
pub fn eigen_residual<T: Scalar>(h: &Hypergraph, rho: T, x: &WeightVector<T>, op: Operator) -> Result<T> {
    let tx = apply(h, op, x)?;
    let r1 = h.uniformity() - 1;
    Ok(tx
        .values()
        .iter()
        .zip(x.values())
        .map(|(&t, &xi)| (t - rho * powu(xi, r1)).abs())
        .fold(T::zero(), T::max))
}

struct ComponentRun<T> {
    vertices: Vec<usize>,
    bracket: Bracket<T>,
    eigenvector: Vec<T>,
    iterations: usize,
    converged: bool,
}

fn run_component<T: Scalar>(
    h: &Hypergraph,
    vertices: Vec<usize>,
    op: Operator,
    shift: T,
    opts: &SpectralOptions<T>,
) -> Result<ComponentRun<T>> {
    let sub = h.induced(&vertices)?;
    let mut iteration = PowerIteration::new(&sub, op, shift);
    loop {
        let bracket = iteration.bracket();
        let converged = bracket.gap() <= opts.tol * bracket.upper.max(T::one());
        if converged || iteration.iterations() >= opts.max_iter {
            return Ok(ComponentRun {
                vertices,
                bracket,
                eigenvector: iteration.current().to_vec(),
                iterations: iteration.iterations(),
                converged,
            });
        }
        iteration.advance();
    }
}

/// Spectral radius of `A(H)` or `Q(H)`.
///
/// Each connected component with at least one edge runs its own bracketed
/// power iteration from the uniform vector; edgeless components contribute
/// zero. The reported radius and eigenvector come from the component with
/// the largest estimate (the lowest-indexed one on ties, within `tol`). The
/// bracket is the componentwise maximum of lower and upper bounds, so it
/// contains the spectral radius of the whole tensor.
///
/// Hitting `max_iter` is not an error: the result carries `converged =
/// false` and the best bracket so far. Use
/// [`SpectralResult::into_converged`] to treat it as one.
pub fn spectral_radius<T: Scalar>(
    h: &Hypergraph,
    op: Operator,
    opts: &SpectralOptions<T>,
) -> Result<SpectralResult<T>> {
    let shift = opts.shift.unwrap_or_else(|| op.default_shift());
    if !(opts.tol.is_finite() && opts.tol > T::zero()) {
        return Err(Error::ArgumentRange(format!("tol = {} must be positive", opts.tol)));
    }
    if opts.max_iter < 1 {
        return Err(Error::ArgumentRange("max_iter must be at least 1".into()));
    }
    if !(shift.is_finite() && shift >= T::zero()) {
        return Err(Error::ArgumentRange(format!("shift = {shift} must be non-negative")));
    }

    let n = h.vertex_count();
    let r = h.uniformity();
    if h.edge_count() == 0 {
        return Ok(SpectralResult {
            rho: T::zero(),
            lower: T::zero(),
            upper: T::zero(),
            eigenvector: WeightVector::uniform(n, r),
            iterations: 0,
            residual: T::zero(),
            converged: true,
        });
    }

    let mut runs = Vec::new();
    for component in h.components() {
        if component.len() > 1 {
            runs.push(run_component(h, component, op, shift, opts)?);
        }
    }

    let mut winner = 0;
    for (i, run) in runs.iter().enumerate().skip(1) {
        let best = runs[winner].bracket.estimate;
        if run.bracket.estimate > best + opts.tol * best.max(T::one()) {
            winner = i;
        }
    }

    let lower = runs.iter().map(|c| c.bracket.lower).fold(T::zero(), T::max);
    let upper = runs.iter().map(|c| c.bracket.upper).fold(T::zero(), T::max);
    let rho = runs[winner].bracket.estimate.max(lower).min(upper);

    let mut eigenvector = vec![T::zero(); n];
    for (&v, &value) in runs[winner].vertices.iter().zip(&runs[winner].eigenvector) {
        eigenvector[v] = value;
    }
    let eigenvector = WeightVector(eigenvector);
    let residual = eigen_residual(h, rho, &eigenvector, op)?;

    Ok(SpectralResult {
        rho,
        lower,
        upper,
        eigenvector,
        iterations: runs.iter().map(|c| c.iterations).sum(),
        residual,
        converged: runs.iter().all(|c| c.converged),
    })
}

/// `q(H)` with default options.
pub fn signless_laplacian_radius<T: Scalar>(h: &Hypergraph) -> Result<SpectralResult<T>> {
    spectral_radius(h, Operator::SignlessLaplacian, &SpectralOptions::default())
}
