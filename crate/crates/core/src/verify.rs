//! Desk-scale checks of the vertex-deletion inequality and of the
//! extremality of `B_n` among Fano-free 3-graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{build, Hypergraph};
use crate::random::{random_permutation, random_two_colorable};
use crate::scalar::{powu, Scalar};
use crate::spectral::{spectral_radius, Operator, SpectralOptions};
use crate::turan::fano_turan_number;

/// Outcome of [`check_deletion_lemma`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeletionCheck<T> {
    /// Deleted vertex: the lowest-indexed minimum entry of the principal eigenvector.
    pub w: usize,
    pub x_w: T,
    pub q: T,
    /// `q(H - w)`.
    pub lhs: T,
    /// `(1 - r x_w^r)/(1 - x_w^r) q(H) - n^(r-2)/(r-2)! (1 - (n-1) x_w^r)/(1 - x_w^r)`.
    pub rhs: T,
    pub pass: bool,
}

/// Right-hand side of the deletion inequality for given `q(H)`, `x_w`, `n`, `r`.
pub fn deletion_bound<T: Scalar>(q: T, x_w: T, n: usize, r: usize) -> T {
    let s = powu(x_w, r);
    let one = T::one();
    let falling: T = (1..=r.saturating_sub(2)).map(T::of_usize).fold(one, |acc, k| acc * k);
    let scale = powu(T::of_usize(n), r - 2) / falling;
    (one - T::of_usize(r) * s) / (one - s) * q - scale * (one - T::of_usize(n - 1) * s) / (one - s)
}

/// Checks `q(H - w) >= rhs - tol` where `w` minimizes the principal eigenvector.
pub fn check_deletion_lemma<T: Scalar>(h: &Hypergraph, tol: T) -> Result<DeletionCheck<T>> {
    check_deletion_lemma_with(h, tol, &SpectralOptions::default())
}

pub fn check_deletion_lemma_with<T: Scalar>(
    h: &Hypergraph,
    tol: T,
    opts: &SpectralOptions<T>,
) -> Result<DeletionCheck<T>> {
    let r = h.uniformity();
    if r < 3 {
        return Err(Error::TooSmall(format!("uniformity {r} < 3")));
    }
    if h.edge_count() < 2 {
        return Err(Error::TooSmall(format!("{} edges, need at least 2", h.edge_count())));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let full = spectral_radius(h, Operator::SignlessLaplacian, opts)?.into_converged()?;
    let x = full.eigenvector.values();
    let min = full.eigenvector.min().expect("non-empty");
    let w = x
        .iter()
        .position(|&v| v <= min + min * T::lit(1e-12))
        .expect("minimum is attained");
    let x_w = x[w];
    let reduced = h.delete_vertex(w)?;
    let lhs = spectral_radius(&reduced, Operator::SignlessLaplacian, opts)?
        .into_converged()?
        .rho;
    let rhs = deletion_bound(full.rho, x_w, h.vertex_count(), r);
    Ok(DeletionCheck {
        w,
        x_w,
        q: full.rho,
        lhs,
        rhs,
        pass: lhs >= rhs - tol,
    })
}

/// Where a competitor in [`verify_extremality`] came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CompetitorKind {
    UnbalancedSplit { a: usize, b: usize },
    EdgeDeletion { removed: usize },
    RandomTwoColorable { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Competitor<T> {
    #[serde(flatten)]
    pub kind: CompetitorKind,
    pub edges: usize,
    pub q: T,
    /// `q(B_n) - q`.
    pub margin: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalityReport<T> {
    pub n: usize,
    pub q_bn: T,
    /// `q` of a randomly relabeled copy of `B_n`.
    pub q_bn_relabeled: T,
    pub competitors: Vec<Competitor<T>>,
}

impl<T: Scalar> ExtremalityReport<T> {
    pub fn max_competitor(&self) -> Option<&Competitor<T>> {
        self.competitors
            .iter()
            .max_by(|a, b| a.q.partial_cmp(&b.q).unwrap_or(std::cmp::Ordering::Equal))
    }

    pub fn min_margin(&self) -> T {
        self.competitors.iter().map(|c| c.margin).fold(T::infinity(), T::min)
    }

    /// `|q(relabeled B_n) - q(B_n)|`.
    pub fn self_gap(&self) -> T {
        (self.q_bn_relabeled - self.q_bn).abs()
    }

    /// Every competitor strictly below `q(B_n)` by more than `margin`, and
    /// the relabeled copy equal to within `equality_tol`.
    pub fn passes(&self, margin: T, equality_tol: T) -> bool {
        self.min_margin() > margin && self.self_gap() <= equality_tol
    }
}

/// Compares `q(B_n)` against Fano-free competitors: every unbalanced complete
/// split, and `samples` seeded random 2-colorable 3-graphs (alternately
/// `B_n` with random edges removed, and random subgraphs of random complete
/// splits). 2-colorable 3-graphs cannot contain the Fano plane. Candidates
/// isomorphic to `B_n` (2-colorable with `ex(n)` edges) are resampled.
pub fn verify_extremality<T: Scalar>(n: usize, samples: usize, seed: u64) -> Result<ExtremalityReport<T>> {
    if n < 7 {
        return Err(Error::ArgumentRange(format!("extremality check needs n >= 7, got {n}")));
    }
    if samples < 1 {
        return Err(Error::ArgumentRange("samples must be at least 1".into()));
    }
    let opts = SpectralOptions::<T>::default();
    let q_of = |h: &Hypergraph| -> Result<T> {
        Ok(spectral_radius(h, Operator::SignlessLaplacian, &opts)?
            .into_converged()?
            .rho)
    };
    let (bn, _) = build::balanced_complete_bipartite(n)?;
    let q_bn = q_of(&bn)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q_bn_relabeled = q_of(&bn.relabel(&random_permutation(n, &mut rng))?)?;
    let extremal_edges = fano_turan_number(n as u64) as usize;

    let mut competitors = Vec::new();
    let mut push = |kind, h: &Hypergraph, q: T| {
        competitors.push(Competitor {
            kind,
            edges: h.edge_count(),
            q,
            margin: q_bn - q,
        });
    };

    for a in (1..n).filter(|&a| (2 * a).abs_diff(n) > 1) {
        let (h, _) = build::two_part_complete(a, n - a)?;
        let q = q_of(&h)?;
        push(CompetitorKind::UnbalancedSplit { a, b: n - a }, &h, q);
    }

    for k in 0..samples {
        if k % 2 == 0 {
            let m = bn.edge_count();
            let removed = rng.gen_range(1..=(m / 4).max(1));
            let ids = rand::seq::index::sample(&mut rng, m, removed).into_vec();
            let h = bn.without_edges(&ids);
            let q = q_of(&h)?;
            push(CompetitorKind::EdgeDeletion { removed }, &h, q);
        } else {
            let (h, a) = loop {
                let a = rng.gen_range(1..n);
                let p = rng.gen_range(0.5..1.0);
                let (h, _) = random_two_colorable(n, a, p, &mut rng)?;
                if h.edge_count() > 0 && h.edge_count() < extremal_edges {
                    break (h, a);
                }
            };
            let q = q_of(&h)?;
            push(CompetitorKind::RandomTwoColorable { a, b: n - a }, &h, q);
        }
    }

    Ok(ExtremalityReport {
        n,
        q_bn,
        q_bn_relabeled,
        competitors,
    })
}

/// `q(B_n) - q(B_n - e)` for every edge `e` of `B_n`.
pub fn edge_removal_drops<T: Scalar>(n: usize) -> Result<Vec<T>> {
    let opts = SpectralOptions::<T>::default();
    let (bn, _) = build::balanced_complete_bipartite(n)?;
    let q_bn = spectral_radius(&bn, Operator::SignlessLaplacian, &opts)?
        .into_converged()?
        .rho;
    (0..bn.edge_count())
        .map(|id| {
            let q = spectral_radius(&bn.without_edges(&[id]), Operator::SignlessLaplacian, &opts)?
                .into_converged()?
                .rho;
            Ok(q_bn - q)
        })
        .collect()
}
