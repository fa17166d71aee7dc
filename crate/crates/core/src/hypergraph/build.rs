//! Standard constructions: the Fano plane, complete hypergraphs, complete
//! 2-colorable 3-graphs (including the balanced one `B_n`), and expansions
//! of graphs.

use itertools::Itertools;

use super::{Hypergraph, TwoColoring};
use crate::error::{Error, Result};

/// Lines of the Fano plane on vertices `0..7`.
pub const FANO_EDGES: [[usize; 3]; 7] = [
    [0, 1, 2],
    [2, 3, 4],
    [4, 5, 0],
    [0, 6, 3],
    [1, 6, 4],
    [2, 6, 5],
    [1, 3, 5],
];

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// The Fano plane `PG_2(2)` as a 3-graph on 7 vertices.
pub fn fano() -> Hypergraph {
    Hypergraph::new(3, 7, FANO_EDGES).expect("Fano edge list is valid")
}

/// `K_n^(r)`: every `r`-subset of `0..n`.
pub fn complete(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(Error::ArgumentRange(format!(
            "complete hypergraph needs n >= r >= 2, got n = {n}, r = {r}"
        )));
    }
    Hypergraph::new(r, n, (0..n).combinations(r))
}

/// Complete 2-colorable 3-graph with parts `0..a` and `a..a+b`: every triple
/// meeting both parts.
pub fn two_part_complete(a: usize, b: usize) -> Result<(Hypergraph, TwoColoring)> {
    if a < 1 || b < 1 || a + b < 3 {
        return Err(Error::ArgumentRange(format!(
            "two-part complete 3-graph needs a, b >= 1 and a + b >= 3, got ({a}, {b})"
        )));
    }
    let n = a + b;
    // Triples i < j < k meet both parts iff i < a <= k.
    let edges = (0..a).flat_map(|i| (i + 1..n - 1).flat_map(move |j| (j.max(a - 1) + 1..n).map(move |k| [i, j, k])));
    let h = Hypergraph::new(3, n, edges)?;
    let labels = (0..n).map(|v| u8::from(v >= a)).collect();
    let coloring = TwoColoring::new(&h, labels)?;
    Ok((h, coloring))
}

/// `B_n`: the balanced complete 2-colorable 3-graph, larger part first.
pub fn balanced_complete_bipartite(n: usize) -> Result<(Hypergraph, TwoColoring)> {
    if n < 3 {
        return Err(Error::ArgumentRange(format!("B_n needs n >= 3, got {n}")));
    }
    two_part_complete(n.div_ceil(2), n / 2)
}

/// Expansion `F^(r)` of a graph: each base edge gets `r - 2` private new
/// vertices, numbered after the base vertices in edge order.
pub fn expansion(base_edges: &[[usize; 2]], n_base: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::ArgumentRange(format!("uniformity r = {r} must be at least 2")));
    }
    let base = Hypergraph::new(2, n_base, base_edges)?;
    let extra = r - 2;
    let n = n_base + extra * base.edge_count();
    let edges = base.edges().iter().enumerate().map(|(i, e)| {
        let fresh = n_base + i * extra;
        e.iter().copied().chain(fresh..fresh + extra).collect::<Vec<_>>()
    });
    Hypergraph::new(r, n, edges)
}
