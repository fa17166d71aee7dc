//! Seeded random hypergraph generators used by the verification harness.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, TwoColoring};

/// Random connected `r`-graph on `n` vertices.
///
/// A spanning structure comes first: edge `{0..r-1}`, then each later vertex
/// joins an edge with `r - 1` random earlier vertices. Every other `r`-set
/// is then added independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, r: usize, p: f64, rng: &mut R) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(Error::ArgumentRange(format!(
            "random connected hypergraph needs n >= r >= 2, got n = {n}, r = {r}"
        )));
    }
    let mut edges: Vec<Vec<usize>> = vec![(0..r).collect()];
    for v in r..n {
        let mut earlier: Vec<usize> = (0..v).collect();
        earlier.shuffle(rng);
        let mut edge: Vec<usize> = earlier[..r - 1].to_vec();
        edge.push(v);
        edge.sort_unstable();
        edges.push(edge);
    }
    let mut present: std::collections::HashSet<Vec<usize>> = edges.iter().cloned().collect();
    for candidate in (0..n).combinations(r) {
        if !present.contains(&candidate) && rng.gen_bool(p.clamp(0.0, 1.0)) {
            present.insert(candidate.clone());
            edges.push(candidate);
        }
    }
    Hypergraph::new(r, n, edges)
}

/// Random 2-colorable 3-graph: a random split with part sizes `(a, n - a)`,
/// vertex labels shuffled, each crossing triple kept with probability `p`.
pub fn random_two_colorable<R: Rng + ?Sized>(
    n: usize,
    a: usize,
    p: f64,
    rng: &mut R,
) -> Result<(Hypergraph, TwoColoring)> {
    if a == 0 || a >= n {
        return Err(Error::ArgumentRange(format!("part size {a} must lie in 1..{n}")));
    }
    let mut labels: Vec<u8> = (0..n).map(|v| u8::from(v >= a)).collect();
    labels.shuffle(rng);
    let edges: Vec<Vec<usize>> = (0..n)
        .combinations(3)
        .filter(|t| t.iter().any(|&v| labels[v] != labels[t[0]]))
        .filter(|_| rng.gen_bool(p.clamp(0.0, 1.0)))
        .collect();
    let h = Hypergraph::new(3, n, edges)?;
    let coloring = TwoColoring::new(&h, labels)?;
    Ok((h, coloring))
}

/// Uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Random graph `G(n, p)` as a 2-uniform hypergraph.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Hypergraph> {
    let edges: Vec<Vec<usize>> = (0..n)
        .combinations(2)
        .filter(|_| rng.gen_bool(p.clamp(0.0, 1.0)))
        .collect();
    Hypergraph::new(2, n, edges)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn connected_generator_is_connected_and_deterministic() {
        for seed in 0..20 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_connected(9, 3, 0.1, &mut rng).unwrap();
            assert!(h.is_connected());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            assert_eq!(h, random_connected(9, 3, 0.1, &mut rng).unwrap());
        }
    }

    #[test]
    fn two_colorable_generator_respects_its_coloring() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (h, c) = random_two_colorable(10, 3, 0.6, &mut rng).unwrap();
        assert!(c.is_proper_for(&h));
        assert_eq!(c.part_sizes(), (3, 7));
        assert!(random_two_colorable(10, 0, 0.5, &mut rng).is_err());
    }
}
