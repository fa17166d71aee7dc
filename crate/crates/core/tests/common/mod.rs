#![allow(dead_code)]

use hyperq::hypergraph::Hypergraph;
use hyperq::random::random_connected;
use hyperq::Operator;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dense matrix of a 2-graph: adjacency, or degree diagonal plus adjacency.
pub fn dense_matrix(h: &Hypergraph, op: Operator) -> Vec<Vec<f64>> {
    assert_eq!(h.uniformity(), 2);
    let n = h.vertex_count();
    let mut m = vec![vec![0.0; n]; n];
    for e in h.edges() {
        m[e[0]][e[1]] = 1.0;
        m[e[1]][e[0]] = 1.0;
    }
    if op == Operator::SignlessLaplacian {
        for (v, row) in m.iter_mut().enumerate() {
            row[v] = h.degree(v) as f64;
        }
    }
    m
}

/// Largest eigenvalue of a symmetric nonnegative irreducible matrix by power
/// iteration on `M + I`, with the Rayleigh quotient as the estimate.
pub fn dense_power_iteration(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut estimate = 0.0;
    for _ in 0..1_000_000 {
        let y: Vec<f64> = (0..n)
            .map(|i| x[i] + m[i].iter().zip(&x).map(|(a, b)| a * b).sum::<f64>())
            .collect();
        let next = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() - 1.0;
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        x = y.into_iter().map(|v| v / norm).collect();
        if (next - estimate).abs() <= 1e-15 * next.abs().max(1.0) {
            return next;
        }
        estimate = next;
    }
    panic!("dense power iteration did not settle");
}

/// Seeded corpus of connected `r`-graphs with `n` drawn from `sizes`.
pub fn connected_corpus(count: usize, r: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Hypergraph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let p = rng.gen_range(0.05..0.6);
            random_connected(n, r, p, &mut rng).expect("valid parameters")
        })
        .collect()
}
