//! Subgraph containment, Fano-freeness and 2-colorability.
//!
//! Containment is the non-induced subgraph relation: an injective vertex map
//! sending every pattern edge onto a host edge.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{build, Hypergraph, TwoColoring};

/// Injective map from pattern vertices to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Host vertex assigned to pattern vertex `v`.
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Checks injectivity and that every pattern edge lands on a host edge.
    pub fn is_valid(&self, host: &Hypergraph, pattern: &Hypergraph) -> bool {
        if self.map.len() != pattern.vertex_count() {
            return false;
        }
        let mut used = vec![false; host.vertex_count()];
        for &t in &self.map {
            if t >= used.len() || std::mem::replace(&mut used[t], true) {
                return false;
            }
        }
        pattern.edges().iter().all(|e| {
            let image: Vec<usize> = e.iter().map(|&v| self.map[v]).collect();
            host.contains_edge(&image)
        })
    }
}

struct EmbeddingSearch<'a> {
    host: &'a Hypergraph,
    pattern: &'a Hypergraph,
    order: Vec<usize>,
    /// Pattern edges whose last vertex (in `order`) sits at each position.
    closing: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    scratch: Vec<usize>,
}

impl<'a> EmbeddingSearch<'a> {
    fn new(host: &'a Hypergraph, pattern: &'a Hypergraph) -> Self {
        let n = pattern.vertex_count();
        // Static order: high pattern degree first, then most edges into the
        // vertices already placed, then lowest id.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let touching = pattern
                        .incident(v)
                        .iter()
                        .filter(|&&e| pattern.edge(e).iter().any(|&u| placed[u]))
                        .count();
                    (pattern.degree(v), touching, std::cmp::Reverse(v))
                })
                .expect("an unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut closing = vec![Vec::new(); n];
        for (id, edge) in pattern.edges().iter().enumerate() {
            let last = edge.iter().map(|&v| position[v]).max().expect("edges are non-empty");
            closing[last].push(id);
        }
        Self {
            host,
            pattern,
            order,
            closing,
            map: vec![usize::MAX; n],
            used: vec![false; host.vertex_count()],
            scratch: Vec::with_capacity(pattern.uniformity()),
        }
    }

    fn edges_close(&mut self, position: usize) -> bool {
        for &id in &self.closing[position] {
            self.scratch.clear();
            self.scratch.extend(self.pattern.edge(id).iter().map(|&v| self.map[v]));
            if !self.host.contains_edge(&self.scratch) {
                return false;
            }
        }
        true
    }

    fn search(&mut self, position: usize) -> bool {
        if position == self.order.len() {
            return true;
        }
        let p = self.order[position];
        let needed = self.pattern.degree(p);
        for t in 0..self.host.vertex_count() {
            if self.used[t] || self.host.degree(t) < needed {
                continue;
            }
            self.map[p] = t;
            self.used[t] = true;
            if self.edges_close(position) && self.search(position + 1) {
                return true;
            }
            self.used[t] = false;
        }
        self.map[p] = usize::MAX;
        false
    }
}

/// Finds a copy of `pattern` in `host` by exhaustive backtracking.
///
/// Pattern vertices are placed in a fixed order, candidates are host
/// vertices of at least the same degree, and every pattern edge is checked
/// as soon as all its vertices are placed. The witness is deterministic.
pub fn contains_subgraph(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Embedding>> {
    if host.uniformity() != pattern.uniformity() {
        return Err(Error::UniformityMismatch {
            host: host.uniformity(),
            pattern: pattern.uniformity(),
        });
    }
    if pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let mut search = EmbeddingSearch::new(host, pattern);
    Ok(search.search(0).then_some(Embedding { map: search.map }))
}

/// Whether a 3-graph contains no copy of the Fano plane.
pub fn is_fano_free(h: &Hypergraph) -> Result<bool> {
    if h.uniformity() != 3 {
        return Err(Error::UniformityMismatch {
            host: h.uniformity(),
            pattern: 3,
        });
    }
    Ok(contains_subgraph(h, &build::fano())?.is_none())
}

const UNSET: u8 = u8::MAX;

struct ColoringSearch<'a> {
    h: &'a Hypergraph,
    color: Vec<u8>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> ColoringSearch<'a> {
    fn set(&mut self, v: usize, c: u8) {
        self.color[v] = c;
        self.trail.push(v);
        self.queue.push(v);
    }

    /// Assigns `v` and propagates forced colors: an edge whose other `r - 1`
    /// vertices share a color forces the last one to the opposite color.
    fn assign(&mut self, v: usize, c: u8) -> bool {
        self.queue.clear();
        self.set(v, c);
        while let Some(u) = self.queue.pop() {
            for &e in self.h.incident(u) {
                let mut counts = [0usize; 2];
                let mut free = None;
                let mut n_free = 0;
                for &w in self.h.edge(e) {
                    match self.color[w] {
                        UNSET => {
                            n_free += 1;
                            free = Some(w);
                        }
                        k => counts[k as usize] += 1,
                    }
                }
                let monochrome = counts[0] == 0 || counts[1] == 0;
                match (n_free, monochrome) {
                    (0, true) => return false,
                    (1, true) => {
                        let forced = u8::from(counts[1] > 0) ^ 1;
                        self.set(free.expect("one free vertex"), forced);
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for v in self.trail.drain(mark..) {
            self.color[v] = UNSET;
        }
    }

    fn solve(&mut self, from: usize) -> bool {
        let Some(v) = (from..self.color.len()).find(|&v| self.color[v] == UNSET && self.h.degree(v) > 0) else {
            return true;
        };
        // Swapping the two colors maps solutions to solutions, so the very
        // first decision only needs one branch.
        let choices: &[u8] = if self.trail.is_empty() { &[0] } else { &[0, 1] };
        for &c in choices {
            let mark = self.trail.len();
            if self.assign(v, c) && self.solve(v + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// A proper 2-coloring of `h` if one exists.
///
/// Exhaustive backtracking over vertices in id order with unit propagation.
/// Vertices without edges get label 0.
pub fn two_coloring(h: &Hypergraph) -> Option<TwoColoring> {
    let mut search = ColoringSearch {
        h,
        color: vec![UNSET; h.vertex_count()],
        trail: Vec::new(),
        queue: Vec::new(),
    };
    if !search.solve(0) {
        return None;
    }
    let labels = search
        .color
        .into_iter()
        .map(|c| if c == UNSET { 0 } else { c })
        .collect();
    Some(TwoColoring::new(h, labels).expect("search only returns proper colorings"))
}

#[cfg(test)]
mod tests {
    use itertools::Itertools;

    use super::*;

    #[test]
    fn fano_embeds_in_k7() {
        let host = build::complete(7, 3).unwrap();
        let pattern = build::fano();
        let emb = contains_subgraph(&host, &pattern).unwrap().unwrap();
        assert!(emb.is_valid(&host, &pattern));
        assert!(!is_fano_free(&host).unwrap());
        assert!(!is_fano_free(&pattern).unwrap());
    }

    #[test]
    fn single_edge_embeds_in_fano() {
        let host = build::fano();
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let emb = contains_subgraph(&host, &edge).unwrap().unwrap();
        assert!(emb.is_valid(&host, &edge));
    }

    #[test]
    fn bipartite_hosts_are_fano_free() {
        for n in 7..=9 {
            let (b, _) = build::balanced_complete_bipartite(n).unwrap();
            assert!(is_fano_free(&b).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn uniformity_mismatch() {
        let g = Hypergraph::new(2, 3, [[0, 1]]).unwrap();
        assert!(matches!(
            contains_subgraph(&build::fano(), &g),
            Err(Error::UniformityMismatch { host: 3, pattern: 2 })
        ));
        assert!(is_fano_free(&g).is_err());
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        let host = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let pattern = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert!(contains_subgraph(&host, &pattern).unwrap().is_none());
        let host = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert!(contains_subgraph(&host, &pattern).unwrap().is_some());
    }

    #[test]
    fn fano_is_not_two_colorable_by_brute_force() {
        let f = build::fano();
        let proper = (0u32..128).any(|mask| {
            f.edges().iter().all(|e| {
                let bits: Vec<u32> = e.iter().map(|&v| (mask >> v) & 1).collect();
                bits.iter().any(|&b| b != bits[0])
            })
        });
        assert!(!proper);
        assert!(two_coloring(&f).is_none());
    }

    #[test]
    fn colorings_found_for_colorable_inputs() {
        let (h, _) = build::two_part_complete(4, 4).unwrap();
        assert!(two_coloring(&h).unwrap().is_proper_for(&h));

        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(two_coloring(&edge).unwrap().assignment(), &[0, 0, 1]);

        let isolated = Hypergraph::new(3, 5, [[0, 1, 2]]).unwrap();
        let c = two_coloring(&isolated).unwrap();
        assert_eq!(&c.assignment()[3..], &[0, 0]);
    }

    #[test]
    fn small_complete_cases() {
        // K4^(3) splits 2 + 2; every split of 5 vertices leaves a triple in one part.
        assert!(two_coloring(&build::complete(4, 3).unwrap()).is_some());
        assert!(two_coloring(&build::complete(5, 3).unwrap()).is_none());
        // 2-uniform: proper 2-coloring is graph bipartiteness.
        let triangle = Hypergraph::new(2, 3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        assert!(two_coloring(&triangle).is_none());
        let c4 = Hypergraph::new(2, 4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        assert!(two_coloring(&c4).is_some());
    }

    #[test]
    fn two_coloring_agrees_with_enumeration_on_small_graphs() {
        let triples: Vec<Vec<usize>> = (0..6).combinations(3).collect();
        for mask in (0u32..(1 << 20)).step_by(9973) {
            let edges: Vec<&Vec<usize>> = triples
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e)
                .collect();
            let h = Hypergraph::new(3, 6, edges).unwrap();
            let expected = (0u32..64).any(|c| {
                h.edges().iter().all(|e| {
                    let first = c >> e[0] & 1;
                    e.iter().any(|&v| c >> v & 1 != first)
                })
            });
            assert_eq!(two_coloring(&h).is_some(), expected, "mask {mask:#x}");
        }
    }
}
