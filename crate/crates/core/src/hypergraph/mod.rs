//! Uniform hypergraphs stored as edge lists with a vertex incidence index.
//!
//! Vertices are the contiguous ids `0..n`. Every edge is kept as a strictly
//! increasing tuple, which makes set comparison and duplicate detection a
//! plain slice comparison.

pub mod build;
mod coloring;
pub mod io;

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub use coloring::TwoColoring;

#[derive(Debug, Clone)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    /// Edge ids in lexicographic order of their edges.
    order: Vec<usize>,
}

impl Hypergraph {
    /// Validates and indexes an `r`-uniform hypergraph on `n` vertices.
    ///
    /// Each input edge is sorted; edges keep their input order. Repeated
    /// vertices inside an edge and repeated edges are rejected rather than
    /// merged.
    pub fn new<E, I>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if r < 2 {
            return Err(Error::ArgumentRange(format!("uniformity r = {r} must be at least 2")));
        }
        let mut hypergraph = Self {
            r,
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
            order: Vec::new(),
        };
        for (i, edge) in edges.into_iter().enumerate() {
            let mut sorted = edge.as_ref().to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != r || edge.as_ref().len() != r {
                return Err(Error::EdgeArity {
                    index: i,
                    expected: r,
                    found: sorted.len(),
                });
            }
            if let Some(&vertex) = sorted.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            hypergraph.push_edge(sorted);
        }
        hypergraph.build_order()?;
        Ok(hypergraph)
    }

    /// The hypergraph on `n` vertices with no edges.
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        Self::new::<[usize; 0], _>(r, n, [])
    }

    fn push_edge(&mut self, sorted: Vec<usize>) {
        let id = self.edges.len();
        for &v in &sorted {
            self.incidence[v].push(id);
        }
        self.edges.push(sorted);
    }

    fn build_order(&mut self) -> Result<()> {
        let edges = &self.edges;
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_unstable_by(|&i, &j| edges[i].cmp(&edges[j]));
        if let Some(w) = order.windows(2).find(|w| edges[w[0]] == edges[w[1]]) {
            return Err(Error::DuplicateEdge {
                edge: edges[w[0]].clone(),
            });
        }
        self.order = order;
        Ok(())
    }

    fn lookup(&self, sorted: &[usize]) -> Option<usize> {
        self.order
            .binary_search_by(|&id| self.edges[id].as_slice().cmp(sorted))
            .ok()
            .map(|i| self.order[i])
    }

    #[inline]
    pub fn uniformity(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> &[usize] {
        &self.edges[id]
    }

    /// Ids of the edges containing `v`.
    #[inline]
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Minimum vertex degree.
    pub fn min_degree(&self) -> Result<usize> {
        self.incidence.iter().map(Vec::len).min().ok_or(Error::EmptyVertexSet)
    }

    /// The link of `v`: the `(r-1)`-sets completing `v` to an edge.
    pub fn link(&self, v: usize) -> Vec<Vec<usize>> {
        self.incidence[v]
            .iter()
            .map(|&e| self.edges[e].iter().copied().filter(|&u| u != v).collect())
            .collect()
    }

    /// Whether the given vertex set (in any order) is an edge.
    pub fn contains_edge(&self, vertices: &[usize]) -> bool {
        self.edge_id(vertices).is_some()
    }

    pub fn edge_id(&self, vertices: &[usize]) -> Option<usize> {
        if vertices.len() != self.r {
            return None;
        }
        if vertices.windows(2).all(|w| w[0] < w[1]) {
            return self.lookup(vertices);
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        self.lookup(&sorted)
    }

    /// Edges as a sorted set, for order-independent comparison.
    pub fn edge_set(&self) -> BTreeSet<&[usize]> {
        self.edges.iter().map(Vec::as_slice).collect()
    }

    /// Edges in lexicographic order.
    pub fn sorted_edges(&self) -> Vec<&[usize]> {
        self.order.iter().map(|&id| self.edges[id].as_slice()).collect()
    }

    /// Connected components under edge adjacency, each sorted, ordered by
    /// smallest vertex. Isolated vertices are singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            label[start] = id;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &e in &self.incidence[v] {
                    for &u in &self.edges[e] {
                        if label[u] == usize::MAX {
                            label[u] = id;
                            members.push(u);
                            stack.push(u);
                        }
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Sub-hypergraph induced on `vertices`, relabeled `0..vertices.len()`
    /// in the given order. Only edges lying entirely inside the set survive.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if position[v] != usize::MAX {
                return Err(Error::ArgumentRange(format!("vertex {v} listed twice")));
            }
            position[v] = i;
        }
        let edges = self.edges.iter().filter_map(|edge| {
            edge.iter()
                .map(|&v| (position[v] != usize::MAX).then_some(position[v]))
                .collect::<Option<Vec<_>>>()
        });
        Self::new(self.r, vertices.len(), edges)
    }

    /// `H - w`: removes `w` and its incident edges. Remaining vertices are
    /// shifted down so ids stay contiguous.
    pub fn delete_vertex(&self, w: usize) -> Result<Self> {
        if w >= self.n {
            return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != w).collect();
        self.induced(&keep)
    }

    /// Copy without the edges whose ids are listed.
    pub fn without_edges(&self, ids: &[usize]) -> Self {
        let mut drop = vec![false; self.edges.len()];
        for &id in ids {
            if id < drop.len() {
                drop[id] = true;
            }
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(e, _)| e.clone());
        Self::new(self.r, self.n, edges).expect("subset of a valid edge list is valid")
    }

    /// Copy with one extra edge.
    pub fn with_edge(&self, edge: &[usize]) -> Result<Self> {
        Self::new(
            self.r,
            self.n,
            self.edges.iter().map(Vec::as_slice).chain(std::iter::once(edge)),
        )
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::ArgumentRange("relabeling is not a permutation".into()));
            }
        }
        Self::new(
            self.r,
            self.n,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
        )
    }
}

/// Two hypergraphs are equal when they agree on uniformity, vertex count
/// and edge set; edge order is irrelevant.
impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r
            && self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.edges.iter().all(|e| other.lookup(e).is_some())
    }
}

impl Eq for Hypergraph {}
