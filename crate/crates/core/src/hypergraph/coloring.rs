use serde::Serialize;

use super::Hypergraph;
use crate::error::{Error, Result};

/// A proper 2-coloring: every edge meets both color classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoColoring {
    assignment: Vec<u8>,
    part_sizes: (usize, usize),
}

impl TwoColoring {
    /// Checks `assignment` against `h` and builds the coloring.
    pub fn new(h: &Hypergraph, assignment: Vec<u8>) -> Result<Self> {
        if assignment.len() != h.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: h.vertex_count(),
                found: assignment.len(),
            });
        }
        if let Some(v) = assignment.iter().position(|&c| c > 1) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has label {}",
                assignment[v]
            )));
        }
        if let Some(edge) = h
            .edges()
            .iter()
            .find(|e| e.iter().all(|&v| assignment[v] == assignment[e[0]]))
        {
            return Err(Error::InvalidColoring(format!("edge {edge:?} is monochromatic")));
        }
        let ones = assignment.iter().filter(|&&c| c == 1).count();
        let part_sizes = (assignment.len() - ones, ones);
        Ok(Self { assignment, part_sizes })
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    #[inline]
    pub fn color(&self, v: usize) -> u8 {
        self.assignment[v]
    }

    /// `(a, b)`: number of vertices labeled 0 and 1.
    pub fn part_sizes(&self) -> (usize, usize) {
        self.part_sizes
    }

    pub fn part(&self, label: u8) -> Vec<usize> {
        (0..self.assignment.len())
            .filter(|&v| self.assignment[v] == label)
            .collect()
    }

    /// Whether this coloring is proper for `h` (no monochromatic edge).
    pub fn is_proper_for(&self, h: &Hypergraph) -> bool {
        self.assignment.len() == h.vertex_count()
            && h.edges().iter().all(|e| {
                let first = self.assignment[e[0]];
                e.iter().any(|&v| self.assignment[v] != first)
            })
    }
}
