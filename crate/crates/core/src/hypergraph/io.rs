//! Plain-text hypergraph files.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! r n m
//! v1 v2 ... vr      (m lines, 0-based vertex ids)
//! ```

use std::fmt;
use std::str::FromStr;

use super::Hypergraph;
use crate::error::{Error, Result};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn parse_ints(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| format_err(line_no, format!("`{tok}` is not a non-negative integer")))
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines.next().ok_or_else(|| format_err(1, "missing header"))?;
    let header = parse_ints(header_no, header)?;
    let &[r, n, m] = header.as_slice() else {
        return Err(format_err(header_no, "header must be `r n m`"));
    };
    if r < 2 {
        return Err(format_err(header_no, format!("uniformity {r} must be at least 2")));
    }

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(format_err(line_no, format!("more than {m} edge lines")));
        }
        let edge = parse_ints(line_no, line)?;
        if edge.len() != r {
            return Err(format_err(
                line_no,
                format!("expected {r} vertex ids, found {}", edge.len()),
            ));
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(format_err(
            text.lines().count().max(1),
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Hypergraph::new(r, n, edges)
}

/// Header plus one line per edge, edges in lexicographic order.
pub fn serialize(h: &Hypergraph) -> String {
    h.to_string()
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.uniformity(), self.vertex_count(), self.edge_count())?;
        for edge in self.sorted_edges() {
            let mut first = true;
            for v in edge {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
