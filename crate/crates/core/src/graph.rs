//! Simple undirected graphs with stable edge indices.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// An undirected simple graph. Edges keep their list position as a stable
/// index; the stored pair order doubles as the orientation for clock models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a >= num_vertices || b >= num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) out of range for {num_vertices} vertices"
                )));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a},{b})")));
            }
        }
        Ok(Self { num_vertices, edges })
    }

    pub fn empty(num_vertices: usize) -> Self {
        Self { num_vertices, edges: Vec::new() }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> (usize, usize) {
        self.edges[k]
    }

    /// Adjacency lists in ascending vertex order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Common named instances used throughout the test suites.
    pub fn path(n: usize) -> Self {
        Self { num_vertices: n, edges: (1..n).map(|i| (i - 1, i)).collect() }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self { num_vertices: n, edges }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Self { num_vertices: n, edges }
    }

    /// W x H grid, sites row-major.
    pub fn grid(width: usize, height: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..height {
            for c in 0..width {
                let s = r * width + c;
                if c + 1 < width {
                    edges.push((s, s + 1));
                }
                if r + 1 < height {
                    edges.push((s, s + width));
                }
            }
        }
        Self { num_vertices: width * height, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(Graph::new(3, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn grid_edge_count() {
        let g = Graph::grid(3, 4);
        assert_eq!(g.num_edges(), 3 * 3 + 2 * 4);
    }
}
