//! Decorated graphs: one extra qubit in the middle of every edge.

use crate::graph::Graph;

/// The decoration of a graph: vertex-qubits `0..|V|` (one per original
/// vertex) followed by edge-qubits `|V|..|V|+|E|` (one per original edge,
/// in edge-index order). Edge-qubit `k` is adjacent to exactly the two
/// endpoints of edge `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedGraph {
    source: Graph,
}

impl DecoratedGraph {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn num_vertex_qubits(&self) -> usize {
        self.source.num_vertices()
    }

    pub fn num_edge_qubits(&self) -> usize {
        self.source.num_edges()
    }

    /// Total qubit count `n = |V| + |E|`.
    pub fn num_qubits(&self) -> usize {
        self.num_vertex_qubits() + self.num_edge_qubits()
    }

    pub fn vertex_qubit(&self, v: usize) -> usize {
        debug_assert!(v < self.num_vertex_qubits());
        v
    }

    pub fn edge_qubit(&self, k: usize) -> usize {
        debug_assert!(k < self.num_edge_qubits());
        self.num_vertex_qubits() + k
    }

    pub fn is_edge_qubit(&self, q: usize) -> bool {
        q >= self.num_vertex_qubits()
    }

    /// Edge list of the decorated graph itself: each original edge {a,b}
    /// becomes the pair of edges {a, ab}, {b, ab}.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(2 * self.source.num_edges());
        for (k, &(a, b)) in self.source.edges().iter().enumerate() {
            let e = self.edge_qubit(k);
            out.push((a, e));
            out.push((b, e));
        }
        out
    }

    /// Adjacency lists over all `n` qubits.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_qubits()];
        for (a, e) in self.edges() {
            adj[a].push(e);
            adj[e].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }
}

/// Split every edge of `graph` in half. Deterministic and idempotent for a
/// given input.
pub fn decorate(graph: &Graph) -> DecoratedGraph {
    DecoratedGraph { source: graph.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_has_only_vertex_qubits() {
        let dg = decorate(&Graph::empty(4));
        assert_eq!(dg.num_qubits(), 4);
        assert!(dg.edges().is_empty());
    }

    #[test]
    fn single_edge_becomes_path() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let dg = decorate(&g);
        assert_eq!(dg.num_qubits(), 3);
        assert_eq!(dg.edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn grid_counts() {
        // 2x2 grid: 4 vertex-qubits, 4 edge-qubits
        let dg = decorate(&Graph::grid(2, 2));
        assert_eq!(dg.num_vertex_qubits(), 4);
        assert_eq!(dg.num_edge_qubits(), 4);
        // every edge-qubit has degree exactly 2
        let adj = dg.adjacency();
        for k in 0..dg.num_edge_qubits() {
            assert_eq!(adj[dg.edge_qubit(k)].len(), 2);
        }
        // original vertices are pairwise non-adjacent
        for v in 0..4 {
            assert!(adj[v].iter().all(|&w| dg.is_edge_qubit(w)));
        }
    }
}
