//! Immutable simple undirected graphs.
//!
//! Vertices are dense `0..n` indices. Adjacency lists are kept sorted so that
//! iteration order (and everything derived from it) is deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Errors raised while building a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated pairs and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let g = Graph {
            adjacency,
            edge_count: seen.len(),
        };
        debug_assert!(g.is_consistent());
        Ok(g)
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Number of connected components; the empty graph has zero.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// True iff the graph has at most one component (`n = 0` and `n = 1`
    /// count as connected).
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Returns a copy with `n_new` extra isolated vertices and the given extra
    /// edges.
    pub fn extended(&self, n_new: usize, extra: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = self.edge_vec();
        edges.extend_from_slice(extra);
        Graph::new(self.n() + n_new, &edges)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges).expect("a permutation preserves simplicity")
    }

    /// The subgraph formed by `edges` (which must be edges of `self`),
    /// relabelled densely in increasing order of old id. Returns the subgraph
    /// and the map from new ids to old ids.
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> (Graph, Vec<usize>) {
        let vertices: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let old_of_new: Vec<usize> = vertices.into_iter().collect();
        let mut new_of_old = vec![usize::MAX; self.n()];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let relabelled: Vec<_> = edges
            .iter()
            .map(|&(u, v)| {
                debug_assert!(self.has_edge(u, v));
                (new_of_old[u], new_of_old[v])
            })
            .collect();
        let sub = Graph::new(old_of_new.len(), &relabelled).expect("edges of a simple graph");
        (sub, old_of_new)
    }

    /// Adjacency symmetry, sortedness and the degree-sum identity.
    pub fn is_consistent(&self) -> bool {
        let symmetric = self.adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&v| v != u && self.adjacency[v].binary_search(&u).is_ok())
        });
        let degree_sum: usize = self.adjacency.iter().map(Vec::len).sum();
        symmetric && degree_sum == 2 * self.edge_count
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edge_vec())
    }
}

/// Compact `u-v;u-v` rendering used in report columns.
pub fn edges_compact(g: &Graph) -> String {
    g.edges()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(";")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 1]);
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn lollipop_degrees() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap();
        assert_eq!(g.degrees(), vec![3, 2, 3, 2, 1, 1]);
        assert!(g.is_consistent());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn connectivity() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_connected());
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.component_count(), 2);
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(c6.is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn edge_subgraph_relabels_densely() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (sub, map) = g.edge_subgraph(&[(2, 3), (3, 4)]);
        assert_eq!(map, vec![2, 3, 4]);
        assert_eq!(sub.edge_vec(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn permutation_preserves_degree_multiset() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let h = g.permuted(&[3, 2, 1, 0]);
        assert_eq!(h.degree(3), 3);
        assert!(h.is_consistent());
    }
}
