//! Canonical codes for isomorphism dedup of small graphs.
//!
//! Vertices are first coloured by (degree, eccentricity) and the colouring is
//! refined until equitable. The search then individualises vertices of the
//! first non-singleton cell, one at a time, and takes the lexicographically
//! smallest packed adjacency bitstring over all discrete partitions reached.
//! Automorphisms discovered along the way (two leaves with equal codes) prune
//! branches that are images of already explored ones.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

/// Default vertex limit for canonicalisation.
pub const DEFAULT_LIMIT: usize = 12;
/// Hard upper limit imposed by the `u32` adjacency masks.
pub const MAX_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("graph has {n} vertices, canonical labelling limit is {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("canonical labelling limit {0} exceeds the supported maximum {MAX_LIMIT}")]
    UnsupportedLimit(usize),
}

/// Byte string identifying an isomorphism class: the vertex count followed by
/// the upper-triangle adjacency bits of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Rebuilds the canonical representative encoded by this code.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        let mut bit = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[1 + bit / 8] & (0x80 >> (bit % 8)) != 0 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::new(n, &edges).expect("codes encode simple graphs")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

/// Canonical labeller with a configurable vertex limit.
#[derive(Debug, Clone, Copy)]
pub struct Canonizer {
    limit: usize,
}

impl Default for Canonizer {
    fn default() -> Self {
        Canonizer {
            limit: DEFAULT_LIMIT,
        }
    }
}

impl Canonizer {
    pub fn with_limit(limit: usize) -> Result<Self, CanonError> {
        if limit > MAX_LIMIT {
            return Err(CanonError::UnsupportedLimit(limit));
        }
        Ok(Canonizer { limit })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn code(&self, g: &Graph) -> Result<CanonicalCode, CanonError> {
        self.form(g).map(|(code, _)| code)
    }

    /// Code plus the canonical labelling: `labelling[v]` is the position of
    /// vertex `v` in the canonical order.
    pub fn form(&self, g: &Graph) -> Result<(CanonicalCode, Vec<usize>), CanonError> {
        if g.n() > self.limit {
            return Err(CanonError::LimitExceeded {
                n: g.n(),
                limit: self.limit,
            });
        }
        let mut search = Search::new(g);
        let root = search.initial_partition(g);
        search.descend(root, &mut Vec::new());
        let (code, order) = search.best.expect("the search reaches at least one leaf");
        let mut labelling = vec![0; g.n()];
        for (pos, &v) in order.iter().enumerate() {
            labelling[v] = pos;
        }
        Ok((CanonicalCode(code), labelling))
    }
}

/// Canonical code with the default vertex limit.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, CanonError> {
    Canonizer::default().code(g)
}

type Partition = Vec<Vec<usize>>;

struct Search {
    n: usize,
    adj: Vec<u32>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
            .collect();
        Search {
            n: g.n(),
            adj,
            best: None,
            generators: Vec::new(),
        }
    }

    fn eccentricity(&self, s: usize) -> usize {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut ecc = 0;
        while let Some(u) = queue.pop_front() {
            ecc = ecc.max(dist[u]);
            let mut nb = self.adj[u];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        ecc
    }

    fn initial_partition(&self, g: &Graph) -> Partition {
        let mut keyed: Vec<((usize, usize), usize)> = (0..self.n)
            .map(|v| ((g.degree(v), self.eccentricity(v)), v))
            .collect();
        keyed.sort_unstable();
        let mut cells: Partition = Vec::new();
        let mut last = None;
        for (key, v) in keyed {
            if last != Some(key) {
                cells.push(Vec::new());
                last = Some(key);
            }
            cells.last_mut().unwrap().push(v);
        }
        cells
    }

    /// Splits cells by neighbour counts into every cell until stable.
    fn refine(&self, mut cells: Partition) -> Partition {
        loop {
            let masks: Vec<u32> = cells
                .iter()
                .map(|c| c.iter().fold(0u32, |acc, &v| acc | (1 << v)))
                .collect();
            let mut next: Partition = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let key = masks
                            .iter()
                            .map(|m| (self.adj[v] & m).count_ones())
                            .collect();
                        (key, v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = next.len();
                next.push(vec![keyed[0].1]);
                for i in 1..keyed.len() {
                    if keyed[i].0 != keyed[i - 1].0 {
                        next.push(Vec::new());
                        start += 1;
                    }
                    next[start].push(keyed[i].1);
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn leaf_code(&self, order: &[usize]) -> Vec<u8> {
        let bits = self.n * self.n.saturating_sub(1) / 2;
        let mut code = vec![0u8; 1 + bits.div_ceil(8)];
        code[0] = self.n as u8;
        let mut bit = 0usize;
        for i in 0..self.n {
            let row = self.adj[order[i]];
            for &vj in &order[i + 1..] {
                if row & (1 << vj) != 0 {
                    code[1 + bit / 8] |= 0x80 >> (bit % 8);
                }
                bit += 1;
            }
        }
        code
    }

    fn visit_leaf(&mut self, order: Vec<usize>) {
        let code = self.leaf_code(&order);
        match &self.best {
            None => self.best = Some((code, order)),
            Some((best_code, best_order)) => {
                if code < *best_code {
                    self.best = Some((code, order));
                } else if code == *best_code {
                    // x -> order[pos_best(x)] is an automorphism.
                    let mut gamma = vec![0; self.n];
                    for (pos, &x) in best_order.iter().enumerate() {
                        gamma[x] = order[pos];
                    }
                    if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                        self.generators.push(gamma);
                    }
                }
            }
        }
    }

    /// True iff some stored generator fixing `prefix` pointwise links `w` to
    /// one of `explored`.
    fn equivalent_to_explored(&self, prefix: &[usize], explored: &[usize], w: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.generators {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == rw)
    }

    fn descend(&mut self, cells: Partition, prefix: &mut Vec<usize>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order = cells.into_iter().flatten().collect();
            self.visit_leaf(order);
            return;
        };
        let mut explored = Vec::new();
        for &w in &cells[target] {
            if self.equivalent_to_explored(prefix, &explored, w) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![w]);
            child.push(cells[target].iter().copied().filter(|&x| x != w).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(w);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(w);
        }
    }
}
