//! Exhaustive generation of connected cacti up to isomorphism.
//!
//! Every cactus on more than one vertex has a leaf block in its block-cut
//! tree, and deleting it leaves a smaller cactus. Growing from the single
//! vertex by attaching a bridge or a cycle at every vertex therefore reaches
//! every cactus; canonical codes remove the duplicates. Levels are processed
//! in order of vertex count, each in parallel, with per-worker maps merged
//! associatively.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{CanonError, CanonicalCode, Canonizer};
use crate::graph::Graph;
use crate::randic::{apply_cycle, apply_pendant};
use crate::structure::CHEMICAL_MAX_DEGREE;

/// Largest vertex budget the generator accepts.
pub const MAX_ENUMERATION_N: usize = 12;
/// Largest order the edge-subset oracle accepts (`2^21` subsets at 7).
pub const ORACLE_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("vertex budget {requested} exceeds the limit {limit}")]
    BudgetExceeded { requested: usize, limit: usize },
    #[error("vertex budget must be at least 1")]
    ZeroBudget,
    #[error(transparent)]
    Canon(#[from] CanonError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ClassFilter {
    All,
    Tree,
    Cactus,
    #[value(name = "nontrivial")]
    NontrivialCactus,
    Chemical,
}

impl ClassFilter {
    fn allows_bridges(self) -> bool {
        self != ClassFilter::NontrivialCactus
    }

    fn allows_cycles(self) -> bool {
        self != ClassFilter::Tree
    }

    fn keeps(self, g: &Graph) -> bool {
        match self {
            ClassFilter::NontrivialCactus => g.n() > 1,
            ClassFilter::Chemical => g.max_degree() <= CHEMICAL_MAX_DEGREE,
            _ => true,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ClassFilter::All => "all",
            ClassFilter::Tree => "tree",
            ClassFilter::Cactus => "cactus",
            ClassFilter::NontrivialCactus => "nontrivial",
            ClassFilter::Chemical => "chemical",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub max_n: usize,
    pub class_filter: ClassFilter,
    pub dedup: bool,
}

impl EnumerationRequest {
    pub fn new(max_n: usize, class_filter: ClassFilter) -> Self {
        EnumerationRequest {
            max_n,
            class_filter,
            dedup: true,
        }
    }
}

/// A generated cactus, stored in its canonical labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusEntry {
    pub code: CanonicalCode,
    pub graph: Graph,
}

/// Every child of `g` within `max_n` vertices that the filter allows.
fn children(g: &Graph, max_n: usize, filter: ClassFilter) -> Vec<Graph> {
    let mut out = Vec::new();
    if g.n() >= max_n {
        return out;
    }
    for v in 0..g.n() {
        if filter.allows_bridges() {
            out.push(apply_pendant(g, v).expect("vertex exists"));
        }
        if filter.allows_cycles() {
            for size in 3..=max_n - g.n() + 1 {
                out.push(apply_cycle(g, v, size).expect("size at least three"));
            }
        }
    }
    if filter == ClassFilter::Chemical {
        out.retain(|c| c.max_degree() <= CHEMICAL_MAX_DEGREE);
    }
    out
}

fn check_budget(max_n: usize, limit: usize) -> Result<(), EnumerateError> {
    if max_n == 0 {
        return Err(EnumerateError::ZeroBudget);
    }
    if max_n > limit {
        return Err(EnumerateError::BudgetExceeded {
            requested: max_n,
            limit,
        });
    }
    Ok(())
}

type Level = BTreeMap<CanonicalCode, Graph>;

fn merge(mut a: Vec<Level>, b: Vec<Level>) -> Vec<Level> {
    for (into, from) in a.iter_mut().zip(b) {
        into.extend(from);
    }
    a
}

/// All connected cacti with at most `req.max_n` vertices that pass the
/// filter, ordered by `(n, code)`. With `dedup` off, every node of the raw
/// attachment tree is returned instead (in the canonical labelling each).
pub fn generate_cacti(req: &EnumerationRequest) -> Result<Vec<CactusEntry>, EnumerateError> {
    check_budget(req.max_n, MAX_ENUMERATION_N)?;
    let canon = Canonizer::default();
    let entry = |g: &Graph| -> CactusEntry {
        let code = canon.code(g).expect("within the canonical limit");
        let graph = code.to_graph();
        CactusEntry { code, graph }
    };

    if !req.dedup {
        let mut all = Vec::new();
        let mut frontier = vec![Graph::empty(1)];
        while let Some(g) = frontier.pop() {
            frontier.extend(children(&g, req.max_n, req.class_filter));
            if req.class_filter.keeps(&g) {
                all.push(entry(&g));
            }
        }
        all.sort_by(|a, b| (a.code.vertex_count(), &a.code).cmp(&(b.code.vertex_count(), &b.code)));
        return Ok(all);
    }

    let mut levels: Vec<Level> = vec![Level::new(); req.max_n + 1];
    let root = entry(&Graph::empty(1));
    levels[1].insert(root.code, root.graph);
    for src in 1..req.max_n {
        let parents: Vec<&Graph> = levels[src].values().collect();
        let empty = || vec![Level::new(); req.max_n + 1];
        let found = parents
            .par_iter()
            .fold(empty, |mut acc, g| {
                for child in children(g, req.max_n, req.class_filter) {
                    let e = entry(&child);
                    acc[child.n()].entry(e.code).or_insert(e.graph);
                }
                acc
            })
            .reduce(empty, merge);
        for (n, level) in found.into_iter().enumerate() {
            levels[n].extend(level);
        }
    }
    Ok(levels
        .into_iter()
        .flatten()
        .filter(|(_, g)| req.class_filter.keeps(g))
        .map(|(code, graph)| CactusEntry { code, graph })
        .collect())
}

/// Bitmask adjacency for the oracle.
struct Small {
    n: usize,
    adj: [u8; ORACLE_MAX_N],
}

impl Small {
    fn connected(&self) -> bool {
        let full = (1u16 << self.n) - 1;
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next = 0u16;
            for v in 0..self.n {
                if frontier & (1 << v) != 0 {
                    next |= self.adj[v] as u16;
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Counts simple `from`-`to` paths avoiding the edge `from-to`, stopping
    /// once `cap` are found.
    fn paths(&self, at: usize, to: usize, visited: u8, skip_direct: bool, cap: usize) -> usize {
        if at == to {
            return 1;
        }
        let mut total = 0;
        let mut nb = self.adj[at] & !visited;
        while nb != 0 && total < cap {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if skip_direct && w == to {
                continue;
            }
            total += self.paths(w, to, visited | (1 << w), false, cap - total);
        }
        total
    }

    /// No edge lies on two distinct cycles: for every edge `u-v`, at most one
    /// other `u`-`v` path exists.
    fn edges_on_at_most_one_cycle(&self) -> bool {
        (0..self.n).all(|u| {
            (u + 1..self.n)
                .filter(|&v| self.adj[u] & (1 << v) != 0)
                .all(|v| self.paths(u, v, 1 << u, true, 2) <= 1)
        })
    }
}

/// Canonical codes of all connected cacti on exactly `n` vertices, by brute
/// force over every edge subset of the complete graph. Independent of the
/// attachment generator.
pub fn naive_oracle(n: usize) -> Result<BTreeSet<CanonicalCode>, EnumerateError> {
    check_budget(n, ORACLE_MAX_N)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let max_edges = 3 * (n - 1) / 2;
    let canon = Canonizer::default();
    let subsets: u32 = 1 << pairs.len();
    let codes = (0..subsets)
        .into_par_iter()
        .filter(|mask| {
            let m = mask.count_ones() as usize;
            m + 1 >= n && m <= max_edges
        })
        .filter_map(|mask| {
            let mut small = Small {
                n,
                adj: [0; ORACLE_MAX_N],
            };
            let mut edges = Vec::new();
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    small.adj[u] |= 1 << v;
                    small.adj[v] |= 1 << u;
                    edges.push((u, v));
                }
            }
            if !small.connected() || !small.edges_on_at_most_one_cycle() {
                return None;
            }
            let g = Graph::new(n, &edges).expect("distinct pairs");
            Some(canon.code(&g).expect("within limit"))
        })
        .collect();
    Ok(codes)
}
