//! Hop distances, eccentricities, radius, diameter and centers.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricProfile {
    pub eccentricities: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    /// Vertices of minimum eccentricity, ascending.
    pub centers: Vec<usize>,
}

/// BFS hop counts from `source`. Fails unless every vertex is reachable.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<usize>, MetricError> {
    if source >= g.n() {
        return Err(MetricError::NoSuchVertex(source));
    }
    let dist = bfs_raw(g, source);
    if dist.contains(&usize::MAX) {
        return Err(MetricError::Disconnected);
    }
    Ok(dist)
}

/// BFS that leaves unreachable vertices at `usize::MAX`.
pub(crate) fn bfs_raw(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs hop distances by one BFS per vertex.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<usize>>, MetricError> {
    (0..g.n()).map(|s| bfs_distances(g, s)).collect()
}

pub fn metric_profile(g: &Graph) -> Result<MetricProfile, MetricError> {
    let dist = distance_matrix(g)?;
    profile_from_distances(&dist)
}

pub fn profile_from_distances(dist: &[Vec<usize>]) -> Result<MetricProfile, MetricError> {
    if dist.is_empty() {
        return Err(MetricError::Empty);
    }
    let eccentricities: Vec<usize> = dist
        .iter()
        .map(|row| row.iter().copied().max().unwrap_or(0))
        .collect();
    let radius = *eccentricities.iter().min().unwrap();
    let diameter = *eccentricities.iter().max().unwrap();
    let centers = eccentricities
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e == radius)
        .map(|(v, _)| v)
        .collect();
    Ok(MetricProfile {
        eccentricities,
        radius,
        diameter,
        centers,
    })
}
