//! The Randić index, its edge-weight decompositions, and the change in the
//! index when a pendant or a cycle is attached at a vertex.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandicError {
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("cycle size {0} is below 3")]
    CycleTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandicValue {
    pub value: f64,
    /// `1/sqrt(d_u d_v)` per edge, in `Graph::edges` order.
    pub edge_weights: Vec<f64>,
    /// `(1/sqrt(d_u) - 1/sqrt(d_v))^2 / 2` per edge.
    pub asymmetry_weights: Vec<f64>,
}

fn weights(g: &Graph) -> (Vec<f64>, Vec<f64>) {
    g.edges()
        .map(|(u, v)| {
            let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
            let w = 1.0 / (du * dv).sqrt();
            let diff = 1.0 / du.sqrt() - 1.0 / dv.sqrt();
            (w, 0.5 * diff * diff)
        })
        .unzip()
}

/// Sum of edge weights.
pub fn randic_balaban(g: &Graph) -> RandicValue {
    let (edge_weights, asymmetry_weights) = weights(g);
    RandicValue {
        value: edge_weights.iter().sum(),
        edge_weights,
        asymmetry_weights,
    }
}

/// Non-isolated half-order minus the total edge asymmetry.
pub fn randic_caporossi(g: &Graph) -> RandicValue {
    let (edge_weights, asymmetry_weights) = weights(g);
    let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
    let value = (g.n() - isolated) as f64 / 2.0 - asymmetry_weights.iter().sum::<f64>();
    RandicValue {
        value,
        edge_weights,
        asymmetry_weights,
    }
}

pub fn randic_index(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

/// Which lemma clause a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DeltaClause {
    /// Pendant, any neighbourhood: `>= sqrt(d+1) - sqrt(d)`.
    Leaf1,
    /// Pendant, neighbours of degree >= 2: `>= (sqrt(d+1) - sqrt(d)) / sqrt(2)`.
    Leaf2,
    /// The same hypothesis with the stronger `> sqrt(d+1) - sqrt(d/2)`; fails
    /// in general and is kept only as a checkable statement.
    Leaf2Printed,
    /// Cycle, neighbours of degree >= 2: `>= (sqrt(d+2) - sqrt(d)) / sqrt(2) + (s-2)/2`.
    Cycle1,
    /// Cycle, `d >= 2` and neighbours of degree <= d+2: `<= (s-1)/2`.
    Cycle2,
    /// Cycle at a leaf whose neighbour has degree 2 or 3: `< (s-1)/2 + 0.075`.
    Cycle3,
}

impl DeltaClause {
    pub fn id(&self) -> &'static str {
        match self {
            DeltaClause::Leaf1 => "LEAF1",
            DeltaClause::Leaf2 => "LEAF2",
            DeltaClause::Leaf2Printed => "LEAF2-PRINTED",
            DeltaClause::Cycle1 => "CYCLE1",
            DeltaClause::Cycle2 => "CYCLE2",
            DeltaClause::Cycle3 => "CYCLE3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// The exact change is at least the bound.
    Lower,
    /// The exact change is at most the bound.
    Upper,
    /// The exact change is strictly below the bound.
    StrictUpper,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClauseBound {
    pub clause: DeltaClause,
    pub direction: Direction,
    pub value: f64,
}

impl ClauseBound {
    /// Signed margin: non-negative when the clause holds.
    pub fn slack(&self, exact: f64) -> f64 {
        match self.direction {
            Direction::Lower => exact - self.value,
            Direction::Upper | Direction::StrictUpper => self.value - exact,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaPrediction {
    /// Exact change from the neighbour-degree sum.
    pub exact: f64,
    /// Clause bounds whose hypotheses hold at this vertex.
    pub bounds: Vec<ClauseBound>,
}

impl DeltaPrediction {
    pub fn bound(&self, clause: DeltaClause) -> Option<&ClauseBound> {
        self.bounds.iter().find(|b| b.clause == clause)
    }

    /// The leading clause bound (clause 1 for pendants, the first applicable
    /// clause for cycles).
    pub fn relaxed_bound(&self) -> Option<f64> {
        self.bounds
            .iter()
            .find(|b| b.clause != DeltaClause::Leaf2Printed)
            .map(|b| b.value)
    }
}

fn attach_degree(g: &Graph, v: usize) -> Result<f64, RandicError> {
    if v >= g.n() {
        return Err(RandicError::NoSuchVertex(v));
    }
    match g.degree(v) {
        0 => Err(RandicError::IsolatedVertex(v)),
        d => Ok(d as f64),
    }
}

fn inverse_root_degree_sum(g: &Graph, v: usize) -> f64 {
    g.neighbors(v)
        .iter()
        .map(|&w| 1.0 / (g.degree(w) as f64).sqrt())
        .sum()
}

pub fn delta_pendant(g: &Graph, v: usize) -> Result<DeltaPrediction, RandicError> {
    let d = attach_degree(g, v)?;
    let s = inverse_root_degree_sum(g, v);
    let exact = 1.0 / (d + 1.0).sqrt() - s * (1.0 / d.sqrt() - 1.0 / (d + 1.0).sqrt());
    let mut bounds = vec![ClauseBound {
        clause: DeltaClause::Leaf1,
        direction: Direction::Lower,
        value: (d + 1.0).sqrt() - d.sqrt(),
    }];
    if g.neighbors(v).iter().all(|&w| g.degree(w) >= 2) {
        bounds.push(ClauseBound {
            clause: DeltaClause::Leaf2,
            direction: Direction::Lower,
            value: ((d + 1.0).sqrt() - d.sqrt()) / 2f64.sqrt(),
        });
        bounds.push(ClauseBound {
            clause: DeltaClause::Leaf2Printed,
            direction: Direction::Lower,
            value: (d + 1.0).sqrt() - (d / 2.0).sqrt(),
        });
    }
    Ok(DeltaPrediction { exact, bounds })
}

pub fn delta_cycle(g: &Graph, v: usize, size: usize) -> Result<DeltaPrediction, RandicError> {
    if size < 3 {
        return Err(RandicError::CycleTooSmall(size));
    }
    let d = attach_degree(g, v)?;
    let s = inverse_root_degree_sum(g, v);
    let sc = size as f64;
    let exact = (sc - 2.0) / 2.0 + 2.0 / (2.0 * (d + 2.0)).sqrt()
        - s * (1.0 / d.sqrt() - 1.0 / (d + 2.0).sqrt());
    let nbr_degrees: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    let dv = g.degree(v);
    let mut bounds = Vec::new();
    if nbr_degrees.iter().all(|&dw| dw >= 2) {
        bounds.push(ClauseBound {
            clause: DeltaClause::Cycle1,
            direction: Direction::Lower,
            value: ((d + 2.0).sqrt() - d.sqrt()) / 2f64.sqrt() + (sc - 2.0) / 2.0,
        });
    }
    if dv >= 2 && nbr_degrees.iter().all(|&dw| dw <= dv + 2) {
        bounds.push(ClauseBound {
            clause: DeltaClause::Cycle2,
            direction: Direction::Upper,
            value: (sc - 1.0) / 2.0,
        });
    }
    if dv == 1 && (2..=3).contains(&nbr_degrees[0]) {
        bounds.push(ClauseBound {
            clause: DeltaClause::Cycle3,
            direction: Direction::StrictUpper,
            value: (sc - 1.0) / 2.0 + 0.075,
        });
    }
    Ok(DeltaPrediction { exact, bounds })
}

/// `g` plus a new leaf adjacent to `v`.
pub fn apply_pendant(g: &Graph, v: usize) -> Result<Graph, RandicError> {
    if v >= g.n() {
        return Err(RandicError::NoSuchVertex(v));
    }
    let leaf = g.n();
    Ok(g.extended(1, &[(v, leaf)])?)
}

/// `g` plus a cycle of `size` vertices through `v` (adds `size - 1` vertices).
pub fn apply_cycle(g: &Graph, v: usize, size: usize) -> Result<Graph, RandicError> {
    if size < 3 {
        return Err(RandicError::CycleTooSmall(size));
    }
    if v >= g.n() {
        return Err(RandicError::NoSuchVertex(v));
    }
    let first = g.n();
    let mut ring = vec![v];
    ring.extend(first..first + size - 1);
    let extra: Vec<_> = (0..size).map(|i| (ring[i], ring[(i + 1) % size])).collect();
    Ok(g.extended(size - 1, &extra)?)
}
