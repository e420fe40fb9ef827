//! Named graph families with fixed labellings.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters {params:?} for family {family}")]
    BadParams {
        family: &'static str,
        params: String,
    },
    #[error("{0}")]
    Invalid(String),
}

/// A named family member.
///
/// Text form is `name:params`: `path:7`, `cycle:6`, `star:5` (five leaves),
/// `lollipop:4` (a 4-cycle with pendants on two opposite vertices),
/// `tadpole:5.1` (a 5-cycle with a tail of one edge), `bouquet:2x3` (two
/// triangles sharing a vertex) and `complete:5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Lollipop(usize),
    Tadpole { cycle: usize, tail: usize },
    Bouquet { count: usize, size: usize },
    Complete(usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        let invalid = |msg: &str| Err(FamilyError::Invalid(msg.to_string()));
        let edges: Vec<(usize, usize)>;
        let n;
        match *self {
            Family::Path(k) => {
                if k < 1 {
                    return invalid("a path needs at least one vertex");
                }
                n = k;
                edges = (1..k).map(|i| (i - 1, i)).collect();
            }
            Family::Cycle(k) => {
                if k < 3 {
                    return invalid("a cycle needs at least three vertices");
                }
                n = k;
                edges = (0..k).map(|i| (i, (i + 1) % k)).collect();
            }
            Family::Star(leaves) => {
                if leaves < 1 {
                    return invalid("a star needs at least one leaf");
                }
                n = leaves + 1;
                edges = (1..=leaves).map(|v| (0, v)).collect();
            }
            Family::Lollipop(s) => {
                if s < 4 {
                    return invalid(
                        "two non-adjacent pendants need a cycle of at least four vertices",
                    );
                }
                n = s + 2;
                let mut e: Vec<_> = (0..s).map(|i| (i, (i + 1) % s)).collect();
                e.push((0, s));
                e.push((s / 2, s + 1));
                edges = e;
            }
            Family::Tadpole { cycle, tail } => {
                if cycle < 3 || tail < 1 {
                    return invalid(
                        "a tadpole needs a cycle of at least three vertices and a tail",
                    );
                }
                n = cycle + tail;
                let mut e: Vec<_> = (0..cycle).map(|i| (i, (i + 1) % cycle)).collect();
                e.push((0, cycle));
                e.extend((cycle + 1..n).map(|v| (v - 1, v)));
                edges = e;
            }
            Family::Bouquet { count, size } => {
                if count < 1 || size < 3 {
                    return invalid(
                        "a bouquet needs at least one cycle of at least three vertices",
                    );
                }
                n = 1 + count * (size - 1);
                let mut e = Vec::new();
                for c in 0..count {
                    let first = 1 + c * (size - 1);
                    let mut ring = vec![0];
                    ring.extend(first..first + size - 1);
                    e.extend((0..size).map(|i| (ring[i], ring[(i + 1) % size])));
                }
                edges = e;
            }
            Family::Complete(k) => {
                if k < 1 {
                    return invalid("a complete graph needs at least one vertex");
                }
                n = k;
                edges = (0..k)
                    .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
                    .collect();
            }
        }
        Ok(Graph::new(n, &edges).expect("family edges are simple"))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Star(_) => "star",
            Family::Lollipop(_) => "lollipop",
            Family::Tadpole { .. } => "tadpole",
            Family::Bouquet { .. } => "bouquet",
            Family::Complete(_) => "complete",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(k)
            | Family::Cycle(k)
            | Family::Star(k)
            | Family::Lollipop(k)
            | Family::Complete(k) => write!(f, "{}:{k}", self.name()),
            Family::Tadpole { cycle, tail } => write!(f, "tadpole:{cycle}.{tail}"),
            Family::Bouquet { count, size } => write!(f, "bouquet:{count}x{size}"),
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let (name, params) = spec
            .split_once(':')
            .ok_or_else(|| FamilyError::UnknownFamily(spec.to_string()))?;
        let bad = |family: &'static str| FamilyError::BadParams {
            family,
            params: params.to_string(),
        };
        let one = |family: &'static str| params.parse::<usize>().map_err(|_| bad(family));
        let two = |family: &'static str, sep: char| -> Result<(usize, usize), FamilyError> {
            let (a, b) = params.split_once(sep).ok_or_else(|| bad(family))?;
            Ok((
                a.parse().map_err(|_| bad(family))?,
                b.parse().map_err(|_| bad(family))?,
            ))
        };
        match name {
            "path" => Ok(Family::Path(one("path")?)),
            "cycle" => Ok(Family::Cycle(one("cycle")?)),
            "star" => Ok(Family::Star(one("star")?)),
            "lollipop" => Ok(Family::Lollipop(one("lollipop")?)),
            "complete" => Ok(Family::Complete(one("complete")?)),
            "tadpole" => {
                let (cycle, tail) = two("tadpole", '.')?;
                Ok(Family::Tadpole { cycle, tail })
            }
            "bouquet" => {
                let (count, size) = two("bouquet", 'x')?;
                Ok(Family::Bouquet { count, size })
            }
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

/// Parses and builds in one step.
pub fn family(spec: &str) -> Result<Graph, FamilyError> {
    spec.parse::<Family>()?.build()
}
