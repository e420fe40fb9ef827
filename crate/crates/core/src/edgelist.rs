//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n 6
//! 0 1
//! 1 2
//! ```
//!
//! Each data line holds two decimal vertex ids separated by whitespace. The
//! optional `n <count>` header fixes the vertex count; without it the count is
//! one more than the largest id seen.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `u v` or `n <count>`, found {found:?}")]
    Malformed { line: usize, found: String },
    #[error("line {line}: {token:?} is not a non-negative integer")]
    NotAnInteger { line: usize, token: String },
    #[error("line {line}: duplicate `n` header")]
    DuplicateHeader { line: usize },
    #[error("header declares {declared} vertices but vertex {max_id} is used")]
    HeaderTooSmall { declared: usize, max_id: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_id(token: &str, line: usize) -> Result<usize, ParseError> {
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::NotAnInteger {
            line,
            token: token.to_string(),
        });
    }
    token.parse().map_err(|_| ParseError::NotAnInteger {
        line,
        token: token.to_string(),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                header = Some(parse_id(count, line)?);
            }
            [u, v] => edges.push((parse_id(u, line)?, parse_id(v, line)?)),
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    found: trimmed.to_string(),
                })
            }
        }
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match header {
        Some(declared) if declared < implied => {
            return Err(ParseError::HeaderTooSmall {
                declared,
                max_id: implied - 1,
            })
        }
        Some(declared) => declared,
        None => implied,
    };
    Ok(Graph::new(n, &edges)?)
}

/// Writes the header followed by edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
