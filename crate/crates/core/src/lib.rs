//! Randić index, radius and diameter of cactus graphs.
//!
//! The crate computes the Randić index and metric invariants of small
//! graphs, decomposes cacti into blocks and block-cut trees, enumerates all
//! cacti up to a vertex budget and checks a catalog of inequalities against
//! every one of them.

pub mod bounds;
pub mod canon;
pub mod edgelist;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod metric;
pub mod randic;
pub mod report;
pub mod structure;

pub use bounds::{
    bound_catalog, evaluate_all, evaluate_bound, BoundResult, BoundSpec, BoundStatus,
};
pub use canon::{canonical_code, CanonicalCode};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use enumerate::{generate_cacti, naive_oracle, ClassFilter, EnumerationRequest};
pub use family::{family, Family};
pub use graph::Graph;
pub use metric::{metric_profile, MetricProfile};
pub use randic::{randic_balaban, randic_caporossi, randic_index};
pub use structure::{block_decomposition, classify_cactus, CactusProfile};
