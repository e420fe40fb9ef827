//! The inequality catalog: every bound as a pure function of a graph's
//! invariants, with an applicability predicate and optional exception.
//!
//! Bound ids are a stable vocabulary shared with the CLI and report columns.
//! Alongside the graph-level bounds sit the attachment lemma clauses
//! (`LEAF*`, `CYCLE*`), which are checked per vertex.

use std::f64::consts::SQRT_2;
use std::sync::LazyLock;

use serde::Serialize;

use crate::graph::Graph;
use crate::metric::{self, MetricProfile};
use crate::randic::{self, DeltaClause, Direction};
use crate::structure::{self, BcShape, CactusProfile, StructureError};

/// A result passes when its slack is at least `-PASS_TOLERANCE`.
pub const PASS_TOLERANCE: f64 = 1e-9;
/// A result is an equality case when `|slack| <= EQUALITY_TOLERANCE`.
pub const EQUALITY_TOLERANCE: f64 = 1e-6;

/// Cycle size used when checking the cycle lemma clauses per vertex. The
/// slack of every clause is independent of the size.
pub const LEMMA_CYCLE_SIZE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundStatus {
    Proved,
    Conjectured,
    RefutedAsStated,
}

impl BoundStatus {
    pub fn label(&self) -> &'static str {
        match self {
            BoundStatus::Proved => "proved",
            BoundStatus::Conjectured => "conjectured",
            BoundStatus::RefutedAsStated => "refuted_as_stated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtLeast,
    AtMost,
    Equal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Inequality {
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
}

impl Inequality {
    fn at_least(lhs: f64, rhs: f64) -> Self {
        Inequality {
            relation: Relation::AtLeast,
            lhs,
            rhs,
        }
    }

    fn at_most(lhs: f64, rhs: f64) -> Self {
        Inequality {
            relation: Relation::AtMost,
            lhs,
            rhs,
        }
    }

    fn equal(lhs: f64, rhs: f64) -> Self {
        Inequality {
            relation: Relation::Equal,
            lhs,
            rhs,
        }
    }

    /// Signed margin, non-negative when the relation holds.
    pub fn slack(&self) -> f64 {
        match self.relation {
            Relation::AtLeast => self.lhs - self.rhs,
            Relation::AtMost => self.rhs - self.lhs,
            Relation::Equal => -(self.lhs - self.rhs).abs(),
        }
    }
}

/// Everything the catalog's formulas read.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Invariants {
    pub n: usize,
    pub edges: usize,
    pub k: usize,
    pub b: usize,
    pub t3: usize,
    /// Articulation points on the central block.
    pub m: usize,
    pub radius: usize,
    pub diameter: usize,
    pub randic: f64,
    pub degrees: Vec<usize>,
    pub is_tree: bool,
    pub is_cactus: bool,
    pub is_nontrivial_cactus: bool,
    pub is_chemical: bool,
    pub is_path: bool,
    pub is_cycle: bool,
    pub bc_shape: BcShape,
}

impl Invariants {
    pub fn compute(g: &Graph) -> Result<Self, StructureError> {
        let mp = metric::metric_profile(g)?;
        let dec = structure::block_decomposition(g)?;
        let profile = structure::profile_from_parts(g, &mp, &dec);
        Ok(Self::from_parts(g, &mp, &profile, randic::randic_index(g)))
    }

    pub fn from_parts(g: &Graph, mp: &MetricProfile, p: &CactusProfile, randic: f64) -> Self {
        let max_degree = g.max_degree();
        Invariants {
            n: g.n(),
            edges: g.m(),
            k: p.k,
            b: p.b,
            t3: p.t3,
            m: p.m,
            radius: mp.radius,
            diameter: mp.diameter,
            randic,
            degrees: g.degrees(),
            is_tree: p.is_tree,
            is_cactus: p.is_cactus,
            is_nontrivial_cactus: p.is_nontrivial_cactus,
            is_chemical: p.is_chemical,
            is_path: p.is_tree && max_degree <= 2,
            is_cycle: g.n() >= 3 && g.m() == g.n() && g.degrees().iter().all(|&d| d == 2),
            bc_shape: p.bc_shape,
        }
    }

    pub fn is_even_path(&self) -> bool {
        self.is_path && self.n.is_multiple_of(2)
    }

    pub fn is_even_cycle(&self) -> bool {
        self.is_cycle && self.n.is_multiple_of(2)
    }

    fn nf(&self) -> f64 {
        self.n as f64
    }

    fn kf(&self) -> f64 {
        self.k as f64
    }

    fn bf(&self) -> f64 {
        self.b as f64
    }

    fn r(&self) -> f64 {
        self.radius as f64
    }

    fn d(&self) -> f64 {
        self.diameter as f64
    }

    fn nonempty(&self) -> bool {
        self.n >= 2
    }

    fn mixed_cactus(&self) -> bool {
        self.is_cactus && self.k > 0 && self.b > 0
    }
}

/// `R(G_6) = 2/sqrt(3) + 2 sqrt(2/3)`: the two-pendant correction term.
fn two_pendants() -> f64 {
    2.0 / 3f64.sqrt() + 2.0 * (2.0f64 / 3.0).sqrt()
}

/// `1/sqrt(3) + sqrt(2/3) - 1`, the per-arm bridge term.
fn arm_term() -> f64 {
    1.0 / 3f64.sqrt() + (2.0f64 / 3.0).sqrt() - 1.0
}

#[derive(Clone, Copy)]
pub struct Exception {
    pub label: &'static str,
    pub predicate: fn(&Invariants) -> bool,
}

pub struct BoundSpec {
    pub id: &'static str,
    pub status: BoundStatus,
    /// Applicability class, as shown in reports.
    pub class: &'static str,
    pub statement: &'static str,
    pub equality_family: Option<&'static str>,
    pub applies: fn(&Invariants) -> bool,
    pub inequality: fn(&Invariants) -> Inequality,
    pub exception: Option<Exception>,
}

impl std::fmt::Debug for BoundSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundSpec")
            .field("id", &self.id)
            .field("status", &self.status)
            .finish_non_exhaustive()
    }
}

static CATALOG: LazyLock<Vec<BoundSpec>> = LazyLock::new(build_catalog);

/// All graph-level bounds, ordered by id.
pub fn bound_catalog() -> &'static [BoundSpec] {
    &CATALOG
}

pub fn find_bound(id: &str) -> Option<&'static BoundSpec> {
    bound_catalog().iter().find(|b| b.id == id)
}

fn build_catalog() -> Vec<BoundSpec> {
    use BoundStatus::*;
    let mut catalog = vec![
        BoundSpec {
            id: "UB-N2",
            status: Proved,
            class: "all",
            statement: "R <= n/2",
            equality_family: Some("regular graphs"),
            applies: |_| true,
            inequality: |i| Inequality::at_most(i.randic, i.nf() / 2.0),
            exception: None,
        },
        BoundSpec {
            id: "T-D1",
            status: Proved,
            class: "connected",
            statement: "R - d >= -e/2 + sqrt2 - 1",
            equality_family: Some("paths"),
            applies: |i| i.nonempty(),
            inequality: |i| {
                Inequality::at_least(i.randic - i.d(), -(i.edges as f64) / 2.0 + SQRT_2 - 1.0)
            },
            exception: None,
        },
        BoundSpec {
            id: "T-D2",
            status: Proved,
            class: "connected",
            statement: "R/d >= (n - 3 + 2 sqrt2)/(n + e - 1)",
            equality_family: Some("paths"),
            applies: |i| i.nonempty(),
            inequality: |i| {
                Inequality::at_least(
                    i.randic / i.d(),
                    (i.nf() - 3.0 + 2.0 * SQRT_2) / (i.nf() + i.edges as f64 - 1.0),
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "T-D3",
            status: Proved,
            class: "tree",
            statement: "R - d/2 >= sqrt2 - 1",
            equality_family: Some("paths on more than two vertices"),
            applies: |i| i.is_tree && i.nonempty(),
            inequality: |i| Inequality::at_least(i.randic - i.d() / 2.0, SQRT_2 - 1.0),
            exception: None,
        },
        BoundSpec {
            id: "T-R",
            status: Proved,
            class: "tree",
            statement: "even path (n > 2): R - r = sqrt2 - 3/2; otherwise R - r >= 0",
            equality_family: Some("even paths (exact); P_2 for the general clause"),
            applies: |i| i.is_tree && i.nonempty(),
            inequality: |i| {
                if i.is_even_path() && i.n > 2 {
                    Inequality::equal(i.randic - i.r(), SQRT_2 - 1.5)
                } else {
                    Inequality::at_least(i.randic - i.r(), 0.0)
                }
            },
            exception: None,
        },
        BoundSpec {
            id: "C-R0",
            status: Proved,
            class: "cactus, not an even path",
            statement: "R - r >= 0",
            equality_family: Some("P_2 and even cycles"),
            applies: |i| i.is_cactus && i.nonempty() && !i.is_even_path(),
            inequality: |i| Inequality::at_least(i.randic - i.r(), 0.0),
            exception: None,
        },
        BoundSpec {
            id: "C-R1",
            status: Proved,
            class: "cactus, k > 0",
            statement: "R - r >= (k - 1)(sqrt2 - 1)",
            equality_family: Some("even cycles"),
            applies: |i| i.is_cactus && i.k > 0,
            inequality: |i| Inequality::at_least(i.randic - i.r(), (i.kf() - 1.0) * (SQRT_2 - 1.0)),
            exception: None,
        },
        BoundSpec {
            id: "C-R2",
            status: Conjectured,
            class: "cactus, k > 0, b > 0 (m = bridge count)",
            statement: "R - r >= (k - 1)(sqrt2 - 1) + b(1/sqrt3 + sqrt(2/3) - 1) - 1/2",
            equality_family: None,
            applies: |i| i.mixed_cactus(),
            inequality: |i| {
                Inequality::at_least(
                    i.randic - i.r(),
                    (i.kf() - 1.0) * (SQRT_2 - 1.0) + i.bf() * arm_term() - 0.5,
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "NTC-D1",
            status: Proved,
            class: "nontrivial cactus",
            statement: "R - d >= -(k - 1)(2 - sqrt2)",
            equality_family: Some("path BC-tree, longitudinally symmetric"),
            applies: |i| i.is_nontrivial_cactus && i.k > 0,
            inequality: |i| Inequality::at_least(i.randic - i.d(), -(i.kf() - 1.0) * (2.0 - SQRT_2)),
            exception: None,
        },
        BoundSpec {
            id: "NTC-D2",
            status: Proved,
            class: "nontrivial cactus",
            statement: "R - d/2 >= n/4 - (k - 1)(7/4 - sqrt2)",
            equality_family: Some("path BC-tree, longitudinally symmetric"),
            applies: |i| i.is_nontrivial_cactus && i.k > 0,
            inequality: |i| {
                Inequality::at_least(
                    i.randic - i.d() / 2.0,
                    i.nf() / 4.0 - (i.kf() - 1.0) * (1.75 - SQRT_2),
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "NTC-R",
            status: Proved,
            class: "nontrivial cactus",
            statement: "R - r >= (k - 1)(sqrt2 - 1) + 1/2",
            equality_family: Some("odd cycles"),
            applies: |i| i.is_nontrivial_cactus && i.k > 0,
            inequality: |i| {
                Inequality::at_least(i.randic - i.r(), (i.kf() - 1.0) * (SQRT_2 - 1.0) + 0.5)
            },
            exception: Some(Exception {
                label: "even cycle",
                predicate: |i| i.is_even_cycle(),
            }),
        },
        BoundSpec {
            id: "CAC-D1",
            status: Proved,
            class: "cactus, k > 0, b > 0",
            statement: "R - d >= -b/2 - (k - 1)(2 - sqrt2) - 3 + 2/sqrt3 + 2 sqrt(2/3)",
            equality_family: Some("path BC-tree with two end pendants, longitudinally symmetric"),
            applies: |i| i.mixed_cactus(),
            inequality: |i| {
                Inequality::at_least(
                    i.randic - i.d(),
                    -i.bf() / 2.0 - (i.kf() - 1.0) * (2.0 - SQRT_2) - 3.0 + two_pendants(),
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "CAC-D2",
            status: Proved,
            class: "cactus, k > 0, b > 0",
            statement: "R - d/2 >= (n - b)/4 - (k - 1)(7/4 - sqrt2) - 3 + 2/sqrt3 + 2 sqrt(2/3)",
            equality_family: Some("path BC-tree with two end pendants, longitudinally symmetric"),
            applies: |i| i.mixed_cactus(),
            inequality: |i| {
                Inequality::at_least(
                    i.randic - i.d() / 2.0,
                    (i.nf() - i.bf()) / 4.0 - (i.kf() - 1.0) * (1.75 - SQRT_2) - 3.0
                        + two_pendants(),
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "CAC-R",
            status: Proved,
            class: "cactus, k > 0, b > 0, central block with m >= 2 articulation points",
            statement: "R - r >= (k - 1)(sqrt2 - 1) + m(1/sqrt3 + sqrt(2/3) - 1) - 1/2",
            equality_family: Some("starlike BC-tree rooted at the central block with m pendants"),
            applies: |i| i.mixed_cactus() && i.m >= 2,
            inequality: |i| {
                Inequality::at_least(
                    i.randic - i.r(),
                    (i.kf() - 1.0) * (SQRT_2 - 1.0) + i.m as f64 * arm_term() - 0.5,
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "CONJ-RD1",
            status: Conjectured,
            class: "nontrivial cactus",
            statement: "R/d >= (n - (k - 1)(3 - 2 sqrt2))/(n + k - 1)",
            equality_family: Some("path BC-tree, longitudinally symmetric"),
            applies: |i| i.is_nontrivial_cactus && i.k > 0,
            inequality: |i| {
                Inequality::at_least(
                    i.randic / i.d(),
                    (i.nf() - (i.kf() - 1.0) * (3.0 - 2.0 * SQRT_2)) / (i.nf() + i.kf() - 1.0),
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "CONJ-RD2",
            status: Conjectured,
            class: "cactus, k > 0, b > 0",
            statement: "R/d >= (n - (k - 1)(3 - 2 sqrt2) - 6 + 4/sqrt3 + 4 sqrt(2/3))/(n + k + b - 1)",
            equality_family: Some("path BC-tree with two leaves, longitudinally symmetric"),
            applies: |i| i.mixed_cactus(),
            inequality: |i| {
                Inequality::at_least(
                    i.randic / i.d(),
                    (i.nf() - (i.kf() - 1.0) * (3.0 - 2.0 * SQRT_2) - 6.0 + 2.0 * two_pendants())
                        / (i.nf() + i.kf() + i.bf() - 1.0),
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "V-TREE",
            status: Proved,
            class: "tree",
            statement: "R >= 1 - n + sum sqrt(d_v)",
            equality_family: Some("stars"),
            applies: |i| i.is_tree && i.nonempty(),
            inequality: |i| {
                let roots: f64 = i.degrees.iter().map(|&d| (d as f64).sqrt()).sum();
                Inequality::at_least(i.randic, 1.0 - i.nf() + roots)
            },
            exception: None,
        },
        BoundSpec {
            id: "V-CAC",
            status: Proved,
            class: "cactus, k > 0",
            statement: "R >= (1 - n - k)/2 - b(3/2 - sqrt2) + sum sqrt(d_v/2)",
            equality_family: Some("nontrivial cacti with no adjacent articulation points"),
            applies: |i| i.is_cactus && i.k > 0,
            inequality: |i| {
                let roots: f64 = i.degrees.iter().map(|&d| (d as f64 / 2.0).sqrt()).sum();
                Inequality::at_least(
                    i.randic,
                    (1.0 - i.nf() - i.kf()) / 2.0 - i.bf() * (1.5 - SQRT_2) + roots,
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "X-TREE",
            status: Proved,
            class: "tree, n > 2",
            statement: "R >= sqrt(n - 1)",
            equality_family: Some("stars"),
            applies: |i| i.is_tree && i.n > 2,
            inequality: |i| Inequality::at_least(i.randic, (i.nf() - 1.0).sqrt()),
            exception: None,
        },
        BoundSpec {
            id: "X-NTC",
            status: Proved,
            class: "nontrivial cactus",
            statement: "R >= (n - k - 1)/2 + sqrt(k)",
            equality_family: Some("bouquets of cycles"),
            applies: |i| i.is_nontrivial_cactus && i.k > 0,
            inequality: |i| Inequality::at_least(i.randic, (i.nf() - i.kf() - 1.0) / 2.0 + i.kf().sqrt()),
            exception: None,
        },
        BoundSpec {
            id: "X-CHEM",
            status: Proved,
            class: "chemical nontrivial cactus",
            statement: "R >= n/2 - (k - 1)(3/2 - sqrt2)",
            equality_family: Some("no adjacent articulation points"),
            applies: |i| i.is_nontrivial_cactus && i.is_chemical && i.k > 0,
            inequality: |i| Inequality::at_least(i.randic, i.nf() / 2.0 - (i.kf() - 1.0) * (1.5 - SQRT_2)),
            exception: None,
        },
        BoundSpec {
            id: "X-STAR",
            status: Proved,
            class: "cactus, k > 0, b > 0, BC-tree starlike around a block of degree m (a path counts as m = 2)",
            statement: "R >= n/2 - (k - 1)(3/2 - sqrt2) - m(3/2 - 1/sqrt3 - sqrt(2/3))",
            equality_family: Some("m pendants, no adjacent articulation points"),
            applies: |i| i.mixed_cactus() && i.bc_shape.block_root_arms().is_some(),
            inequality: |i| {
                let arms = i.bc_shape.block_root_arms().unwrap_or(0) as f64;
                Inequality::at_least(
                    i.randic,
                    i.nf() / 2.0 - (i.kf() - 1.0) * (1.5 - SQRT_2)
                        - arms * (1.5 - 1.0 / 3f64.sqrt() - (2.0f64 / 3.0).sqrt()),
                )
            },
            exception: None,
        },
        BoundSpec {
            id: "S-D",
            status: Proved,
            class: "cactus",
            statement: "d <= (n + k + b - 1)/2",
            equality_family: Some("path BC-tree, longitudinally symmetric"),
            applies: |i| i.is_cactus && i.nonempty(),
            inequality: |i| Inequality::at_most(i.d(), (i.nf() + i.kf() + i.bf() - 1.0) / 2.0),
            exception: None,
        },
        BoundSpec {
            id: "S-R",
            status: Proved,
            class: "cactus",
            statement: "even cycle: r = (n - k + 1)/2; otherwise r <= (n - k)/2, and r <= (n - k - m + 2)/2 when m >= 2",
            equality_family: Some("even cycles (exact)"),
            applies: |i| i.is_cactus && i.nonempty(),
            inequality: |i| {
                if i.is_even_cycle() {
                    Inequality::equal(i.r(), (i.nf() - i.kf() + 1.0) / 2.0)
                } else if i.m >= 2 {
                    Inequality::at_most(i.r(), (i.nf() - i.kf() - i.m as f64 + 2.0) / 2.0)
                } else {
                    Inequality::at_most(i.r(), (i.nf() - i.kf()) / 2.0)
                }
            },
            exception: None,
        },
    ];
    catalog.sort_by_key(|b| b.id);
    catalog
}

/// Outcome of one statement on one graph (and, for lemma clauses, one
/// vertex). Inapplicable statements carry no values and no judgment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult {
    pub id: &'static str,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub pass: Option<bool>,
    pub equality: Option<bool>,
    pub excepted: bool,
}

impl BoundResult {
    fn inapplicable(id: &'static str) -> Self {
        BoundResult {
            id,
            applicable: false,
            vertex: None,
            lhs: None,
            rhs: None,
            slack: None,
            pass: None,
            equality: None,
            excepted: false,
        }
    }

    fn judged(id: &'static str, lhs: f64, rhs: f64, slack: f64, excepted: bool) -> Self {
        BoundResult {
            id,
            applicable: true,
            vertex: None,
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(slack),
            pass: Some(slack >= -PASS_TOLERANCE),
            equality: Some(slack.abs() <= EQUALITY_TOLERANCE),
            excepted,
        }
    }

    /// Applicable, failing, and not covered by an exception.
    pub fn is_failure(&self) -> bool {
        self.pass == Some(false) && !self.excepted
    }

    /// Applicable and failing, whether excepted or not.
    pub fn is_violation(&self) -> bool {
        self.pass == Some(false)
    }
}

pub fn evaluate_bound(spec: &BoundSpec, inv: &Invariants) -> BoundResult {
    if !(spec.applies)(inv) {
        return BoundResult::inapplicable(spec.id);
    }
    let ineq = (spec.inequality)(inv);
    let excepted = spec.exception.is_some_and(|e| (e.predicate)(inv));
    BoundResult::judged(spec.id, ineq.lhs, ineq.rhs, ineq.slack(), excepted)
}

/// Every catalog bound on `g`, ordered by id.
pub fn evaluate_all(g: &Graph) -> Result<Vec<BoundResult>, StructureError> {
    let inv = Invariants::compute(g)?;
    Ok(bound_catalog()
        .iter()
        .map(|s| evaluate_bound(s, &inv))
        .collect())
}

/// An attachment lemma clause, checked at every non-isolated vertex.
#[derive(Debug)]
pub struct LemmaSpec {
    pub id: &'static str,
    pub clause: DeltaClause,
    pub status: BoundStatus,
    pub statement: &'static str,
}

static LEMMAS: [LemmaSpec; 6] = [
    LemmaSpec {
        id: "CYCLE1",
        clause: DeltaClause::Cycle1,
        status: BoundStatus::Proved,
        statement: "all d_w >= 2: R(G+c) - R(G) >= (sqrt(d_v+2) - sqrt(d_v))/sqrt2 + (s-2)/2",
    },
    LemmaSpec {
        id: "CYCLE2",
        clause: DeltaClause::Cycle2,
        status: BoundStatus::Proved,
        statement: "d_v >= 2, all d_w <= d_v + 2: R(G+c) - R(G) <= (s-1)/2",
    },
    LemmaSpec {
        id: "CYCLE3",
        clause: DeltaClause::Cycle3,
        status: BoundStatus::Proved,
        statement: "d_v = 1, 2 <= d_w <= 3: R(G+c) - R(G) < (s-1)/2 + 0.075",
    },
    LemmaSpec {
        id: "LEAF1",
        clause: DeltaClause::Leaf1,
        status: BoundStatus::Proved,
        statement: "R(G+e) - R(G) >= sqrt(d_v+1) - sqrt(d_v)",
    },
    LemmaSpec {
        id: "LEAF2",
        clause: DeltaClause::Leaf2,
        status: BoundStatus::Proved,
        statement: "all d_w >= 2: R(G+e) - R(G) >= (sqrt(d_v+1) - sqrt(d_v))/sqrt2",
    },
    LemmaSpec {
        id: "LEAF2-PRINTED",
        clause: DeltaClause::Leaf2Printed,
        status: BoundStatus::RefutedAsStated,
        statement: "all d_w >= 2: R(G+e) - R(G) > sqrt(d_v+1) - sqrt(d_v/2)",
    },
];

pub fn lemma_catalog() -> &'static [LemmaSpec] {
    &LEMMAS
}

pub fn find_lemma(id: &str) -> Option<&'static LemmaSpec> {
    LEMMAS.iter().find(|l| l.id == id)
}

/// One result per non-isolated vertex at which the clause's hypotheses hold.
pub fn evaluate_lemma(spec: &LemmaSpec, g: &Graph) -> Vec<BoundResult> {
    (0..g.n())
        .filter(|&v| g.degree(v) > 0)
        .filter_map(|v| {
            let prediction = match spec.clause {
                DeltaClause::Leaf1 | DeltaClause::Leaf2 | DeltaClause::Leaf2Printed => {
                    randic::delta_pendant(g, v)
                }
                _ => randic::delta_cycle(g, v, LEMMA_CYCLE_SIZE),
            }
            .expect("vertex exists and is not isolated");
            let bound = *prediction.bound(spec.clause)?;
            let slack = bound.slack(prediction.exact);
            let (lhs, rhs) = (prediction.exact, bound.value);
            debug_assert!(matches!(
                bound.direction,
                Direction::Lower | Direction::Upper | Direction::StrictUpper
            ));
            let mut result = BoundResult::judged(spec.id, lhs, rhs, slack, false);
            result.vertex = Some(v);
            Some(result)
        })
        .collect()
}

/// A catalog entry of either kind, looked up by id.
#[derive(Debug, Clone, Copy)]
pub enum Statement {
    Bound(&'static BoundSpec),
    Lemma(&'static LemmaSpec),
}

impl Statement {
    pub fn id(&self) -> &'static str {
        match self {
            Statement::Bound(b) => b.id,
            Statement::Lemma(l) => l.id,
        }
    }

    pub fn status(&self) -> BoundStatus {
        match self {
            Statement::Bound(b) => b.status,
            Statement::Lemma(l) => l.status,
        }
    }

    pub fn class(&self) -> &'static str {
        match self {
            Statement::Bound(b) => b.class,
            Statement::Lemma(_) => "vertex of a cactus",
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            Statement::Bound(b) => b.statement,
            Statement::Lemma(l) => l.statement,
        }
    }

    /// Results on one graph whose invariants are already known.
    pub fn evaluate(&self, g: &Graph, inv: &Invariants) -> Vec<BoundResult> {
        match self {
            Statement::Bound(b) => vec![evaluate_bound(b, inv)],
            Statement::Lemma(l) => evaluate_lemma(l, g),
        }
    }
}

pub fn find_statement(id: &str) -> Option<Statement> {
    find_bound(id)
        .map(Statement::Bound)
        .or_else(|| find_lemma(id).map(Statement::Lemma))
}

/// Every bound followed by every lemma clause.
pub fn all_statements() -> Vec<Statement> {
    bound_catalog()
        .iter()
        .map(Statement::Bound)
        .chain(lemma_catalog().iter().map(Statement::Lemma))
        .collect()
}
