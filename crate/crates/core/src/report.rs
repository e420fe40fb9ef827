//! Sweeps, searches and the JSON/CSV documents the CLI writes.
//!
//! Everything here is deterministic: statements are ordered by id, graphs by
//! `(n, code)`, and every float is rounded to 12 significant digits before it
//! is serialized, so identical requests give byte-identical output.

use std::cmp::Ordering;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, BoundResult, BoundStatus, Invariants, Statement};
use crate::canon::{self, CanonicalCode};
use crate::enumerate::{self, CactusEntry, ClassFilter, EnumerateError, EnumerationRequest};
use crate::graph::{edges_compact, Graph};
use crate::metric::{self, MetricError};
use crate::randic;
use crate::structure::{self, Block, BlockKind, StructureError};

/// Examples kept per statement in the anomaly and failure lists.
pub const EXAMPLE_CAP: usize = 20;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown bound id {0:?}")]
    UnknownBound(String),
    #[error("no bounds selected")]
    EmptySelection,
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Canon(#[from] canon::CanonError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Rounds to 12 significant digits; magnitudes below `1e-12` become zero.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x.abs() < 1e-12 {
        return if x.is_finite() { 0.0 } else { x };
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

fn round_opt(x: Option<f64>) -> Option<f64> {
    x.map(round12)
}

fn rounded(r: &BoundResult) -> BoundResult {
    BoundResult {
        lhs: round_opt(r.lhs),
        rhs: round_opt(r.rhs),
        slack: round_opt(r.slack),
        ..r.clone()
    }
}

/// `all`, or a comma-separated list of bound and lemma ids.
pub fn parse_selection(text: &str) -> Result<Vec<Statement>, ReportError> {
    let mut selected = if text.trim() == "all" {
        bounds::all_statements()
    } else {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|id| {
                bounds::find_statement(id).ok_or_else(|| ReportError::UnknownBound(id.into()))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    if selected.is_empty() {
        return Err(ReportError::EmptySelection);
    }
    selected.sort_by_key(|s| s.id());
    selected.dedup_by_key(|s| s.id());
    Ok(selected)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Example {
    pub code: String,
    pub n: usize,
    pub edges: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub excepted: bool,
    #[serde(skip)]
    key: (usize, CanonicalCode),
}

impl Example {
    fn new(entry: &CactusEntry, r: &BoundResult) -> Self {
        Example {
            code: entry.code.to_hex(),
            n: entry.graph.n(),
            edges: edges_compact(&entry.graph),
            vertex: r.vertex,
            lhs: round12(r.lhs.unwrap_or(f64::NAN)),
            rhs: round12(r.rhs.unwrap_or(f64::NAN)),
            slack: round12(r.slack.unwrap_or(f64::NAN)),
            excepted: r.excepted,
            key: (entry.graph.n(), entry.code.clone()),
        }
    }

    fn order(&self, other: &Self) -> Ordering {
        self.key
            .cmp(&other.key)
            .then(self.vertex.cmp(&other.vertex))
    }

    pub fn graph(&self) -> Graph {
        self.key.1.to_graph()
    }
}

/// The smallest capped prefix of a sorted union, so merging is associative.
fn merge_examples(mut a: Vec<Example>, b: Vec<Example>) -> Vec<Example> {
    a.extend(b);
    a.sort_by(Example::order);
    a.truncate(EXAMPLE_CAP);
    a
}

/// Per-statement accumulator over a sweep. Graphs count once per statement
/// even when a lemma clause is checked at several of their vertices.
#[derive(Debug, Clone, Default)]
struct Summary {
    n_tested: u64,
    failures: u64,
    exceptions: u64,
    equalities: u64,
    argmin: Option<Example>,
    failure_examples: Vec<Example>,
    exception_examples: Vec<Example>,
}

fn argmin_order(a: &Example, b: &Example) -> Ordering {
    a.slack.total_cmp(&b.slack).then_with(|| a.order(b))
}

impl Summary {
    fn observe(&mut self, entry: &CactusEntry, results: &[BoundResult]) {
        let applicable: Vec<&BoundResult> = results.iter().filter(|r| r.applicable).collect();
        if applicable.is_empty() {
            return;
        }
        self.n_tested += 1;
        if applicable.iter().any(|r| r.equality == Some(true)) {
            self.equalities += 1;
        }
        if let Some(first) = applicable.iter().find(|r| r.is_failure()) {
            self.failures += 1;
            self.failure_examples = merge_examples(
                std::mem::take(&mut self.failure_examples),
                vec![Example::new(entry, first)],
            );
        }
        if let Some(first) = applicable.iter().find(|r| r.is_violation() && r.excepted) {
            self.exceptions += 1;
            self.exception_examples = merge_examples(
                std::mem::take(&mut self.exception_examples),
                vec![Example::new(entry, first)],
            );
        }
        let local = applicable
            .iter()
            .map(|r| Example::new(entry, r))
            .min_by(argmin_order)
            .expect("nonempty");
        self.argmin = Some(match self.argmin.take() {
            Some(cur) if argmin_order(&cur, &local) != Ordering::Greater => cur,
            _ => local,
        });
    }

    fn merge(self, other: Summary) -> Summary {
        let argmin = match (self.argmin, other.argmin) {
            (Some(a), Some(b)) => Some(if argmin_order(&a, &b) == Ordering::Greater {
                b
            } else {
                a
            }),
            (a, b) => a.or(b),
        };
        Summary {
            n_tested: self.n_tested + other.n_tested,
            failures: self.failures + other.failures,
            exceptions: self.exceptions + other.exceptions,
            equalities: self.equalities + other.equalities,
            argmin,
            failure_examples: merge_examples(self.failure_examples, other.failure_examples),
            exception_examples: merge_examples(self.exception_examples, other.exception_examples),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub bound_id: &'static str,
    pub status: BoundStatus,
    pub class: &'static str,
    pub statement: &'static str,
    pub n_tested: u64,
    pub failures: u64,
    pub exceptions: u64,
    pub equalities: u64,
    pub min_slack: Option<f64>,
    pub argmin: Option<Example>,
    pub failure_examples: Vec<Example>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Anomaly {
    pub bound_id: &'static str,
    pub status: BoundStatus,
    /// `exception`, `refuted` or `counterexample`.
    pub kind: &'static str,
    pub count: u64,
    pub examples: Vec<Example>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Meta {
    pub max_n: usize,
    pub class: ClassFilter,
    pub bounds: Vec<&'static str>,
    pub graphs: u64,
    pub pass_tolerance: f64,
    pub equality_tolerance: f64,
    pub lemma_cycle_size: usize,
    pub notes: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub meta: Meta,
    pub bounds: Vec<BoundRow>,
    pub anomalies: Vec<Anomaly>,
}

impl VerificationReport {
    /// Failures of proved statements outside their exceptions.
    pub fn proved_failures(&self) -> u64 {
        self.bounds
            .iter()
            .filter(|r| r.status == BoundStatus::Proved)
            .map(|r| r.failures)
            .sum()
    }

    pub fn row(&self, id: &str) -> Option<&BoundRow> {
        self.bounds.iter().find(|r| r.bound_id == id)
    }

    pub fn anomaly(&self, id: &str) -> Option<&Anomaly> {
        self.anomalies.iter().find(|a| a.bound_id == id)
    }

    pub fn to_json(&self) -> Result<String, ReportError> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// One row per statement with the fixed column set.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), ReportError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "bound_id",
            "status",
            "class",
            "n_tested",
            "failures",
            "exceptions",
            "min_slack",
            "argmin_code",
            "argmin_edges",
        ])?;
        for row in &self.bounds {
            let (code, edges) = row
                .argmin
                .as_ref()
                .map(|a| (a.code.clone(), a.edges.clone()))
                .unwrap_or_default();
            w.write_record([
                row.bound_id.to_string(),
                row.status.label().to_string(),
                row.class.to_string(),
                row.n_tested.to_string(),
                row.failures.to_string(),
                row.exceptions.to_string(),
                row.min_slack.map(|s| s.to_string()).unwrap_or_default(),
                code,
                edges,
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String, ReportError> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}

const NOTES: &[&str] = &[
    "the single-vertex graph is excluded from sweeps",
    "bounds on cacti with k > 0 and e > 0 are read with b > 0 (bridge count)",
    "C-R2 uses m = bridge count; CAC-R uses m = articulation points on the central block",
    "NTC-R excepts even cycles, which give R - r = 0",
    "LEAF2 uses (sqrt(d+1) - sqrt d)/sqrt2; LEAF2-PRINTED is the stronger sqrt(d+1) - sqrt(d/2) form, which fails",
    "H_r is always built from the central block",
];

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub class: ClassFilter,
    pub statements: Vec<Statement>,
}

/// Graphs a sweep visits: every generated cactus with at least one edge.
pub fn sweep_graphs(max_n: usize, class: ClassFilter) -> Result<Vec<CactusEntry>, ReportError> {
    let mut entries = enumerate::generate_cacti(&EnumerationRequest::new(max_n, class))?;
    entries.retain(|e| e.graph.n() >= 2);
    Ok(entries)
}

fn evaluate_entry(entry: &CactusEntry, statements: &[Statement]) -> Vec<Vec<BoundResult>> {
    let inv = Invariants::compute(&entry.graph).expect("generated cacti are connected");
    statements
        .iter()
        .map(|s| s.evaluate(&entry.graph, &inv))
        .collect()
}

/// Evaluates the selected statements over a prepared list of graphs.
pub fn verify_entries(entries: &[CactusEntry], opts: &VerifyOptions) -> VerificationReport {
    let statements = &opts.statements;
    let empty = || vec![Summary::default(); statements.len()];
    let summaries = entries
        .par_iter()
        .fold(empty, |mut acc, entry| {
            for (summary, results) in acc.iter_mut().zip(evaluate_entry(entry, statements)) {
                summary.observe(entry, &results);
            }
            acc
        })
        .reduce(empty, |a, b| {
            a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
        });

    let mut rows = Vec::new();
    let mut anomalies = Vec::new();
    for (s, summary) in statements.iter().zip(summaries) {
        if summary.exceptions > 0 {
            anomalies.push(Anomaly {
                bound_id: s.id(),
                status: s.status(),
                kind: "exception",
                count: summary.exceptions,
                examples: summary.exception_examples.clone(),
            });
        }
        if summary.failures > 0 && s.status() != BoundStatus::Proved {
            anomalies.push(Anomaly {
                bound_id: s.id(),
                status: s.status(),
                kind: if s.status() == BoundStatus::RefutedAsStated {
                    "refuted"
                } else {
                    "counterexample"
                },
                count: summary.failures,
                examples: summary.failure_examples.clone(),
            });
        }
        rows.push(BoundRow {
            bound_id: s.id(),
            status: s.status(),
            class: s.class(),
            statement: s.statement(),
            n_tested: summary.n_tested,
            failures: summary.failures,
            exceptions: summary.exceptions,
            equalities: summary.equalities,
            min_slack: summary.argmin.as_ref().map(|a| a.slack),
            argmin: summary.argmin,
            failure_examples: summary.failure_examples,
        });
    }
    VerificationReport {
        meta: Meta {
            max_n: opts.max_n,
            class: opts.class,
            bounds: statements.iter().map(|s| s.id()).collect(),
            graphs: entries.len() as u64,
            pass_tolerance: bounds::PASS_TOLERANCE,
            equality_tolerance: bounds::EQUALITY_TOLERANCE,
            lemma_cycle_size: bounds::LEMMA_CYCLE_SIZE,
            notes: NOTES.to_vec(),
            wall_seconds: None,
        },
        bounds: rows,
        anomalies,
    }
}

pub fn verify(opts: &VerifyOptions) -> Result<VerificationReport, ReportError> {
    let entries = sweep_graphs(opts.max_n, opts.class)?;
    Ok(verify_entries(&entries, opts))
}

/// Graph-level invariants attached to each counterexample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    pub n: usize,
    pub edges: usize,
    pub k: usize,
    pub b: usize,
    pub t3: usize,
    pub m: usize,
    pub radius: usize,
    pub diameter: usize,
    pub randic: f64,
    pub degrees: Vec<usize>,
    pub bc_shape: &'static str,
}

impl Diagnostics {
    fn of(inv: &Invariants) -> Self {
        Diagnostics {
            n: inv.n,
            edges: inv.edges,
            k: inv.k,
            b: inv.b,
            t3: inv.t3,
            m: inv.m,
            radius: inv.radius,
            diameter: inv.diameter,
            randic: round12(inv.randic),
            degrees: inv.degrees.clone(),
            bc_shape: inv.bc_shape.label(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    #[serde(flatten)]
    pub example: Example,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub bound_id: &'static str,
    pub status: BoundStatus,
    pub statement: &'static str,
    pub max_n: usize,
    pub class: ClassFilter,
    pub respect_exceptions: bool,
    pub graphs_tested: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SearchReport {
    pub fn to_json(&self) -> Result<String, ReportError> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

/// Every graph (and vertex, for lemma clauses) with slack below
/// `-PASS_TOLERANCE`. Excepted violations are kept unless
/// `respect_exceptions` is set.
pub fn search(
    id: &str,
    max_n: usize,
    class: ClassFilter,
    respect_exceptions: bool,
) -> Result<SearchReport, ReportError> {
    let statement =
        bounds::find_statement(id).ok_or_else(|| ReportError::UnknownBound(id.into()))?;
    let entries = sweep_graphs(max_n, class)?;
    let (graphs_tested, counterexamples) = entries
        .par_iter()
        .map(|entry| {
            let inv = Invariants::compute(&entry.graph).expect("generated cacti are connected");
            let results = statement.evaluate(&entry.graph, &inv);
            let tested = u64::from(results.iter().any(|r| r.applicable));
            let found: Vec<Counterexample> = results
                .iter()
                .filter(|r| r.is_violation() && !(respect_exceptions && r.excepted))
                .map(|r| Counterexample {
                    example: Example::new(entry, r),
                    diagnostics: Diagnostics::of(&inv),
                })
                .collect();
            (tested, found)
        })
        .reduce(
            || (0, Vec::new()),
            |(ta, mut a), (tb, b)| {
                a.extend(b);
                (ta + tb, a)
            },
        );
    let mut counterexamples = counterexamples;
    counterexamples.sort_by(|a, b| a.example.order(&b.example));
    Ok(SearchReport {
        bound_id: statement.id(),
        status: statement.status(),
        statement: statement.statement(),
        max_n,
        class,
        respect_exceptions,
        graphs_tested,
        counterexamples,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandicPair {
    pub balaban: f64,
    pub caporossi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockView {
    pub id: usize,
    pub kind: BlockKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Block> for BlockView {
    fn from(b: &Block) -> Self {
        BlockView {
            id: b.id,
            kind: b.kind,
            vertices: b.vertices.clone(),
            edges: b.edges.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubgraphView {
    pub vertices: Vec<usize>,
    pub blocks: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Realizing {
    pub diameter_pair: (usize, usize),
    pub diameter_path: Vec<usize>,
    pub center_on_diameter_path: bool,
    pub h_d_keeps_radius: bool,
    pub h_d: SubgraphView,
    pub h_r: SubgraphView,
}

/// Everything `compute` reports about one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComputeDocument {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub randic: RandicPair,
    pub radius: usize,
    pub diameter: usize,
    pub eccentricities: Vec<usize>,
    pub centers: Vec<usize>,
    pub canonical_code: Option<String>,
    pub blocks: Vec<BlockView>,
    pub articulation_points: Vec<usize>,
    pub bc_shape: structure::BcShape,
    pub profile: structure::CactusProfile,
    /// Present for cacti only.
    pub realizing: Option<Realizing>,
    pub bounds: Vec<BoundResult>,
}

impl ComputeDocument {
    pub fn to_json(&self) -> Result<String, ReportError> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

fn view(sub: &structure::RealizingSubgraph) -> Result<SubgraphView, ReportError> {
    let mp = metric::metric_profile(&sub.graph)?;
    Ok(SubgraphView {
        vertices: sub.vertex_map.clone(),
        blocks: sub.blocks.clone(),
        radius: mp.radius,
        diameter: mp.diameter,
    })
}

pub fn compute_document(g: &Graph) -> Result<ComputeDocument, ReportError> {
    let mp = metric::metric_profile(g)?;
    let dec = structure::block_decomposition(g)?;
    let profile = structure::profile_from_parts(g, &mp, &dec);
    let balaban = randic::randic_balaban(g).value;
    let caporossi = randic::randic_caporossi(g).value;
    let inv = Invariants::from_parts(g, &mp, &profile, balaban);
    let realizing = if profile.is_cactus {
        let rs = structure::realizing_subgraphs(g)?;
        Some(Realizing {
            diameter_pair: rs.diameter_pair,
            diameter_path: rs.diameter_path.clone(),
            center_on_diameter_path: rs.center_on_diameter_path,
            h_d_keeps_radius: rs.h_d_keeps_radius,
            h_d: view(&rs.h_d)?,
            h_r: view(&rs.h_r)?,
        })
    } else {
        None
    };
    let canonical_code = if g.n() <= canon::DEFAULT_LIMIT {
        Some(canon::canonical_code(g)?.to_hex())
    } else {
        None
    };
    Ok(ComputeDocument {
        n: g.n(),
        m: g.m(),
        degrees: g.degrees(),
        randic: RandicPair {
            balaban: round12(balaban),
            caporossi: round12(caporossi),
        },
        radius: mp.radius,
        diameter: mp.diameter,
        eccentricities: mp.eccentricities.clone(),
        centers: mp.centers.clone(),
        canonical_code,
        blocks: dec.blocks.iter().map(BlockView::from).collect(),
        articulation_points: dec.articulation_points.clone(),
        bc_shape: profile.bc_shape,
        profile: profile.clone(),
        realizing,
        bounds: bounds::bound_catalog()
            .iter()
            .map(|s| rounded(&bounds::evaluate_bound(s, &inv)))
            .collect(),
    })
}
