//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cactus_randic::bounds::{self, BoundStatus, Invariants};
use cactus_randic::canon::canonical_code;
use cactus_randic::enumerate::{
    generate_cacti, naive_oracle, CactusEntry, ClassFilter, EnumerationRequest,
};
use cactus_randic::family::family;
use cactus_randic::graph::{edges_compact, Graph};
use cactus_randic::metric::metric_profile;
use cactus_randic::randic::{self, DeltaClause, Direction};
use cactus_randic::report::{self, VerifyOptions};
use cactus_randic::structure;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cacti(max_n: usize) -> Vec<CactusEntry> {
    generate_cacti(&EnumerationRequest::new(max_n, ClassFilter::All)).expect("within budget")
}

fn golden_values() -> Outcome {
    let mut cases: Vec<(String, f64, usize, usize)> = vec![("path:2".into(), 1.0, 1, 1)];
    for n in 3..=9 {
        cases.push((
            format!("path:{n}"),
            (n as f64 - 3.0) / 2.0 + SQRT_2,
            n / 2,
            n - 1,
        ));
        cases.push((format!("star:{}", n - 1), ((n - 1) as f64).sqrt(), 1, 2));
    }
    for n in 3..=10 {
        cases.push((format!("cycle:{n}"), n as f64 / 2.0, n / 2, n / 2));
    }
    cases.push((
        "lollipop:4".into(),
        2.0 / 3f64.sqrt() + 2.0 * (2.0f64 / 3.0).sqrt(),
        2,
        4,
    ));
    cases.push(("complete:5".into(), 2.5, 1, 1));
    for (spec, r_value, radius, diameter) in &cases {
        let g = family(spec).unwrap();
        let mp = metric_profile(&g).unwrap();
        let got = randic::randic_index(&g);
        ensure((got - r_value).abs() <= 1e-9, || {
            format!("{spec}: R = {got}, want {r_value}")
        })?;
        ensure((mp.radius, mp.diameter) == (*radius, *diameter), || {
            format!(
                "{spec}: (r, d) = ({}, {}), want ({radius}, {diameter})",
                mp.radius, mp.diameter
            )
        })?;
    }
    Ok(format!("{} graphs match R, r and d", cases.len()))
}

fn formulation_equivalence() -> Outcome {
    let entries = cacti(8);
    let mut worst = 0f64;
    for e in &entries {
        let a = randic::randic_balaban(&e.graph).value;
        let b = randic::randic_caporossi(&e.graph).value;
        worst = worst.max((a - b).abs());
    }
    ensure(worst <= 1e-9, || format!("max |difference| {worst:e}"))?;
    Ok(format!(
        "{} cacti, max |difference| {worst:.3e}",
        entries.len()
    ))
}

fn cross_oracle() -> Outcome {
    let entries = cacti(7);
    let mut sizes = Vec::new();
    for n in 1..=7 {
        let generated: BTreeSet<_> = entries
            .iter()
            .filter(|e| e.graph.n() == n)
            .map(|e| e.code.clone())
            .collect();
        let oracle = naive_oracle(n).unwrap();
        ensure(generated == oracle, || {
            format!(
                "n = {n}: generator {} vs oracle {} ({} only generated, {} only oracle)",
                generated.len(),
                oracle.len(),
                generated.difference(&oracle).count(),
                oracle.difference(&generated).count()
            )
        })?;
        sizes.push(oracle.len().to_string());
    }
    Ok(format!(
        "code sets equal for n = 1..7 (sizes {})",
        sizes.join(",")
    ))
}

fn is_even_cycle(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && g.m() == g.n() && g.degrees().iter().all(|&d| d == 2)
}

fn proved_sweep() -> Outcome {
    let rep = report::verify(&VerifyOptions {
        max_n: 9,
        class: ClassFilter::All,
        statements: bounds::bound_catalog()
            .iter()
            .map(bounds::Statement::Bound)
            .collect(),
    })
    .unwrap();
    let failing: Vec<String> = rep
        .bounds
        .iter()
        .filter(|r| r.status == BoundStatus::Proved && r.failures > 0)
        .map(|r| {
            let first = &r.failure_examples[0];
            format!(
                "{} ({} graphs; first {} with slack {})",
                r.bound_id, r.failures, first.edges, first.slack
            )
        })
        .collect();
    let ntc = rep.row("NTC-R").unwrap();
    let excepted = rep
        .anomaly("NTC-R")
        .map(|a| a.examples.clone())
        .unwrap_or_default();
    let even_cycles = cacti(9).iter().filter(|e| is_even_cycle(&e.graph)).count() as u64;
    let exceptions_ok = ntc.exceptions == even_cycles
        && excepted.len() as u64 == ntc.exceptions
        && excepted.iter().all(|x| is_even_cycle(&x.graph()));
    let proved = rep
        .bounds
        .iter()
        .filter(|r| r.status == BoundStatus::Proved)
        .count();
    ensure(exceptions_ok, || {
        format!(
            "NTC-R exceptions {} (expected the {even_cycles} even cycles)",
            ntc.exceptions
        )
    })?;
    ensure(failing.is_empty(), || {
        format!(
            "{} of {proved} proved bounds fail over {} cacti: {}",
            failing.len(),
            rep.meta.graphs,
            failing.join("; ")
        )
    })?;
    Ok(format!(
        "{proved} proved bounds pass over {} cacti; NTC-R excepts exactly the {even_cycles} even cycles",
        rep.meta.graphs
    ))
}

/// Every listed graph is in the bound's class and attains it.
fn tight_on(id: &str, specs: &[String]) -> Result<(), String> {
    let spec = bounds::find_bound(id).unwrap();
    for s in specs {
        let g = family(s).unwrap();
        let r = bounds::evaluate_bound(spec, &Invariants::compute(&g).unwrap());
        let slack = r
            .slack
            .ok_or_else(|| format!("{id} not applicable to {s}"))?;
        ensure(slack >= -1e-9, || {
            format!("{id} fails on {s}: slack {slack}")
        })?;
        ensure(slack.abs() <= 1e-6, || {
            format!("{id} not tight on {s}: slack {slack}")
        })?;
    }
    Ok(())
}

fn equality_attainment() -> Outcome {
    let specs = |f: &dyn Fn(usize) -> Option<String>, range: std::ops::RangeInclusive<usize>| {
        range.filter_map(f).collect::<Vec<_>>()
    };
    tight_on("V-TREE", &specs(&|k| Some(format!("star:{k}")), 1..=8))?;
    let bouquets: Vec<String> = (1..=4)
        .flat_map(|j| (3..=8).map(move |s| (j, s)))
        .filter(|&(j, s)| j * (s - 1) < 9)
        .map(|(j, s)| format!("bouquet:{j}x{s}"))
        .collect();
    tight_on("X-NTC", &bouquets)?;
    tight_on("X-STAR", &["lollipop:4".to_string()])?;
    tight_on(
        "C-R1",
        &specs(&|n| (n % 2 == 0).then(|| format!("cycle:{n}")), 4..=10),
    )?;
    tight_on("T-D1", &specs(&|n| Some(format!("path:{n}")), 3..=9))?;
    tight_on("T-D2", &specs(&|n| Some(format!("path:{n}")), 3..=9))?;
    let t_r = bounds::find_bound("T-R").unwrap();
    for n in (4..=9).filter(|n| n % 2 == 0) {
        let g = family(&format!("path:{n}")).unwrap();
        let r = bounds::evaluate_bound(t_r, &Invariants::compute(&g).unwrap());
        let lhs = r.lhs.unwrap();
        ensure((lhs - (SQRT_2 - 1.5)).abs() <= 1e-9, || {
            format!("T-R on P_{n}: R - r = {lhs}")
        })?;
    }
    // The class minimum must also reach zero in the exhaustive sweep.
    let rep = report::verify(&VerifyOptions {
        max_n: 9,
        class: ClassFilter::All,
        statements: report::parse_selection("V-TREE,X-NTC,X-STAR,T-R,C-R1,T-D1,T-D2").unwrap(),
    })
    .unwrap();
    for row in &rep.bounds {
        let m = row.min_slack.unwrap();
        ensure(m.abs() <= 1e-6, || {
            format!("{} class minimum slack {m}", row.bound_id)
        })?;
    }
    Ok("V-TREE stars, X-NTC bouquets, X-STAR G_6, T-R even paths, C-R1 even cycles, T-D1/T-D2 paths all tight".into())
}

fn delta_regression() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cac7);
    let mut steps = 0usize;
    let mut clause_checks = 0usize;
    let mut printed_violations = 0usize;
    let mut worst = 0f64;
    for trial in 0..500 {
        let mut g = family("path:2").unwrap();
        let growth = rng.gen_range(1..=8);
        for _ in 0..growth {
            let v = rng.gen_range(0..g.n());
            let before = randic::randic_index(&g);
            let (prediction, next) = if rng.gen_bool(0.5) {
                (
                    randic::delta_pendant(&g, v).unwrap(),
                    randic::apply_pendant(&g, v).unwrap(),
                )
            } else {
                let s = rng.gen_range(3..=6);
                (
                    randic::delta_cycle(&g, v, s).unwrap(),
                    randic::apply_cycle(&g, v, s).unwrap(),
                )
            };
            let actual = randic::randic_index(&next) - before;
            let err = (prediction.exact - actual).abs();
            worst = worst.max(err);
            ensure(err <= 1e-9, || {
                format!(
                    "trial {trial}: delta error {err:e} at vertex {v} of {}",
                    edges_compact(&g)
                )
            })?;
            for b in &prediction.bounds {
                if b.clause == DeltaClause::Leaf2Printed {
                    printed_violations += usize::from(b.slack(actual) < -1e-9);
                    continue;
                }
                clause_checks += 1;
                let ok = match b.direction {
                    Direction::Lower => b.value <= actual + 1e-9,
                    Direction::Upper => actual <= b.value + 1e-9,
                    Direction::StrictUpper => actual < b.value + 1e-9,
                };
                ensure(ok, || {
                    format!(
                        "trial {trial}: {} {:?} {} vs exact {actual} at vertex {v} of {}",
                        b.clause.id(),
                        b.direction,
                        b.value,
                        edges_compact(&g)
                    )
                })?;
            }
            g = next;
            steps += 1;
        }
    }
    ensure(printed_violations > 0, || {
        "printed pendant clause never violated".into()
    })?;
    Ok(format!(
        "500 cacti, {steps} steps, max error {worst:.2e}, {clause_checks} clause checks; printed pendant clause violated {printed_violations} times"
    ))
}

fn anomaly_surfacing() -> Outcome {
    let leaf = report::search("LEAF2-PRINTED", 6, ClassFilter::All, false).unwrap();
    let p5 = canonical_code(&family("path:5").unwrap()).unwrap().to_hex();
    let center = leaf
        .counterexamples
        .iter()
        .find(|c| {
            c.example.code == p5 && c.diagnostics.degrees[c.example.vertex.unwrap()] == 2 && {
                let g = c.example.graph();
                let v = c.example.vertex.unwrap();
                metric_profile(&g).unwrap().centers == vec![v]
            }
        })
        .ok_or("P_5 center missing from LEAF2-PRINTED counterexamples")?;
    ensure((center.example.lhs - 0.393847).abs() < 1e-6, || {
        format!("exact {}", center.example.lhs)
    })?;
    ensure(
        (center.example.rhs - (3f64.sqrt() - 1.0)).abs() < 1e-9,
        || format!("rhs {}", center.example.rhs),
    )?;

    let ntc = report::search("NTC-R", 6, ClassFilter::All, false).unwrap();
    let expected: Vec<String> = ["cycle:4", "cycle:6"]
        .iter()
        .map(|s| canonical_code(&family(s).unwrap()).unwrap().to_hex())
        .collect();
    let found: Vec<String> = ntc
        .counterexamples
        .iter()
        .map(|c| c.example.code.clone())
        .collect();
    ensure(found == expected, || {
        format!("NTC-R counterexamples {found:?}")
    })?;
    for c in &ntc.counterexamples {
        ensure((c.example.slack + 0.5).abs() <= 1e-9, || {
            format!("NTC-R slack {}", c.example.slack)
        })?;
    }

    let rep = report::verify(&VerifyOptions {
        max_n: 6,
        class: ClassFilter::All,
        statements: report::parse_selection("all").unwrap(),
    })
    .unwrap();
    let ntc_anomaly = rep.anomaly("NTC-R").ok_or("no NTC-R anomaly entry")?;
    let anomaly_codes: Vec<_> = ntc_anomaly
        .examples
        .iter()
        .map(|e| e.code.clone())
        .collect();
    ensure(anomaly_codes == expected, || {
        format!("NTC-R anomaly examples {anomaly_codes:?}")
    })?;
    let printed = rep
        .anomaly("LEAF2-PRINTED")
        .ok_or("no LEAF2-PRINTED anomaly entry")?;
    ensure(printed.examples.iter().any(|e| e.code == p5), || {
        "P_5 missing from anomalies".into()
    })?;
    ensure(rep.row("NTC-R").unwrap().failures == 0, || {
        "NTC-R counted as failure".into()
    })?;
    ensure(rep.proved_failures() == 0, || {
        format!("{} proved failures at n <= 6", rep.proved_failures())
    })?;
    Ok(format!(
        "P_5 center exact {} < {}; NTC-R on C_4, C_6 with slack -1/2; both in the anomaly section, proved suite clean",
        center.example.lhs, center.example.rhs
    ))
}

fn structural_lemmas() -> Outcome {
    let entries = cacti(8);
    let s_d = bounds::find_bound("S-D").unwrap();
    let s_r = bounds::find_bound("S-R").unwrap();
    let mut problems: Vec<String> = Vec::new();
    let mut tested = 0;
    for e in entries.iter().filter(|e| e.graph.n() >= 2) {
        tested += 1;
        let g = &e.graph;
        let edges = edges_compact(g);
        let mp = metric_profile(g).unwrap();
        let dec = structure::block_decomposition(g).unwrap();
        if !dec
            .blocks
            .iter()
            .any(|b| mp.centers.iter().all(|&c| b.contains(c)))
        {
            problems.push(format!("centers split across blocks in {edges}"));
        }
        let rs = structure::realizing_subgraphs(g).unwrap();
        let hd = metric_profile(&rs.h_d.graph).unwrap();
        let hr = metric_profile(&rs.h_r.graph).unwrap();
        if hd.diameter != mp.diameter {
            problems.push(format!(
                "d(H_d) = {} != {} in {edges}",
                hd.diameter, mp.diameter
            ));
        }
        if hr.radius != mp.radius {
            problems.push(format!(
                "r(H_r) = {} != {} in {edges}",
                hr.radius, mp.radius
            ));
        }
        let inv = Invariants::compute(g).unwrap();
        for spec in [s_d, s_r] {
            let r = bounds::evaluate_bound(spec, &inv);
            if r.pass != Some(true) {
                problems.push(format!(
                    "{} fails in {edges}: lhs {} rhs {}",
                    spec.id,
                    r.lhs.unwrap(),
                    r.rhs.unwrap()
                ));
            }
            if spec.id == "S-R" && inv.is_even_cycle() {
                let exact = inv.radius as f64 == (inv.n as f64 - inv.k as f64 + 1.0) / 2.0;
                if !exact {
                    problems.push(format!("even-cycle radius not exact in {edges}"));
                }
            }
        }
    }
    ensure(problems.is_empty(), || {
        format!(
            "{} problem(s) over {tested} cacti: {}",
            problems.len(),
            problems.join("; ")
        )
    })?;
    Ok(format!(
        "{tested} cacti: one central block, d(H_d) = d, r(H_r) = r, S-D and S-R hold"
    ))
}

fn conjecture_search() -> Outcome {
    let mut lines = Vec::new();
    for id in ["CONJ-RD1", "CONJ-RD2"] {
        let found = report::search(id, 9, ClassFilter::All, false).unwrap();
        ensure(found.counterexamples.is_empty(), || {
            format!("{id}: {} counterexample(s)", found.counterexamples.len())
        })?;
        let rep = report::verify(&VerifyOptions {
            max_n: 9,
            class: ClassFilter::All,
            statements: report::parse_selection(id).unwrap(),
        })
        .unwrap();
        let row = rep.row(id).unwrap();
        let argmin = row
            .argmin
            .as_ref()
            .ok_or_else(|| format!("{id}: no argmin recorded"))?;
        lines.push(format!(
            "{id} none over {} graphs, min slack {} at {}",
            found.graphs_tested, argmin.slack, argmin.edges
        ));
    }
    Ok(lines.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden values", golden_values),
        ("formulation equivalence", formulation_equivalence),
        ("cross-oracle enumeration", cross_oracle),
        ("proved-bound sweep", proved_sweep),
        ("equality attainment", equality_attainment),
        ("delta-formula regression", delta_regression),
        ("anomaly surfacing", anomaly_surfacing),
        ("structural lemmas", structural_lemmas),
        ("conjecture search", conjecture_search),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
