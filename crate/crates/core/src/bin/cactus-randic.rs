use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cactus_randic::enumerate::{ClassFilter, MAX_ENUMERATION_N};
use cactus_randic::report::{self, VerifyOptions};
use cactus_randic::{edgelist, family};

#[derive(Parser)]
#[command(version, about = "Randić index, radius and diameter of cactus graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, blocks and every bound for one graph.
    Compute {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
    },
    /// Check bounds over every cactus up to a vertex budget.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassFilter,
        /// `all` or a comma-separated list of ids.
        #[arg(long, default_value = "all")]
        bounds: String,
        /// Writes `<out>.json` and `<out>.csv`; JSON goes to stdout otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Record wall time in the report metadata.
        #[arg(long)]
        timing: bool,
    },
    /// List every graph violating one bound.
    Search {
        id: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassFilter,
        /// Drop violations covered by the bound's exception.
        #[arg(long)]
        respect_exceptions: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Write a named graph as an edge list.
    Family {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn configure_jobs(jobs: Option<usize>) -> Result<()> {
    if let Some(jobs) = jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    Ok(())
}

fn check_budget(max_n: usize) -> Result<()> {
    if max_n > MAX_ENUMERATION_N {
        bail!("--max-n {max_n} exceeds the enumeration budget of {MAX_ENUMERATION_N}");
    }
    Ok(())
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute { path, format } => {
            let text =
                fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let g = match format {
                InputFormat::Edgelist => edgelist::parse_edge_list(&text)
                    .with_context(|| format!("parsing {}", path.display()))?,
            };
            if !g.is_connected() {
                bail!("{} is not connected", path.display());
            }
            print!("{}", report::compute_document(&g)?.to_json()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_n,
            class,
            bounds,
            out,
            jobs,
            timing,
        } => {
            check_budget(max_n)?;
            configure_jobs(jobs)?;
            let statements = report::parse_selection(&bounds)?;
            let start = Instant::now();
            let mut rep = report::verify(&VerifyOptions {
                max_n,
                class,
                statements,
            })?;
            if timing {
                rep.meta.wall_seconds = Some(report::round12(start.elapsed().as_secs_f64()));
            }
            match out {
                Some(base) => {
                    write_out(Some(&base.with_extension("json")), &rep.to_json()?)?;
                    write_out(Some(&base.with_extension("csv")), &rep.to_csv()?)?;
                }
                None => write_out(None, &rep.to_json()?)?,
            }
            let failures = rep.proved_failures();
            if failures > 0 {
                eprintln!("{failures} proved-bound failure(s) outside declared exceptions");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search {
            id,
            max_n,
            class,
            respect_exceptions,
            jobs,
        } => {
            check_budget(max_n)?;
            configure_jobs(jobs)?;
            let rep = report::search(&id, max_n, class, respect_exceptions)?;
            print!("{}", rep.to_json()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Family { spec, out } => {
            let g = family(&spec)?;
            write_out(out.as_deref(), &edgelist::write_edge_list(&g))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
