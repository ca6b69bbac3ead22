//! Command-line front door for the sigma-trees library.
//!
//! Output goes to standard output (or `--out PATH`), diagnostics to standard
//! error. Reports are JSON by default and byte-stable across runs unless
//! `--timestamps` is given; every rational is rendered as `p/q`. Exit codes:
//! 0 success, 1 domain error, 2 usage error, 3 verification failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sigma_trees::certificate::{certificate, exact_sigma_max, lp_optimum, penalty, SigmaMax};
use sigma_trees::construct::{tt0_opt, tt1_opt};
use sigma_trees::enumerate::enumerate_free_trees;
use sigma_trees::error::Error;
use sigma_trees::graph6::{parse_graph6, write_graph6};
use sigma_trees::lemmas::{
    verify_block_bound, verify_dominance, verify_minima_locations, verify_pair_floor,
    verify_slack_pattern, LemmaReport, LemmaStatus,
};
use sigma_trees::profile::DegreeProfile;
use sigma_trees::rational::display;
use sigma_trees::search::{residue_scan, search_sigma_max, BoundStatus, DegreeFilter};
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sigma-trees",
    version,
    about = "Exact sigma-irregularity bounds, constructions, and searches for trees"
)]
struct Cli {
    /// Output format; csv is available for scan only
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Stamp JSON reports with the generation time (breaks byte-stability)
    #[arg(long, global = true)]
    timestamps: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct TreeInput {
    /// Read graph6 lines from this file instead of standard input
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Sigma irregularity of trees supplied as graph6 lines
    Sigma {
        #[command(flatten)]
        input: TreeInput,
    },
    /// Degree profile of trees supplied as graph6 lines
    Profile {
        #[command(flatten)]
        input: TreeInput,
        /// Report the penalty against the certificate for this delta
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Dual certificate constants for one delta
    Certificate {
        #[arg(long)]
        delta: usize,
    },
    /// LP bound for (n, delta) and its attainability status
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Extremal tree constructions, emitted as graph6 lines
    #[command(subcommand)]
    Construct(Construct),
    /// Exhaustive sigma maximum over all trees of one order
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        /// Keep only trees whose maximum degree equals delta exactly
        #[arg(long)]
        exact_delta: bool,
        /// Proceed beyond the built-in enumeration size guard
        #[arg(long)]
        override_size_guard: bool,
    },
    /// Search every order in the windows delta*k+1 ..= delta*k+delta
    Scan {
        #[arg(long)]
        delta: usize,
        /// Window range: A, A..B, or A..=B
        #[arg(long)]
        k: String,
        /// Proceed beyond the built-in enumeration size guard
        #[arg(long)]
        override_size_guard: bool,
    },
    /// Exact sweep of the slack-table lemmas; exits 3 on any failure
    VerifyLemmas {
        /// Upper end of the delta range (sweeps 4..=delta-max)
        #[arg(long)]
        delta_max: usize,
    },
    /// List all free trees of one order as graph6 lines
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only trees with maximum degree at most this
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Spine family attaining the bound when n = 1 (mod delta)
    Tt1 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Subdivided family attaining the residue-0 maximum
    Tt0 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
        /// Odd spine position of the subdivided edge, in 3..=2k-1
        #[arg(long)]
        position: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.format == Format::Csv && !matches!(cli.command, Command::Scan { .. }) {
        eprintln!("error: --format csv is only available for scan");
        return ExitCode::from(2);
    }

    let mut out = String::new();
    let result = run(&cli, &mut out);
    let code = match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    if let Err(err) = write_output(cli.out.as_deref(), &out) {
        eprintln!("error: {err}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn write_output(path: Option<&std::path::Path>, payload: &str) -> std::io::Result<()> {
    match path {
        Some(path) => std::fs::write(path, payload),
        None => std::io::stdout().write_all(payload.as_bytes()),
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<u8, Error> {
    match &cli.command {
        Command::Sigma { input } => {
            for line in read_graph6_lines(input)? {
                let tree = parse_graph6(&line)?;
                let record = json!({
                    "graph6": write_graph6(&tree),
                    "n": tree.n(),
                    "sigma": tree.sigma(),
                });
                out.push_str(&record.to_string());
                out.push('\n');
            }
            Ok(0)
        }
        Command::Profile { input, delta } => {
            let cert = delta.map(certificate).transpose()?;
            for line in read_graph6_lines(input)? {
                let tree = parse_graph6(&line)?;
                let profile = DegreeProfile::of_tree(&tree);
                let mut record = json!({
                    "graph6": write_graph6(&tree),
                    "sigma": tree.sigma(),
                    "profile": profile,
                });
                if let Some(cert) = &cert {
                    let p = penalty(&profile, cert)?;
                    record["penalty"] = Value::String(display(&p));
                }
                out.push_str(&record.to_string());
                out.push('\n');
            }
            Ok(0)
        }
        Command::Certificate { delta } => {
            let cert = certificate(*delta)?;
            let report = json!({
                "delta": cert.delta(),
                "lambda": display(cert.lambda()),
                "mu": display(cert.mu()),
                "a": display(cert.a_const()),
                "b": display(cert.b_const()),
                "f_delta_delta": display(&cert.f_delta_delta()),
                "zero_points": [[1, cert.delta()], [2, cert.delta()]],
                "eager_table": cert.has_eager_table(),
            });
            emit_report(cli, report, out);
            Ok(0)
        }
        Command::Bound { n, delta } => {
            let opt = lp_optimum(*n, *delta)?;
            let (status, sigma_max) = match exact_sigma_max(*n, *delta)? {
                SigmaMax::Covered { value, residue: 1 } => {
                    ("tight (n≡1 mod Δ)".to_string(), Some(value))
                }
                SigmaMax::Covered { value, .. } => {
                    ("covered (n≡0 mod Δ)".to_string(), Some(value))
                }
                SigmaMax::NotCovered { .. } => {
                    ("not covered (strict upper bound)".to_string(), None)
                }
            };
            let mut report = json!({
                "n": opt.n,
                "delta": opt.delta,
                "m_1_delta": display(&opt.m_1_delta),
                "m_2_delta": display(&opt.m_2_delta),
                "integral": opt.is_integral(),
                "sigma_bound": display(&opt.sigma_bound),
                "status": status,
            });
            if let Some(value) = sigma_max {
                report["sigma_max"] = Value::String(display(&value));
            }
            emit_report(cli, report, out);
            Ok(0)
        }
        Command::Construct(family) => {
            let tree = match family {
                Construct::Tt1 { k, delta } => tt1_opt(*k, *delta)?,
                Construct::Tt0 { k, delta, position } => tt0_opt(*k, *delta, *position)?,
            };
            out.push_str(&write_graph6(&tree));
            out.push('\n');
            Ok(0)
        }
        Command::Search {
            n,
            delta,
            exact_delta,
            override_size_guard,
        } => {
            let filter = if *exact_delta {
                DegreeFilter::Exact
            } else {
                DegreeFilter::AtMost
            };
            let report = search_sigma_max(*n, *delta, filter, *override_size_guard)?;
            emit_report(cli, serde_json::to_value(&report).expect("report serializes"), out);
            Ok(0)
        }
        Command::Scan {
            delta,
            k,
            override_size_guard,
        } => {
            let (k_min, k_max) = parse_k_range(k)?;
            let reports = residue_scan(*delta, k_min, k_max, *override_size_guard)?;
            if cli.format == Format::Csv {
                out.push_str(&scan_csv(&reports));
            } else {
                emit_report(
                    cli,
                    serde_json::to_value(&reports).expect("reports serialize"),
                    out,
                );
            }
            Ok(0)
        }
        Command::VerifyLemmas { delta_max } => {
            let reports = run_lemma_suite(*delta_max)?;
            let failed = reports.iter().any(|r| r.status == LemmaStatus::Fail);
            emit_report(
                cli,
                serde_json::to_value(&reports).expect("reports serialize"),
                out,
            );
            Ok(if failed { 3 } else { 0 })
        }
        Command::Enumerate { n, max_degree } => {
            if let Some(cap) = max_degree {
                if *cap < 1 {
                    return Err(Error::domain("max-degree must be at least 1"));
                }
            }
            for tree in enumerate_free_trees(*n, *max_degree) {
                out.push_str(&write_graph6(&tree));
                out.push('\n');
            }
            Ok(0)
        }
    }
}

/// The full lemma sweep: the four delta-range checks over `4..=delta_max`,
/// plus the low-degree block bound over every free tree of order at most 12
/// (the orders where exhaustive enumeration is instant).
fn run_lemma_suite(delta_max: usize) -> Result<Vec<LemmaReport>, Error> {
    let lo = 4usize;
    let mut reports = Vec::with_capacity(6);
    reports.push(verify_slack_pattern(lo, delta_max)?);
    reports.push(verify_minima_locations(lo, delta_max)?);
    let (row, col) = verify_dominance(lo, delta_max)?;
    reports.push(row);
    reports.push(col);

    let profiles = (2..=12usize)
        .flat_map(|n| enumerate_free_trees(n, None))
        .map(|t| DegreeProfile::of_tree(&t));
    let mut block = verify_block_bound(profiles);
    block
        .notes
        .push("corpus: every free tree of order 2..=12".to_string());
    reports.push(block);

    reports.push(verify_pair_floor(lo, delta_max)?);
    Ok(reports)
}

fn parse_k_range(text: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::domain(format!("cannot parse k range '{text}'; use A, A..B, or A..=B"));
    if let Some((a, b)) = text.split_once("..=") {
        let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
        return Ok((a, b));
    }
    if let Some((a, b)) = text.split_once("..") {
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok((a, b - 1));
    }
    let k: usize = text.parse().map_err(|_| bad())?;
    Ok((k, k))
}

fn scan_csv(reports: &[sigma_trees::search::SearchReport]) -> String {
    let mut csv = String::from(
        "delta,n,k,residue,tree_count,sigma_max,bound,status,gap,extremal_count,extremal_graph6\n",
    );
    for r in reports {
        let k = (r.n - 1) / r.delta;
        let (status, gap) = match &r.bound_status {
            BoundStatus::Tight => ("tight", String::new()),
            BoundStatus::Gap { gap } => ("gap", display(gap)),
        };
        let graph6: Vec<&str> = r.extremal_trees.iter().map(|t| t.graph6.as_str()).collect();
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.delta,
            r.n,
            k,
            r.n % r.delta,
            r.tree_count,
            r.sigma_max,
            display(&r.bound),
            status,
            gap,
            r.extremal_trees.len(),
            graph6.join(";"),
        ));
    }
    csv
}

fn emit_report(cli: &Cli, report: Value, out: &mut String) {
    let wrapped = if cli.timestamps {
        let stamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .expect("clock after 1970")
            .as_secs();
        json!({ "generated_at": stamp, "report": report })
    } else {
        report
    };
    out.push_str(&serde_json::to_string_pretty(&wrapped).expect("report serializes"));
    out.push('\n');
}

/// Reads graph6 lines from the file or standard input, skipping blank lines
/// and tolerating an optional `>>graph6<<` header prefix.
fn read_graph6_lines(input: &TreeInput) -> Result<Vec<String>, Error> {
    let text = match &input.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            for line in std::io::stdin().lock().lines() {
                let line =
                    line.map_err(|e| Error::domain(format!("cannot read standard input: {e}")))?;
                buf.push_str(&line);
                buf.push('\n');
            }
            buf
        }
    };
    Ok(text
        .lines()
        .map(|line| line.strip_prefix(">>graph6<<").unwrap_or(line))
        .filter(|line| !line.trim().is_empty())
        .map(str::to_string)
        .collect())
}
