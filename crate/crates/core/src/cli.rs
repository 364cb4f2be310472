//! Command-line front end. Every command renders a deterministic report that
//! embeds the tool version and the fully resolved configuration.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extremal::record::{csv_string, Fraction, Mode, ScanRecord};
use crate::extremal::{
    delta_r_min, scan, stability_experiment, verify_all, ExactOptions, RunOptions, SearchOptions,
    StabilityParams, VerifyOptions,
};
use crate::greedy::{all_p_sequences, check_edwext, check_turext, p_sequence, DEFAULT_BRANCH_CAP};
use crate::{delta_r_exact, read_graphs, to_graph6, Graph, TuranDecomposition, VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cliquedeg", version, about = "Degree sums over cliques and Turán-type bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ModeArgs {
    #[arg(long, default_value = "exhaustive", value_parser = parse_mode)]
    pub mode: Mode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4)]
    pub restarts: usize,
    #[arg(long, default_value_t = 50)]
    pub iter_budget: usize,
    /// Shards of the exhaustive enumeration, processed in parallel.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    #[arg(long)]
    pub max_graphs: Option<u64>,
}

impl ModeArgs {
    fn run_options(&self) -> RunOptions {
        RunOptions {
            mode: self.mode,
            exact: ExactOptions {
                workers: self.workers as usize,
                max_graphs: self.max_graphs,
            },
            search: SearchOptions {
                seed: self.seed,
                restarts: self.restarts,
                iter_budget: self.iter_budget,
            },
        }
    }
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_fraction(s: &str) -> std::result::Result<Fraction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Part sizes and edge count of the Turán graph T_r(n).
    Turan(TuranArgs),
    /// Greedy clique sequences of input graphs, with the degree-sum checks when --r is given.
    Greedy(GreedyArgs),
    /// Maximum degree sum over r-cliques of input graphs.
    Delta(DeltaArgs),
    /// Minimum of the r-clique degree sum over all graphs with n vertices and m edges.
    Extremal(ExtremalArgs),
    /// The same minimum over a range of edge counts.
    Scan(ScanArgs),
    /// Ratio tables for edge counts just below t_r(n).
    Stability(StabilityArgs),
    /// Exhaustive verification over all small labeled graphs.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TuranArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GreedyArgs {
    /// graph6 (one graph per line) or edge-list file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BRANCH_CAP)]
    pub branch_cap: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DeltaArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub r: usize,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub m_from: usize,
    #[arg(long)]
    pub m_to: usize,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct StabilityArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// Exact rational, e.g. 1/4.
    #[arg(long, value_parser = parse_fraction)]
    pub epsilon: Fraction,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n_max: usize,
    /// Comma-separated clique sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub r: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_BRANCH_CAP)]
    pub branch_cap: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    #[arg(long)]
    pub max_graphs: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A rendered report and the exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
    /// The report went to `--out` rather than standard output.
    pub written: bool,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Turan(_) => "turan",
            Command::Greedy(_) => "greedy",
            Command::Delta(_) => "delta",
            Command::Extremal(_) => "extremal",
            Command::Scan(_) => "scan",
            Command::Stability(_) => "stability",
            Command::Verify(_) => "verify",
        }
    }

    fn output(&self) -> &OutputArgs {
        match self {
            Command::Turan(a) => &a.output,
            Command::Greedy(a) => &a.output,
            Command::Delta(a) => &a.output,
            Command::Extremal(a) => &a.output,
            Command::Scan(a) => &a.output,
            Command::Stability(a) => &a.output,
            Command::Verify(a) => &a.output,
        }
    }

    fn config(&self) -> Value {
        let args = match self {
            Command::Turan(a) => serde_json::to_value(a),
            Command::Greedy(a) => serde_json::to_value(a),
            Command::Delta(a) => serde_json::to_value(a),
            Command::Extremal(a) => serde_json::to_value(a),
            Command::Scan(a) => serde_json::to_value(a),
            Command::Stability(a) => serde_json::to_value(a),
            Command::Verify(a) => serde_json::to_value(a),
        };
        json!({ "command": self.name(), "args": args.expect("arguments serialize") })
    }
}

/// Intermediate result of a command: JSON payload, optional CSV and text renderings.
struct Rendered {
    result: Value,
    csv: Option<String>,
    text: String,
    counterexample: bool,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cmd = &cli.command;
    let rendered = match cmd {
        Command::Turan(a) => turan(a)?,
        Command::Greedy(a) => greedy(a)?,
        Command::Delta(a) => delta(a)?,
        Command::Extremal(a) => extremal(a)?,
        Command::Scan(a) => scan_cmd(a)?,
        Command::Stability(a) => stability(a)?,
        Command::Verify(a) => verify(a)?,
    };
    let output = match cmd.output().format {
        Format::Json => {
            let report = json!({
                "tool": "cliquedeg",
                "version": VERSION,
                "config": cmd.config(),
                "result": rendered.result,
            });
            let mut s = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => rendered.csv.ok_or_else(|| {
            Error::Argument(format!("csv output is not available for `{}`", cmd.name()))
        })?,
        Format::Text => format!(
            "# cliquedeg {VERSION}\n# config: {}\n{}",
            serde_json::to_string(&cmd.config()).expect("config serializes"),
            rendered.text
        ),
    };
    let written = match &cmd.output().out {
        Some(path) => {
            std::fs::write(path, &output)?;
            true
        }
        None => false,
    };
    Ok(Outcome {
        code: if rendered.counterexample { EXIT_COUNTEREXAMPLE } else { EXIT_OK },
        output,
        written,
    })
}

fn load(path: &PathBuf) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read_graphs(&text)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn turan(a: &TuranArgs) -> Result<Rendered> {
    let dec = TuranDecomposition::new(a.r, a.n)?;
    let text = format!("t={}\nparts={:?}\n", dec.t, dec.parts);
    Ok(Rendered {
        result: to_value(&dec),
        csv: None,
        text,
        counterexample: false,
    })
}

fn greedy(a: &GreedyArgs) -> Result<Rendered> {
    let graphs = load(&a.input)?;
    let mut results = Vec::new();
    let mut text = String::new();
    let mut counterexample = false;
    for g in &graphs {
        let det = p_sequence(g)?;
        let all = all_p_sequences(g, a.branch_cap);
        let mut entry = json!({
            "graph6": to_graph6(g),
            "n": g.order(),
            "m": g.edge_count(),
            "p_sequence": to_value(&det),
        });
        match all {
            Ok(seqs) => entry["all_sequences"] = json!(seqs.len()),
            Err(Error::BranchCap { cap }) => entry["all_sequences"] = json!({ "cap_exceeded": cap }),
            Err(e) => return Err(e),
        }
        writeln!(text, "{} n={} m={} sequence={:?} degree_sums={:?}",
            to_graph6(g), g.order(), g.edge_count(), det.vertices, det.degree_sums).unwrap();
        if let Some(r) = a.r {
            match (check_turext(g, r, a.branch_cap), check_edwext(g, r, a.branch_cap)) {
                (Ok(t), Ok(e)) => {
                    counterexample |= !t.passed() || !e.passed();
                    writeln!(text, "  r={r} min_first_r_sum={:?} bound={} equality={} best={:?} best*n={} 2rm={} regular={} violations={}",
                        t.min_first_r_sum, t.bound, t.equality_attained, e.best, e.best_times_n, e.two_r_m, e.regular,
                        t.violations.len() + e.violations.len()).unwrap();
                    entry["turext"] = to_value(&t);
                    entry["edwext"] = to_value(&e);
                }
                (Err(Error::Precondition(msg)), _) | (_, Err(Error::Precondition(msg))) => {
                    writeln!(text, "  r={r} not checked: {msg}").unwrap();
                    entry["checks_skipped"] = json!(msg);
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        results.push(entry);
    }
    Ok(Rendered {
        result: json!({ "graphs": results, "violations": counterexample }),
        csv: None,
        text,
        counterexample,
    })
}

fn delta(a: &DeltaArgs) -> Result<Rendered> {
    let graphs = load(&a.input)?;
    let mut results = Vec::new();
    let mut text = String::new();
    for g in &graphs {
        let d = delta_r_exact(g, a.r)?;
        writeln!(text, "{} value={} witness={:?}", to_graph6(g), d.value,
            d.witness.map(|w| w.to_vec())).unwrap();
        results.push(json!({ "graph6": to_graph6(g), "delta": to_value(&d) }));
    }
    Ok(Rendered {
        result: json!({ "graphs": results }),
        csv: None,
        text,
        counterexample: false,
    })
}

fn record_text(rec: &ScanRecord) -> String {
    format!(
        "n={} m={} r={} mode={} delta_min={} 2rm/n={} ({}) witness={} graphs_examined={}\n",
        rec.n, rec.m, rec.r, rec.mode, rec.delta_min, rec.lower_2rm_over_n,
        rec.lower_2rm_over_n_decimal, rec.witness, rec.graphs_examined
    )
}

fn extremal(a: &ExtremalArgs) -> Result<Rendered> {
    let rec = delta_r_min(a.n, a.m, a.r, &a.mode.run_options())?;
    Ok(Rendered {
        result: to_value(&rec),
        csv: Some(csv_string([&rec])?),
        text: record_text(&rec),
        counterexample: false,
    })
}

fn scan_cmd(a: &ScanArgs) -> Result<Rendered> {
    let rows = scan::scan_m(a.n, a.r, a.m_from, a.m_to, &a.mode.run_options())?;
    let violated = rows.iter().any(|r| r.violates_band());
    let text: String = rows
        .iter()
        .map(|row| {
            let mut line = record_text(&row.record);
            line.pop();
            format!("{line} regime={:?} band={:?}\n", row.regime, row.band_holds)
        })
        .collect();
    Ok(Rendered {
        result: json!({
            "rows": to_value(&rows),
            "band_violations": rows.iter().filter(|r| r.violates_band()).count(),
            "nondecreasing_in_m": scan::is_nondecreasing(&rows),
        }),
        csv: Some(csv_string(rows.iter().map(|r| &r.record))?),
        text,
        counterexample: violated,
    })
}

fn stability(a: &StabilityArgs) -> Result<Rendered> {
    let params = StabilityParams::new(a.r, a.n, a.epsilon)?;
    let report = stability_experiment(&params, &a.mode.run_options())?;
    let mut csv = String::from("n,m,r,mode,delta_min,ratio_num,ratio_den,above_one_minus_epsilon,witness_g6\n");
    let mut text = format!(
        "epsilon={} delta={} t={} m_threshold={} normalized_range={}\n",
        params.epsilon, params.delta, params.turan_size, params.m_threshold, params.in_normalized_range
    );
    for row in &report.rows {
        writeln!(csv, "{},{},{},{},{},{},{},{},{}", a.n, row.m, a.r, report.mode, row.delta_min,
            row.ratio.num, row.ratio.den, row.above_one_minus_epsilon, row.witness).unwrap();
        writeln!(text, "m={} delta_min={} ratio={} ({}) above_1-eps={}", row.m, row.delta_min,
            row.ratio, row.ratio_decimal, row.above_one_minus_epsilon).unwrap();
    }
    Ok(Rendered {
        result: to_value(&report),
        csv: Some(csv),
        text,
        counterexample: false,
    })
}

fn verify(a: &VerifyArgs) -> Result<Rendered> {
    let opts = VerifyOptions {
        branch_cap: a.branch_cap,
        exact: ExactOptions {
            workers: a.workers as usize,
            max_graphs: a.max_graphs,
        },
    };
    let report = verify_all(a.n_max, &a.r, &opts)?;
    let mut text = String::new();
    for p in &report.pairs {
        writeln!(text, "n={} r={} t={} graphs={} prefixes={} equality_graphs={} cap_skips={} violations={}",
            p.n, p.r, p.turan_size, p.tally.graphs, p.tally.prefixes, p.tally.equality_graphs,
            p.tally.cap_skips, p.tally.violations).unwrap();
    }
    for s in &report.skipped {
        writeln!(text, "skipped n={} r={}: {}", s.n, s.r, s.reason).unwrap();
    }
    writeln!(text, "graphs_examined={} violations={}", report.graphs_examined, report.violations).unwrap();
    let mut csv = String::from("n,m,r,delta_min,witness_g6,lower_holds,upper_holds,near_regular_delta\n");
    for b in &report.bands {
        writeln!(csv, "{},{},{},{},{},{},{},{}", b.n, b.m, b.r, b.delta_min, b.witness,
            b.lower_holds, b.upper_holds, b.near_regular_delta).unwrap();
    }
    Ok(Rendered {
        counterexample: report.violations > 0,
        result: to_value(&report),
        csv: Some(csv),
        text,
    })
}
