//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or validation failure, 2 internal
//! consistency failure (a cross-check that the theory guarantees failed).

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arquiver::check::{run_check, sweep};
use arquiver::dot::{graded_dot, seed_dot, window_dot};
use arquiver::dynkin::{DynkinType, Family, Quiver};
use arquiver::error::Error;
use arquiver::numerics::{dims_csv, object_dimvec, EulerData};
use arquiver::rigid::{dq_closed_form, graded_quiver, start_json};
use arquiver::seed::{adapted_ordering, seed_json, AdaptedOrdering};
use arquiver::weyl::verify_longest_adapted;
use arquiver::zq::{Window, ZqVertex};

#[derive(Parser)]
#[command(
    name = "arquiver",
    version,
    about = "Auslander-Reiten window combinatorics and cluster-algebra initial seeds for Dynkin quivers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Args)]
struct QuiverArgs {
    /// Dynkin family: A, D or E
    #[arg(long = "type")]
    family: char,
    /// Rank of the diagram
    #[arg(long)]
    rank: usize,
    /// Orientation as comma-joined arrows `t>h`; every diagram edge must be
    /// oriented exactly once (omit for rank 1)
    #[arg(long, default_value = "")]
    arrows: String,
}

impl QuiverArgs {
    fn quiver(&self) -> Result<Quiver, Error> {
        let t = DynkinType::new(Family::parse(self.family)?, self.rank)?;
        Quiver::parse(t, &self.arrows)
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Write to this path instead of stdout
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// The translation-quiver window: objects, arrows and exponents
    Window {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dimension vectors of all window objects
    Dims {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Summand dimension vectors, endomorphism dimension and the rigidity
    /// certificate; DOT renders the graded quiver
    Start {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The initial seed: word, exchangeable set, exchange matrices, minor
    /// weight labels
    Seed {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Use this reduced word (comma-separated letters) instead of the
        /// canonical adapted word; it must be adapted to the orientation
        #[arg(long)]
        word: Option<String>,
    },
    /// Cross-validate every quantity for one orientation
    Check {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Seed for the sampled translation identities
        #[arg(long, default_value_t = 0xA05)]
        seed: u64,
    },
    /// Tabulated endomorphism dimensions of the reference orientations
    DqTable {
        /// Dynkin family: A, D or E
        #[arg(long)]
        family: char,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the check suite over every orientation up to a rank bound
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[arg(long, default_value_t = 0xA05)]
        seed: u64,
        /// Worker pool size
        #[arg(long, default_value_t = 4)]
        workers: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Error> {
    match &out.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::Parse(format!("cannot write stdout: {e}")))
        }
    }
}

fn json_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(cmd: &str, fmt: OutputFormat) -> Error {
    let name = match fmt {
        OutputFormat::Json => "json",
        OutputFormat::Dot => "dot",
        OutputFormat::Csv => "csv",
        OutputFormat::Text => "text",
    };
    Error::Parse(format!("--format {name} is not supported by `{cmd}`"))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Window { quiver, out } => {
            let q = quiver.quiver()?;
            let w = Window::build(&q)?;
            let text = match out.format {
                OutputFormat::Json => json_pretty(&w.to_json()),
                OutputFormat::Dot => window_dot(&w),
                OutputFormat::Text => {
                    let mut s = format!("{q}: {} objects\n", w.len());
                    for qv in 1..=q.rank() {
                        s.push_str(&format!("N({qv}) = {}\n", w.exponent(qv)));
                    }
                    s
                }
                f => return Err(unsupported("window", f)),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Dims { quiver, out } => {
            let q = quiver.quiver()?;
            let w = Window::build(&q)?;
            let ed = EulerData::build(&q);
            let text = match out.format {
                OutputFormat::Csv => dims_csv(&w, &ed)?,
                OutputFormat::Json => {
                    let mut rows = Vec::new();
                    for qv in 1..=q.rank() {
                        for i in 0..=w.exponent(qv) {
                            rows.push(serde_json::json!({
                                "object": [i, qv],
                                "dim": object_dimvec(&w, &ed, ZqVertex::new(i, qv))?,
                            }));
                        }
                    }
                    json_pretty(&rows)
                }
                f => return Err(unsupported("dims", f)),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Start { quiver, out } => {
            let q = quiver.quiver()?;
            let w = Window::build(&q)?;
            let ed = EulerData::build(&q);
            let text = match out.format {
                OutputFormat::Json => json_pretty(&start_json(&w, &ed)?),
                OutputFormat::Dot => graded_dot(&graded_quiver(&w)),
                f => return Err(unsupported("start", f)),
            };
            emit(&out, &text)?;
            let rigid = start_json(&w, &ed)?.rigid;
            Ok(if rigid { 0 } else { 2 })
        }
        Cmd::Seed { quiver, out, word } => {
            let q = quiver.quiver()?;
            let w = Window::build(&q)?;
            let ordering = match word {
                None => adapted_ordering(&w),
                Some(spec) => {
                    let letters: Result<Vec<usize>, _> =
                        spec.split(',').map(|s| s.trim().parse::<usize>()).collect();
                    let letters =
                        letters.map_err(|_| Error::Parse(format!("bad word '{spec}'")))?;
                    let rep = verify_longest_adapted(&letters, &q);
                    if !rep.is_longest || !rep.is_adapted {
                        return Err(Error::Parse(format!(
                            "word is not an adapted reduced word for the longest element \
                             (longest: {}, adapted: {})",
                            rep.is_longest, rep.is_adapted
                        )));
                    }
                    AdaptedOrdering::from_word(&w, &letters)?
                }
            };
            let text = match out.format {
                OutputFormat::Json => json_pretty(&seed_json(&w, &ordering)),
                OutputFormat::Dot => seed_dot(&w, &ordering),
                f => return Err(unsupported("seed", f)),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Check { quiver, out, seed } => {
            let q = quiver.quiver()?;
            let report = run_check(&q, seed)?;
            let text = match out.format {
                OutputFormat::Json => json_pretty(&report),
                OutputFormat::Text => {
                    let mut s = format!(
                        "{q}: r = {}, h = {}, rigid = {}\n",
                        report.r, report.h, report.rigid
                    );
                    for (name, ok) in &report.checks {
                        s.push_str(&format!("{name}: {}\n", if *ok { "pass" } else { "FAIL" }));
                    }
                    s
                }
                f => return Err(unsupported("check", f)),
            };
            emit(&out, &text)?;
            if report.all_pass() {
                Ok(0)
            } else {
                eprintln!("consistency failure for {q}:");
                for f in &report.failures {
                    eprintln!("  {f}");
                }
                Ok(2)
            }
        }
        Cmd::DqTable { family, out } => {
            let family = Family::parse(family)?;
            let ranks: Vec<usize> = match family {
                Family::A => (1..=8).collect(),
                Family::D => (4..=8).collect(),
                Family::E => (6..=8).collect(),
            };
            let table: BTreeMap<usize, i64> = ranks
                .into_iter()
                .map(|r| Ok((r, dq_closed_form(family, r)?)))
                .collect::<Result<_, Error>>()?;
            let text = match out.format {
                OutputFormat::Json => json_pretty(&table),
                OutputFormat::Text => {
                    let mut s = String::new();
                    for (r, v) in &table {
                        s.push_str(&format!("{family}{r}: {v}\n"));
                    }
                    s
                }
                f => return Err(unsupported("dq-table", f)),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Sweep {
            max_rank,
            seed,
            workers,
            out,
        } => {
            if !(1..=8).contains(&max_rank) {
                return Err(Error::Parse("--max-rank must be between 1 and 8".into()));
            }
            let summary = sweep(max_rank, seed, workers)?;
            let text = match out.format {
                OutputFormat::Json => json_pretty(&summary),
                OutputFormat::Text => format!(
                    "{} orientations up to rank {}: {}\n",
                    summary.quivers,
                    summary.max_rank,
                    if summary.all_pass {
                        "all pass"
                    } else {
                        "FAILURES"
                    }
                ),
                f => return Err(unsupported("sweep", f)),
            };
            emit(&out, &text)?;
            if summary.all_pass {
                Ok(0)
            } else {
                for f in &summary.failures {
                    eprintln!("{f}");
                }
                Ok(2)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are successes, anything else is a
            // usage failure
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Error::InternalInconsistency(msg)) => {
            eprintln!("internal consistency failure: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
