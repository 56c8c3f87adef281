//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage errors (bad flags, malformed
//! partitions, violated preconditions), 2 when an internal invariant fails.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::num::NonZeroUsize;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;

use chardiv_core::abacus::{core_tower, q_core, q_quotient};
use chardiv_core::census::{self as core_census, CensusKind};
use chardiv_core::character::{degree, CharacterEvaluator, CycleType};
use chardiv_core::valuation::{degree_valuation_hooks, degree_valuation_macdonald};
use chardiv_core::{Error, Partition};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{render_bound, render_census, Format, Record};
use crate::parallel;

#[derive(Debug, Parser)]
#[command(name = "chardiv", version, about = "Exact symmetric-group characters and divisibility censuses")]
pub struct Cli {
    /// Output format: text, csv or json.
    #[arg(long, global = true, default_value = "text")]
    pub format: Format,
    /// Worker threads for censuses (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// q-core of a partition.
    Core(PartitionQ),
    /// q-quotient of a partition, one component per runner.
    Quotient(PartitionQ),
    /// q-core tower, one row per line.
    Tower(PartitionQ),
    /// Degree f_λ by the hook length formula.
    Degree {
        partition: Partition,
    },
    /// q-adic valuation of the degree.
    Valuation {
        partition: Partition,
        #[arg(long)]
        q: u64,
        /// Use the hook-length route instead of the core tower.
        #[arg(long)]
        oracle: bool,
    },
    /// Character value at the class (μ, 1^{n−k}).
    Char(PartitionMu),
    /// f_λ, (n)_k and A with χ·(n)_k = f_λ·A.
    Lassalle(PartitionMu),
    /// Exhaustive censuses over all partitions of n.
    #[command(subcommand)]
    Census(CensusCommand),
}

#[derive(Debug, Args)]
pub struct PartitionQ {
    pub partition: Partition,
    #[arg(long)]
    pub q: usize,
}

#[derive(Debug, Args)]
pub struct PartitionMu {
    pub partition: Partition,
    #[arg(long, default_value = "1")]
    pub mu: Partition,
}

#[derive(Debug, Subcommand)]
pub enum CensusCommand {
    /// Partitions whose degree is divisible by d.
    Degrees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u64,
    },
    /// Partitions whose character at (μ, 1^{n−k}) is divisible by d.
    Chars {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        mu: Partition,
        #[arg(long)]
        d: u64,
    },
    /// Partitions with v_q(f_λ) ≤ m + (q−1)·log_q n.
    TheoremA {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        m: u64,
    },
    /// q-cores of n.
    Cores {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
    },
    /// Histogram of v_q(f_λ) over all λ ⊢ n.
    Histogram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Tower-counting bound on #{λ ⊢ n : v_q(f_λ) ≤ b}.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        b: u64,
    },
    /// One census row per size in --ns.
    Trend {
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        #[arg(long)]
        kind: TrendKind,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TrendKind {
    Degrees,
    Chars,
    TheoremA,
    Cores,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match panic::catch_unwind(AssertUnwindSafe(|| execute(&cli))) {
        Ok(Ok(())) => 0,
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            1
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            2
        }
        Err(_) => {
            eprintln!("internal error: invariant check failed");
            2
        }
    }
}

fn workers(cli: &Cli) -> usize {
    cli.workers.map(|w| w as usize).unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(NonZeroUsize::get)
            .unwrap_or(1)
    })
}

fn execute(cli: &Cli) -> Result<(), Failure> {
    let text = render(cli)?;
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn literal(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn render(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    let out = match &cli.command {
        Command::Core(PartitionQ { partition, q }) => {
            Record::single("core", q_core(partition, *q)?).render(format)
        }
        Command::Quotient(PartitionQ { partition, q }) => {
            let components = q_quotient(partition, *q)?;
            match format {
                Format::Text => components.iter().map(|c| format!("{c}\n")).collect(),
                Format::Csv => {
                    let mut s = String::from("runner,partition\n");
                    for (r, c) in components.iter().enumerate() {
                        s += &format!("{r},{}\n", literal(c).replace(',', "."));
                    }
                    s
                }
                Format::Json => {
                    let rows: Vec<Vec<usize>> =
                        components.iter().map(|c| c.parts().to_vec()).collect();
                    serde_json::to_string(&rows).expect("serializes") + "\n"
                }
            }
        }
        Command::Tower(PartitionQ { partition, q }) => {
            let tower = core_tower(partition, *q)?;
            match format {
                Format::Text => tower.render(),
                Format::Csv => {
                    let mut s = String::from("row,node,partition\n");
                    for (i, row) in tower.rows().iter().enumerate() {
                        for (j, node) in row.iter().enumerate() {
                            s += &format!("{i},{j},{}\n", literal(node).replace(',', "."));
                        }
                    }
                    s
                }
                Format::Json => {
                    let rows: Vec<Vec<Vec<usize>>> = tower
                        .rows()
                        .iter()
                        .map(|row| row.iter().map(|p| p.parts().to_vec()).collect())
                        .collect();
                    let value = serde_json::json!({
                        "q": tower.q(),
                        "rows": rows,
                        "weights": tower.weight_vector().w,
                    });
                    serde_json::to_string_pretty(&value).expect("serializes") + "\n"
                }
            }
        }
        Command::Degree { partition } => Record::single("degree", degree(partition)).render(format),
        Command::Valuation {
            partition,
            q,
            oracle,
        } => {
            let v = if *oracle {
                degree_valuation_hooks(partition, *q)?
            } else {
                degree_valuation_macdonald(partition, *q)?
            };
            Record::single("valuation", v).render(format)
        }
        Command::Char(PartitionMu { partition, mu }) => {
            let ct = CycleType::new(mu.clone(), partition.size())?;
            let chi = CharacterEvaluator::new().character(partition, &ct)?;
            Record::single("chi", chi).render(format)
        }
        Command::Lassalle(PartitionMu { partition, mu }) => {
            let ct = CycleType::new(mu.clone(), partition.size())?;
            let d = CharacterEvaluator::new().lassalle(partition, &ct)?;
            Record::single("f", d.degree)
                .with("falling", d.falling)
                .with("A", d.a)
                .with("chi", d.chi)
                .render(format)
        }
        Command::Census(c) => render_census_command(c, format, workers(cli))?,
    };
    Ok(out)
}

fn render_census_command(
    command: &CensusCommand,
    format: Format,
    workers: usize,
) -> Result<String, Failure> {
    let single = |n: usize, kind: CensusKind| -> Result<String, Failure> {
        let report = parallel::census(n, &kind, workers)?;
        Ok(render_census(&[report], format))
    };
    match command {
        CensusCommand::Degrees { n, d } => single(*n, CensusKind::Degrees { d: *d }),
        CensusCommand::Chars { n, mu, d } => single(
            *n,
            CensusKind::Characters {
                mu: mu.clone(),
                d: *d,
            },
        ),
        CensusCommand::TheoremA { n, q, m } => single(*n, CensusKind::TheoremA { q: *q, m: *m }),
        CensusCommand::Cores { n, q } => single(*n, CensusKind::Cores { q: *q }),
        CensusCommand::Histogram { n, q } => {
            let histogram = core_census::valuation_histogram(*n, *q)?;
            Ok(match format {
                Format::Text => histogram
                    .iter()
                    .map(|(v, c)| format!("v={v}: {c}\n"))
                    .collect(),
                Format::Csv => {
                    let mut s = String::from("n,q,valuation,count\n");
                    for (v, c) in &histogram {
                        s += &format!("{n},{q},{v},{c}\n");
                    }
                    s
                }
                Format::Json => {
                    let rows: Vec<_> = histogram
                        .iter()
                        .map(|(v, c)| serde_json::json!({"valuation": v, "count": c}))
                        .collect();
                    serde_json::to_string_pretty(&rows).expect("serializes") + "\n"
                }
            })
        }
        CensusCommand::Bound { n, q, b } => {
            let report = core_census::counting_bound(*n, *q, *b)?;
            Ok(render_bound(&report, format))
        }
        CensusCommand::Trend {
            ns,
            kind,
            d,
            mu,
            q,
            m,
        } => {
            let missing = |flag: &str| Failure::Usage(format!("--kind {kind:?} needs --{flag}"));
            let kind = match kind {
                TrendKind::Degrees => CensusKind::Degrees {
                    d: d.ok_or_else(|| missing("d"))?,
                },
                TrendKind::Chars => CensusKind::Characters {
                    mu: mu.clone().unwrap_or_else(|| Partition::new(vec![1]).unwrap()),
                    d: d.ok_or_else(|| missing("d"))?,
                },
                TrendKind::TheoremA => CensusKind::TheoremA {
                    q: q.ok_or_else(|| missing("q"))?,
                    m: m.unwrap_or(0),
                },
                TrendKind::Cores => CensusKind::Cores {
                    q: q.ok_or_else(|| missing("q"))? as usize,
                },
            };
            let reports = parallel::trend_report(ns, &kind, workers)?;
            Ok(render_census(&reports, format))
        }
    }
}
