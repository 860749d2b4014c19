//! The `ddbench` command line.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use chaindd::{DdError, DiagramKind, Family, Manager, WorstCase};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circuit::build_circuit;
use crate::dictionary::{encode_wordlist, parse_wordlist};
use crate::encoding::{EncodingMode, SymbolEncoding};
use crate::error::{BenchError, Result};
use crate::netlist::parse_iscas;
use crate::queens::{build_queens, QueensConfig, RowOrder};
use crate::report::{comparison_table, write_reports, BenchReport, ReportFormat};
use crate::selftest::run_selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_NODE_LIMIT: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "ddbench", version, about = "Decision diagram benchmarks: BDD, ZDD, CBDD and CZDD")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Diagram kind to run, or `all` for every kind plus a comparison table on stderr.
    #[arg(long, global = true, default_value = "czdd")]
    pub kind: KindArg,
    /// Report format.
    #[arg(long, global = true, default_value = "json")]
    pub format: FormatArg,
    /// Write reports here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Computed-cache slots; 0 disables the cache.
    #[arg(long, global = true)]
    pub cache_size: Option<usize>,
    /// Abort once this many nodes are live.
    #[arg(long, global = true)]
    pub max_nodes: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Bdd,
    Zdd,
    Cbdd,
    Czdd,
    All,
}

impl KindArg {
    fn kinds(self) -> Vec<DiagramKind> {
        match self {
            KindArg::Bdd => vec![DiagramKind::Bdd],
            KindArg::Zdd => vec![DiagramKind::Zdd],
            KindArg::Cbdd => vec![DiagramKind::Cbdd],
            KindArg::Czdd => vec![DiagramKind::Czdd],
            KindArg::All => DiagramKind::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EncodingArg {
    OneHot,
    Binary,
}

impl From<EncodingArg> for EncodingMode {
    fn from(e: EncodingArg) -> Self {
        match e {
            EncodingArg::OneHot => EncodingMode::OneHot,
            EncodingArg::Binary => EncodingMode::Binary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlphabetArg {
    Compact,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RowOrderArg {
    TopDown,
    CenterFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputOrderArg {
    Fanin,
    Declaration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    ZddVsCbdd,
    BddVsCzdd,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encode a word list (one word per line).
    Dict {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "one-hot")]
        encoding: EncodingArg,
        /// `compact` uses only the characters present; `ascii` uses all 128.
        #[arg(long, default_value = "compact")]
        alphabet: AlphabetArg,
        /// Symbols per word; defaults to the longest word.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// All solutions of the n-queens problem.
    Queens {
        /// Board size.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "one-hot")]
        encoding: EncodingArg,
        /// Row processing order.
        #[arg(long, default_value = "top-down")]
        order: RowOrderArg,
    },
    /// Output functions of an ISCAS-85 netlist.
    Circuit {
        #[arg(long)]
        input: PathBuf,
        /// Variable order: depth-first from the outputs, or input declaration order.
        #[arg(long, default_value = "fanin")]
        order: InputOrderArg,
    },
    /// Members of the worst-case size families.
    Worstcase {
        #[arg(long)]
        family: FamilyArg,
        /// Family parameter, at least 1.
        #[arg(long)]
        k: usize,
    },
    /// Check random expressions against the truth-table oracle.
    Selftest {
        /// Random expressions per kind.
        #[arg(long, default_value_t = 250)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| BenchError::io(path, e))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn manager(common: &Common, kind: DiagramKind, n: usize) -> Result<Manager> {
    let mut m = Manager::new(kind, n)?;
    if let Some(slots) = common.cache_size {
        m.set_cache_slots((slots > 0).then_some(slots));
    }
    m.set_node_limit(common.max_nodes);
    Ok(m)
}

struct Outcome {
    reports: Vec<BenchReport>,
    failed: bool,
}

fn run_command(cli: &Cli, log: &mut dyn Write) -> Result<Outcome> {
    let common = &cli.common;
    let mut reports = Vec::new();
    let mut failed = false;
    for kind in common.kind.kinds() {
        let start = Instant::now();
        let report = |benchmark: String,
                      encoding: &str,
                      ordering: &str,
                      m: &Manager,
                      final_nodes: usize,
                      peak_nodes: usize,
                      solutions: Option<String>| BenchReport {
            benchmark,
            kind: kind.name().to_owned(),
            encoding: encoding.to_owned(),
            ordering: ordering.to_owned(),
            final_nodes: final_nodes as u64,
            peak_nodes: peak_nodes as u64,
            cache_lookups: m.stats().cache_lookups,
            wall_seconds: start.elapsed().as_secs_f64(),
            solutions,
        };
        let r = match &cli.command {
            Command::Dict {
                input,
                encoding,
                alphabet,
                max_length,
            } => {
                let words = parse_wordlist(&read(input)?);
                let longest = words.iter().map(|w| w.chars().count()).max().unwrap_or(0);
                let len = max_length.unwrap_or(longest).max(1);
                let mode = EncodingMode::from(*encoding);
                let enc = match alphabet {
                    AlphabetArg::Compact => SymbolEncoding::compact(mode, words.iter().map(String::as_str), len),
                    AlphabetArg::Ascii => SymbolEncoding::ascii(mode, len),
                };
                let mut m = manager(common, kind, enc.num_vars())?;
                let f = encode_wordlist(&mut m, &words, &enc)?;
                let fin = m.node_count(f)?;
                let peak = m.stats().peak_live_nodes;
                let sols = m.count_solutions(f)?.to_string();
                report(
                    stem(input),
                    &format!("{mode}/{}", enc.alphabet_name()),
                    "position-major",
                    &m,
                    fin,
                    peak,
                    Some(sols),
                )
            }
            Command::Queens { n, encoding, order } => {
                let order = match order {
                    RowOrderArg::TopDown => RowOrder::TopDown,
                    RowOrderArg::CenterFirst => RowOrder::CenterFirst,
                };
                if *n == 0 {
                    return Err(BenchError::Usage("--n must be at least 1".into()));
                }
                let cfg = QueensConfig::new(*n, (*encoding).into(), order);
                let mut m = manager(common, kind, cfg.num_vars())?;
                let q = build_queens(&mut m, &cfg)?;
                let sols = m.count_solutions(q.root)?.to_string();
                report(
                    format!("queens{n}"),
                    cfg.encoding.name(),
                    order.name(),
                    &m,
                    q.final_nodes,
                    q.peak_nodes,
                    Some(sols),
                )
            }
            Command::Circuit { input, order } => {
                let net = parse_iscas(&stem(input), &read(input)?)?;
                let (vars, name) = match order {
                    InputOrderArg::Fanin => (net.fanin_order(), "fanin"),
                    InputOrderArg::Declaration => (net.declaration_order(), "declaration"),
                };
                let mut m = manager(common, kind, net.inputs.len())?;
                let c = build_circuit(&mut m, &net, &vars)?;
                let peak = m.stats().peak_live_nodes;
                report(net.name.clone(), "-", name, &m, c.total_nodes, peak, None)
            }
            Command::Worstcase { family, k } => {
                let family = match family {
                    FamilyArg::ZddVsCbdd => Family::ZddVsCbdd,
                    FamilyArg::BddVsCzdd => Family::BddVsCzdd,
                };
                let w = WorstCase::new(family, *k).map_err(|e| BenchError::Usage(e.to_string()))?;
                let mut m = manager(common, kind, w.num_vars)?;
                let f = w.build(&mut m)?;
                let fin = m.node_count(f)?;
                let sols = m.count_solutions(f)?.to_string();
                let name = match family {
                    Family::ZddVsCbdd => "zdd-vs-cbdd",
                    Family::BddVsCzdd => "bdd-vs-czdd",
                };
                report(format!("{name}-k{k}"), "-", "-", &m, fin, fin, Some(sols))
            }
            Command::Selftest { count, seed } => {
                let o = run_selftest(kind, *count, *seed)?;
                for msg in &o.mismatches {
                    let _ = writeln!(log, "mismatch: {msg}");
                }
                let _ = writeln!(
                    log,
                    "selftest {kind}: {} functions, {} mismatches",
                    o.checked,
                    o.mismatches.len()
                );
                failed |= !o.mismatches.is_empty();
                BenchReport {
                    benchmark: "selftest".into(),
                    kind: kind.name().to_owned(),
                    encoding: "-".into(),
                    ordering: "-".into(),
                    final_nodes: o.total_nodes,
                    peak_nodes: o.peak_live_nodes as u64,
                    cache_lookups: o.cache_lookups,
                    wall_seconds: start.elapsed().as_secs_f64(),
                    solutions: Some(o.total_solutions.to_string()),
                }
            }
        };
        reports.push(r);
    }
    Ok(Outcome { reports, failed })
}

fn exit_code(e: &BenchError) -> i32 {
    match e {
        BenchError::Io { .. } => EXIT_IO,
        BenchError::Usage(_) => EXIT_USAGE,
        BenchError::Dd(DdError::NodeLimit(_)) => EXIT_NODE_LIMIT,
        e if e.is_parse() => EXIT_PARSE,
        _ => EXIT_FAILURE,
    }
}

/// Parse `args` (program name first), run, and return the exit status.
/// Reports go to `out` unless `--output` is given; diagnostics and the
/// comparison table go to `log`.
pub fn run<I, T>(args: I, out: &mut dyn Write, log: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(log, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match run_command(&cli, log) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(log, "ddbench: error: {e}");
            return exit_code(&e);
        }
    };
    let format = match cli.common.format {
        FormatArg::Json => ReportFormat::Json,
        FormatArg::Csv => ReportFormat::Csv,
    };
    let written = match &cli.common.output {
        Some(path) => File::create(path)
            .and_then(|f| write_reports(BufWriter::new(f), format, &outcome.reports))
            .map_err(|e| BenchError::io(path, e)),
        None => write_reports(&mut *out, format, &outcome.reports).map_err(|e| BenchError::io("<stdout>", e)),
    };
    if let Err(e) = written {
        let _ = writeln!(log, "ddbench: error: {e}");
        return EXIT_IO;
    }
    if cli.common.kind == KindArg::All {
        let _ = write!(log, "{}", comparison_table(&outcome.reports));
    }
    if outcome.failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

/// Entry point used by the binary.
pub fn main_exit_code() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
