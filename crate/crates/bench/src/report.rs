use std::fmt::Write as _;
use std::io::Write;

use chaindd::DiagramKind;
use serde::{Deserialize, Serialize};

/// One benchmark run under one diagram kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub benchmark: String,
    pub kind: String,
    pub encoding: String,
    pub ordering: String,
    pub final_nodes: u64,
    pub peak_nodes: u64,
    pub cache_lookups: u64,
    pub wall_seconds: f64,
    /// Exact solution count in decimal, when the benchmark has one.
    pub solutions: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(format!("unknown format `{s}` (expected json or csv)")),
        }
    }
}

/// Writes JSON lines, or CSV with a single header row.
pub fn write_reports<W: Write>(out: W, format: ReportFormat, reports: &[BenchReport]) -> std::io::Result<()> {
    match format {
        ReportFormat::Json => {
            let mut out = out;
            for r in reports {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                w.serialize(r)?;
            }
            w.flush()
        }
    }
}

fn ratio(a: u64, b: u64) -> String {
    if b == 0 {
        "-".into()
    } else {
        format!("{:.2}", a as f64 / b as f64)
    }
}

/// Side-by-side node counts for one configuration run under several kinds.
pub fn comparison_table(reports: &[BenchReport]) -> String {
    let find = |k: DiagramKind| reports.iter().find(|r| r.kind == k.name());
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<6} {:>12} {:>12} {:>12} {:>12} {:>9} {:>10} {:>9}",
        "graph", "BDD", "CBDD", "ZDD", "CZDD", "BDD:CBDD", "CBDD:CZDD", "ZDD:CZDD"
    );
    for (label, get) in [
        ("final", (|r: &BenchReport| r.final_nodes) as fn(&BenchReport) -> u64),
        ("peak", |r: &BenchReport| r.peak_nodes),
    ] {
        let v = |k| find(k).map(get);
        let cell = |x: Option<u64>| x.map_or("-".to_owned(), |x| x.to_string());
        let rat = |a: Option<u64>, b: Option<u64>| match (a, b) {
            (Some(a), Some(b)) => ratio(a, b),
            _ => "-".into(),
        };
        let (b, cb, z, cz) = (
            v(DiagramKind::Bdd),
            v(DiagramKind::Cbdd),
            v(DiagramKind::Zdd),
            v(DiagramKind::Czdd),
        );
        let _ = writeln!(
            s,
            "{:<6} {:>12} {:>12} {:>12} {:>12} {:>9} {:>10} {:>9}",
            label,
            cell(b),
            cell(cb),
            cell(z),
            cell(cz),
            rat(b, cb),
            rat(cb, cz),
            rat(z, cz)
        );
    }
    s
}
