//! Benchmark workloads for `chaindd`: word-list encoding, n-queens and
//! ISCAS-85 circuits, plus the `ddbench` driver.

pub mod circuit;
pub mod cli;
mod collect;
pub mod dictionary;
pub mod encoding;
pub mod error;
pub mod netlist;
pub mod queens;
pub mod report;
pub mod selftest;

pub use circuit::{build_circuit, CircuitResult};
pub use dictionary::{build_trie, decode_words, encode_wordlist, parse_wordlist, Trie};
pub use encoding::{EncodingMode, SymbolEncoding};
pub use error::{BenchError, Result};
pub use netlist::{parse_iscas, Gate, GateOp, Netlist};
pub use queens::{build_queens, QueensConfig, QueensResult, RowOrder};
pub use report::{comparison_table, write_reports, BenchReport, ReportFormat};
