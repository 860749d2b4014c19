//! All solutions of the n-queens problem, built row by row from the bottom.

use std::fmt;
use std::str::FromStr;

use chaindd::{Level, Manager, NodeRef};

use crate::collect::Collector;
use crate::encoding::{binary_width, EncodingMode};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowOrder {
    TopDown,
    CenterFirst,
}

impl RowOrder {
    pub fn name(self) -> &'static str {
        match self {
            RowOrder::TopDown => "top-down",
            RowOrder::CenterFirst => "center-first",
        }
    }
}

impl fmt::Display for RowOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RowOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "top-down" => Ok(RowOrder::TopDown),
            "center-first" => Ok(RowOrder::CenterFirst),
            _ => Err(format!("unknown row order `{s}` (expected top-down or center-first)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueensConfig {
    pub n: usize,
    pub encoding: EncodingMode,
    pub order: RowOrder,
}

impl QueensConfig {
    pub fn new(n: usize, encoding: EncodingMode, order: RowOrder) -> Self {
        QueensConfig { n, encoding, order }
    }

    pub fn bits_per_row(&self) -> usize {
        match self.encoding {
            EncodingMode::OneHot => self.n,
            EncodingMode::Binary => binary_width(self.n),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n * self.bits_per_row()
    }

    /// Rows (1-based) in variable order.
    pub fn row_sequence(&self) -> Vec<usize> {
        let n = self.n;
        match self.order {
            RowOrder::TopDown => (1..=n).collect(),
            RowOrder::CenterFirst => {
                let c = (n + 2) / 2;
                let mut seq = vec![c];
                for d in 1..=n {
                    if c + d <= n {
                        seq.push(c + d);
                    }
                    if d < c {
                        seq.push(c - d);
                    }
                }
                seq
            }
        }
    }

    fn row_blocks(&self) -> Vec<usize> {
        let mut block = vec![0; self.n + 1];
        for (i, r) in self.row_sequence().into_iter().enumerate() {
            block[r] = i;
        }
        block
    }
}

#[derive(Debug, Clone)]
pub struct QueensResult {
    pub root: NodeRef,
    pub final_nodes: usize,
    /// Largest combined size of the maintained functions after any row.
    pub peak_nodes: usize,
    pub row_sizes: Vec<usize>,
}

/// Build the function whose solutions are exactly the valid placements.
/// `m` must have `cfg.num_vars()` variables.
pub fn build_queens(m: &mut Manager, cfg: &QueensConfig) -> Result<QueensResult> {
    let n = cfg.n;
    let bits = cfg.bits_per_row();
    let block = cfg.row_blocks();
    let level = |r: usize, j: usize| (block[r] * bits + j + 1) as Level;
    let square = |m: &mut Manager, r: usize, c: usize| -> Result<NodeRef> {
        Ok(match cfg.encoding {
            EncodingMode::OneHot => m.var(level(r, c))?,
            EncodingMode::Binary => {
                let lits: Vec<_> = (0..bits)
                    .map(|j| (level(r, j), (c >> (bits - 1 - j)) & 1 == 1))
                    .collect();
                m.cube(&lits)?
            }
        })
    };

    let mut solutions = m.universe()?;
    // occupied in the rows processed so far; diagonals indexed by r-c+n-1 and r+c
    let mut col = vec![NodeRef::LEAF0; n];
    let mut diag = vec![NodeRef::LEAF0; 2 * n];
    let mut anti = vec![NodeRef::LEAF0; 2 * n];
    let mut row_sizes = Vec::with_capacity(n);
    let mut gc = Collector::new();

    for r in (1..=n).rev() {
        let squares = (0..n)
            .map(|c| square(m, r, c))
            .collect::<Result<Vec<_>>>()?;
        let row = match cfg.encoding {
            EncodingMode::OneHot => {
                let (mut none, mut one) = (m.universe()?, NodeRef::LEAF0);
                for &x in squares.iter().rev() {
                    one = m.ite(x, none, one)?;
                    let not_x = m.not(x)?;
                    none = m.and(none, not_x)?;
                }
                one
            }
            EncodingMode::Binary => {
                let mut any = NodeRef::LEAF0;
                for &x in &squares {
                    any = m.or(any, x)?;
                }
                any
            }
        };
        solutions = m.and(solutions, row)?;
        for (c, &x) in squares.iter().enumerate() {
            let (d, a) = (r + n - 1 - c, r + c);
            let busy = m.or(col[c], diag[d])?;
            let busy = m.or(busy, anti[a])?;
            let clash = m.and(x, busy)?;
            let ok = m.not(clash)?;
            solutions = m.and(solutions, ok)?;
        }
        for (c, &x) in squares.iter().enumerate() {
            let (d, a) = (r + n - 1 - c, r + c);
            col[c] = m.or(col[c], x)?;
            diag[d] = m.or(diag[d], x)?;
            anti[a] = m.or(anti[a], x)?;
        }
        let maintained: Vec<NodeRef> = std::iter::once(solutions)
            .chain(col.iter().copied())
            .chain(diag.iter().copied())
            .chain(anti.iter().copied())
            .collect();
        row_sizes.push(m.shared_node_count(&maintained)?);
        gc.maybe_collect(m, &maintained);
    }
    Ok(QueensResult {
        root: solutions,
        final_nodes: m.node_count(solutions)?,
        peak_nodes: row_sizes.iter().copied().max().unwrap_or(1),
        row_sizes,
    })
}
