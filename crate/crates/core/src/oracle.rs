//! Exhaustive truth-table oracle.
//!
//! Tables are computed directly from expressions with bit-parallel word
//! operations and never touch the diagram code.

use crate::analysis::Minterm;
use crate::error::{DdError, Result};
use crate::expr::Expr;
use crate::node::Level;

pub const MAX_ORACLE_VARIABLES: usize = 20;

/// Explicit function table over `n` variables. Row `i` is the assignment
/// whose binary expansion (level 1 most significant) equals `i`, so row
/// order is lexicographic minterm order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthOracle {
    n: usize,
    words: Vec<u64>,
}

impl TruthOracle {
    fn check(n: usize) -> Result<()> {
        if n == 0 || n > MAX_ORACLE_VARIABLES {
            Err(DdError::OracleTooLarge {
                n,
                max: MAX_ORACLE_VARIABLES,
            })
        } else {
            Ok(())
        }
    }

    fn rows(n: usize) -> usize {
        1usize << n
    }

    fn word_count(n: usize) -> usize {
        Self::rows(n).div_ceil(64)
    }

    /// Tabulate an arbitrary predicate row by row.
    pub fn from_fn(n: usize, f: impl Fn(&[bool]) -> bool) -> Result<Self> {
        Self::check(n)?;
        let mut words = vec![0u64; Self::word_count(n)];
        let mut bits = vec![false; n];
        for row in 0..Self::rows(n) {
            for (j, b) in bits.iter_mut().enumerate() {
                *b = (row >> (n - 1 - j)) & 1 == 1;
            }
            if f(&bits) {
                words[row / 64] |= 1 << (row % 64);
            }
        }
        Ok(TruthOracle { n, words })
    }

    pub fn from_expr(n: usize, e: &Expr) -> Result<Self> {
        Self::check(n)?;
        let words = Self::table(n, e);
        Ok(TruthOracle { n, words })
    }

    fn var_table(n: usize, level: Level) -> Vec<u64> {
        let shift = n - level as usize;
        let mut w = vec![0u64; Self::word_count(n)];
        for row in 0..Self::rows(n) {
            if (row >> shift) & 1 == 1 {
                w[row / 64] |= 1 << (row % 64);
            }
        }
        w
    }

    fn mask(n: usize) -> Vec<u64> {
        let rows = Self::rows(n);
        let mut w = vec![u64::MAX; Self::word_count(n)];
        if rows < 64 {
            w[0] = (1u64 << rows) - 1;
        }
        w
    }

    fn table(n: usize, e: &Expr) -> Vec<u64> {
        let zip = |a: Vec<u64>, b: Vec<u64>, f: fn(u64, u64) -> u64| -> Vec<u64> {
            a.iter().zip(&b).map(|(&x, &y)| f(x, y)).collect()
        };
        let full = Self::mask(n);
        match e {
            Expr::Const(false) => vec![0; full.len()],
            Expr::Const(true) => full,
            Expr::Var(l) => Self::var_table(n, *l),
            Expr::Not(a) => zip(Self::table(n, a), full, |x, m| !x & m),
            Expr::And(a, b) => zip(Self::table(n, a), Self::table(n, b), |x, y| x & y),
            Expr::Or(a, b) => zip(Self::table(n, a), Self::table(n, b), |x, y| x | y),
            Expr::Xor(a, b) => zip(Self::table(n, a), Self::table(n, b), |x, y| x ^ y),
            Expr::Ite(a, b, c) => {
                let (i, t, f) = (Self::table(n, a), Self::table(n, b), Self::table(n, c));
                i.iter()
                    .zip(&t)
                    .zip(&f)
                    .zip(&full)
                    .map(|(((&i, &t), &f), &m)| ((i & t) | (!i & f)) & m)
                    .collect()
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn value(&self, row: usize) -> bool {
        (self.words[row / 64] >> (row % 64)) & 1 == 1
    }

    pub fn value_at(&self, bits: &[bool]) -> bool {
        let row = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        self.value(row)
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Levels whose two cofactors differ somewhere.
    pub fn support(&self) -> Vec<Level> {
        (1..=self.n as Level)
            .filter(|&l| {
                let bit = 1usize << (self.n - l as usize);
                (0..Self::rows(self.n))
                    .filter(|row| row & bit == 0)
                    .any(|row| self.value(row) != self.value(row | bit))
            })
            .collect()
    }

    pub fn minterms(&self, limit: usize) -> Vec<Minterm> {
        (0..Self::rows(self.n))
            .filter(|&row| self.value(row))
            .take(limit)
            .map(|row| Minterm((0..self.n).map(|j| (row >> (self.n - 1 - j)) & 1 == 1).collect()))
            .collect()
    }
}
