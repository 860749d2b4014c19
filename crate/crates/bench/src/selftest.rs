//! Random expressions checked against the exhaustive truth-table oracle.

use chaindd::{DiagramKind, Expr, Manager, TruthOracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

#[derive(Debug, Clone, Default)]
pub struct SelftestOutcome {
    pub checked: usize,
    pub total_nodes: u64,
    pub total_solutions: u64,
    pub cache_lookups: u64,
    pub peak_live_nodes: usize,
    pub mismatches: Vec<String>,
}

/// Build `count` random expressions (depth at most 12, n drawn from
/// 6, 8, 10 and 12) under `kind` and compare solution count, support and
/// minterm list with the oracle.
pub fn run_selftest(kind: DiagramKind, count: usize, seed: u64) -> Result<SelftestOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SelftestOutcome::default();
    for i in 0..count {
        let n = [6usize, 8, 10, 12][rng.gen_range(0..4)];
        let e = Expr::random(&mut rng, n as u32, 12);
        let oracle = TruthOracle::from_expr(n, &e)?;
        let mut m = Manager::new(kind, n)?;
        let f = e.build(&mut m)?;
        out.checked += 1;
        out.total_nodes += m.node_count(f)? as u64;
        out.total_solutions += oracle.count();
        let count = m.count_solutions(f)?;
        if count != oracle.count().into() {
            out.mismatches.push(format!("#{i} {kind} n={n}: count {count} vs {}", oracle.count()));
        }
        if m.support(f)? != oracle.support() {
            out.mismatches.push(format!("#{i} {kind} n={n}: support differs"));
        }
        if m.enumerate_minterms(f, usize::MAX)? != oracle.minterms(usize::MAX) {
            out.mismatches.push(format!("#{i} {kind} n={n}: minterms differ"));
        }
        out.cache_lookups += m.stats().cache_lookups;
        out.peak_live_nodes = out.peak_live_nodes.max(m.stats().peak_live_nodes);
    }
    Ok(out)
}
