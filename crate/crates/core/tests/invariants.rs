use std::collections::HashSet;

use chaindd::{convert, DiagramKind, Expr, Manager, Node, NodeRef};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Full scan of the live nodes: ordering, reduction and chain-reduction
/// rules, and unique-table soundness.
fn assert_canonical_store(m: &Manager) {
    let kind = m.kind();
    let mut seen = HashSet::new();
    for (r, n) in m.iter_nodes() {
        assert!(seen.insert(n), "{kind}: duplicate node {n:?}");
        assert!(1 <= n.top && n.top <= n.bot && n.bot <= m.num_vars(), "{kind}: levels {n:?}");
        assert!(m.top(n.lo) > n.bot && m.top(n.hi) > n.bot, "{kind}: order at {r:?}");
        if !kind.chained() {
            assert_eq!(n.top, n.bot, "{kind}: span in unchained node");
        }
        if kind.zero_suppressed() {
            assert_ne!(n.hi, NodeRef::LEAF0, "{kind}: hi edge to 0 at {r:?}");
        } else {
            assert_ne!(n.lo, n.hi, "{kind}: redundant test at {r:?}");
        }
        let child = |c: NodeRef| -> Option<Node> { m.node(c) };
        match kind {
            DiagramKind::Cbdd => {
                if let Some(v) = child(n.lo) {
                    assert!(
                        !(v.top == n.bot + 1 && v.hi == n.hi),
                        "cbdd: mergeable or-chain at {r:?}"
                    );
                }
            }
            DiagramKind::Czdd if n.lo == n.hi => {
                if let Some(v) = child(n.lo) {
                    assert!(v.top != n.bot + 1, "czdd: mergeable don't-care chain at {r:?}");
                }
            }
            _ => {}
        }
    }
}

#[test]
fn random_workloads_leave_canonical_stores() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for kind in DiagramKind::ALL {
        let mut m = Manager::new(kind, 9).unwrap();
        let mut keep = Vec::new();
        for _ in 0..150 {
            let e = Expr::random(&mut rng, 9, 10);
            keep.push(e.build(&mut m).unwrap());
        }
        assert_canonical_store(&m);
        m.gc(&keep[..50]);
        assert_canonical_store(&m);
        for _ in 0..50 {
            let e = Expr::random(&mut rng, 9, 10);
            e.build(&mut m).unwrap();
        }
        assert_canonical_store(&m);
    }
}

#[test]
fn conversions_leave_canonical_stores() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for src_kind in DiagramKind::ALL {
        let mut src = Manager::new(src_kind, 8).unwrap();
        let roots: Vec<_> = (0..60)
            .map(|_| Expr::random(&mut rng, 8, 9).build(&mut src).unwrap())
            .collect();
        for dst_kind in DiagramKind::ALL {
            let mut dst = Manager::new(dst_kind, 8).unwrap();
            for &r in &roots {
                convert(&src, r, &mut dst).unwrap();
            }
            assert_canonical_store(&dst);
        }
    }
}

#[test]
fn gc_keeps_handles_and_semantics() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for kind in DiagramKind::ALL {
        let mut m = Manager::new(kind, 7).unwrap();
        let exprs: Vec<Expr> = (0..40).map(|_| Expr::random(&mut rng, 7, 8)).collect();
        let roots: Vec<_> = exprs.iter().map(|e| e.build(&mut m).unwrap()).collect();
        let counts: Vec<_> = roots.iter().map(|&r| m.count_solutions(r).unwrap()).collect();
        let peak = m.stats().peak_live_nodes;
        m.gc(&roots[..20]);
        assert_eq!(m.stats().peak_live_nodes, peak);
        for (i, &r) in roots[..20].iter().enumerate() {
            assert_eq!(m.count_solutions(r).unwrap(), counts[i]);
            // rebuilding finds the same canonical node
            assert_eq!(exprs[i].build(&mut m).unwrap(), r);
        }
    }
}

#[test]
fn gc_on_fresh_manager_reclaims_nothing() {
    for kind in DiagramKind::ALL {
        let mut m = Manager::new(kind, 4).unwrap();
        assert_eq!(m.gc(&[]), 0);
        assert_eq!(m.live_nodes(), 2);
    }
}
