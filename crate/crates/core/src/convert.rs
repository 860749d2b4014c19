use rustc_hash::FxHashMap;

use crate::error::{DdError, Result};
use crate::manager::Manager;
use crate::node::{Level, NodeRef};

/// Rebuild the function at `root` in `dst`, which may hold any kind but must
/// have the same variable count. The result is canonical in `dst`.
///
/// Nodes are translated bottom-up with memoization. Level-skipping edges are
/// re-expressed when the two kinds disagree on their meaning: a don't-care
/// skip becomes an explicit don't-care chain under zero suppression, and a
/// zero skip becomes an explicit zero chain for BDD-style kinds.
pub fn convert(src: &Manager, root: NodeRef, dst: &mut Manager) -> Result<NodeRef> {
    src.check_live(root)?;
    if src.num_vars() != dst.num_vars() {
        return Err(DdError::ManagerMismatch {
            left: src.kind(),
            left_n: src.num_vars(),
            right: dst.kind(),
            right_n: dst.num_vars(),
        });
    }
    let mut memo: FxHashMap<NodeRef, NodeRef> = FxHashMap::default();
    memo.insert(NodeRef::LEAF0, NodeRef::LEAF0);
    memo.insert(NodeRef::LEAF1, NodeRef::LEAF1);
    let src_zs = src.kind().zero_suppressed();
    let dst_zs = dst.kind().zero_suppressed();

    // `child` entered from `entry`, as a destination function
    let edge = |dst: &mut Manager, memo: &FxHashMap<NodeRef, NodeRef>, child: NodeRef, entry: Level| {
        let d = memo[&child];
        let child_top = src.top(child);
        if child == NodeRef::LEAF0 || child_top == entry || src_zs == dst_zs {
            return Ok(d);
        }
        if src_zs {
            dst.zero_chain(entry, child_top - 1, d)
        } else {
            dst.dc_chain(entry, child_top - 1, d)
        }
    };

    for v in src.postorder(&[root]) {
        let n = src.raw(v);
        let lo = edge(dst, &memo, n.lo, n.bot + 1)?;
        let hi = edge(dst, &memo, n.hi, n.bot + 1)?;
        let r = match (src_zs, dst_zs) {
            (false, false) | (true, true) => dst.mk(n.top, n.bot, lo, hi)?,
            // the don't-care chain above `bot` is implicit in the destination
            (true, false) => dst.mk(n.bot, n.bot, lo, hi)?,
            // an or-chain: each level exits to hi through its own don't-care run
            (false, true) => {
                let mut r = dst.mk(n.bot, n.bot, lo, hi)?;
                for l in (n.top..n.bot).rev() {
                    let exit = edge(dst, &memo, n.hi, l + 1)?;
                    r = dst.mk(l, l, r, exit)?;
                }
                r
            }
        };
        memo.insert(v, r);
    }
    edge(dst, &memo, root, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DiagramKind;

    #[test]
    fn single_variable_collapses_in_czdd() {
        let n = 4000;
        let mut bdd = Manager::new(DiagramKind::Bdd, n).unwrap();
        let x = bdd.var(2000).unwrap();
        let mut czdd = Manager::new(DiagramKind::Czdd, n).unwrap();
        let y = convert(&bdd, x, &mut czdd).unwrap();
        assert_eq!(czdd.node_count(y).unwrap(), 4);
        assert_eq!(y, czdd.var(2000).unwrap());

        let mut zdd = Manager::new(DiagramKind::Zdd, n).unwrap();
        let z = convert(&czdd, y, &mut zdd).unwrap();
        assert_eq!(zdd.node_count(z).unwrap(), n + 2);
    }

    #[test]
    fn round_trips_are_canonical() {
        for src_kind in DiagramKind::ALL {
            let mut src = Manager::new(src_kind, 6).unwrap();
            let a = src.var(1).unwrap();
            let b = src.var(4).unwrap();
            let c = src.literal(6, false).unwrap();
            let ab = src.and(a, b).unwrap();
            let f = src.or(ab, c).unwrap();
            for dst_kind in DiagramKind::ALL {
                let mut dst = Manager::new(dst_kind, 6).unwrap();
                let g = convert(&src, f, &mut dst).unwrap();
                let again = convert(&src, f, &mut dst).unwrap();
                assert_eq!(g, again);
                let (da, db, dc) = (dst.var(1).unwrap(), dst.var(4).unwrap(), dst.literal(6, false).unwrap());
                let dab = dst.and(da, db).unwrap();
                let expect = dst.or(dab, dc).unwrap();
                assert_eq!(g, expect, "{src_kind} -> {dst_kind}");
                let mut back = Manager::new(src_kind, 6).unwrap();
                let h = convert(&dst, g, &mut back).unwrap();
                assert_eq!(
                    back.count_solutions(h).unwrap(),
                    src.count_solutions(f).unwrap()
                );
            }
        }
    }

    #[test]
    fn variable_counts_must_match() {
        let a = Manager::new(DiagramKind::Bdd, 4).unwrap();
        let mut b = Manager::new(DiagramKind::Zdd, 5).unwrap();
        assert!(matches!(
            convert(&a, NodeRef::LEAF1, &mut b),
            Err(DdError::ManagerMismatch { .. })
        ));
    }
}
