//! The apply engine.
//!
//! Each step chooses a split range `<t,b>` from the argument levels, takes
//! the lo/hi cofactors of every argument over that range, recurses, and
//! combines the two results into one node. For unchained kinds the range
//! always collapses to a single level, which gives the classic algorithms.
//!
//! Recursion runs on an explicit task stack so that deep diagrams (thousands
//! of levels) do not depend on the thread's stack size.

use std::fmt;

use crate::cache::CacheKey;
use crate::error::{DdError, Result};
use crate::manager::Manager;
use crate::node::{Level, NodeRef};

/// Boolean operations supported by [`Manager::apply`].
///
/// `Not` is evaluated as `Xor` with the universe function, which is what
/// makes it meaningful for zero-suppressed kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoolOp {
    And,
    Or,
    Xor,
    Not,
    Ite,
}

impl BoolOp {
    pub fn arity(self) -> usize {
        match self {
            BoolOp::Not => 1,
            BoolOp::And | BoolOp::Or | BoolOp::Xor => 2,
            BoolOp::Ite => 3,
        }
    }

    /// Index into [`crate::Stats::lookups_by_op`].
    pub fn tag(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            BoolOp::And => "and",
            BoolOp::Or => "or",
            BoolOp::Xor => "xor",
            BoolOp::Not => "not",
            BoolOp::Ite => "ite",
        }
    }

    fn commutative(self) -> bool {
        matches!(self, BoolOp::And | BoolOp::Or | BoolOp::Xor)
    }
}

impl fmt::Display for BoolOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The range of levels `top..=bot` expanded by one apply step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitContext {
    pub top: Level,
    pub bot: Level,
}

enum Task {
    Step {
        op: BoolOp,
        args: [NodeRef; 3],
        depth: usize,
    },
    Build {
        key: CacheKey,
        ctx: SplitContext,
    },
}

impl Manager {
    /// Splitting levels for one apply step over `args`.
    ///
    /// At least one argument must be a nonleaf node.
    pub fn split_levels(&self, args: &[NodeRef]) -> Result<SplitContext> {
        for &a in args {
            self.check_live(a)?;
        }
        if args.iter().all(|a| a.is_leaf()) {
            return Err(DdError::Arity {
                op: "split",
                expected: 1,
                got: 0,
            });
        }
        Ok(self.split_unchecked(args))
    }

    pub(crate) fn split_unchecked(&self, args: &[NodeRef]) -> SplitContext {
        let leaf = self.leaf_level();
        let t = args.iter().map(|&a| self.top(a)).min().unwrap_or(leaf);
        debug_assert!(t < leaf);
        let zero_suppressed = self.kind().zero_suppressed();
        let b = args
            .iter()
            .map(|&a| {
                let n = self.raw(a);
                if n.top == t {
                    n.bot
                } else if zero_suppressed {
                    if a == NodeRef::LEAF0 {
                        leaf
                    } else {
                        t
                    }
                } else if a.is_leaf() {
                    leaf
                } else {
                    n.top - 1
                }
            })
            .min()
            .unwrap_or(t);
        SplitContext { top: t, bot: b }
    }

    /// The lo and hi cofactors of `v` with respect to the split range `ctx`.
    ///
    /// `v` must not start above `ctx.top`.
    pub fn cofactor(&mut self, v: NodeRef, ctx: SplitContext) -> Result<(NodeRef, NodeRef)> {
        self.check_live(v)?;
        let top = self.top(v);
        if ctx.top == 0 || ctx.top > ctx.bot || ctx.bot > self.num_vars() || top < ctx.top {
            return Err(DdError::LevelRange {
                top: ctx.top,
                bot: ctx.bot,
                n: self.num_vars(),
            });
        }
        self.cofactor_unchecked(v, ctx)
    }

    pub(crate) fn cofactor_unchecked(&mut self, v: NodeRef, ctx: SplitContext) -> Result<(NodeRef, NodeRef)> {
        let b = ctx.bot;
        let zero_suppressed = self.kind().zero_suppressed();
        if v == NodeRef::LEAF0 {
            return Ok((v, v));
        }
        let n = self.raw(v);
        if v.is_leaf() || b < n.top {
            let hi = if zero_suppressed { NodeRef::LEAF0 } else { v };
            return Ok((v, hi));
        }
        if b == n.bot {
            return Ok((n.lo, n.hi));
        }
        debug_assert!(n.top <= b && b < n.bot);
        let rest = self.mk(b + 1, n.bot, n.lo, n.hi)?;
        if zero_suppressed {
            Ok((rest, rest))
        } else {
            Ok((rest, n.hi))
        }
    }

    /// Build the result node of an apply step from its lo and hi results.
    pub fn combine(&mut self, ctx: SplitContext, u0: NodeRef, u1: NodeRef) -> Result<NodeRef> {
        self.make_node(ctx.top, ctx.bot, u0, u1)
    }

    /// Apply `op` to `args`; the argument count must match [`BoolOp::arity`].
    pub fn apply(&mut self, op: BoolOp, args: &[NodeRef]) -> Result<NodeRef> {
        if args.len() != op.arity() {
            return Err(DdError::Arity {
                op: op.name(),
                expected: op.arity(),
                got: args.len(),
            });
        }
        for &a in args {
            self.check_live(a)?;
        }
        let mut padded = [NodeRef::LEAF0; 3];
        padded[..args.len()].copy_from_slice(args);
        let (op, padded) = match op {
            BoolOp::Not => (BoolOp::Xor, [args[0], self.universe()?, NodeRef::LEAF0]),
            _ => (op, padded),
        };
        let live = self.live_nodes();
        if let Some(c) = self.cache.as_mut() {
            c.maybe_grow(live);
        }
        self.run(op, padded)
    }

    pub fn and(&mut self, f: NodeRef, g: NodeRef) -> Result<NodeRef> {
        self.apply(BoolOp::And, &[f, g])
    }

    pub fn or(&mut self, f: NodeRef, g: NodeRef) -> Result<NodeRef> {
        self.apply(BoolOp::Or, &[f, g])
    }

    pub fn xor(&mut self, f: NodeRef, g: NodeRef) -> Result<NodeRef> {
        self.apply(BoolOp::Xor, &[f, g])
    }

    pub fn not(&mut self, f: NodeRef) -> Result<NodeRef> {
        self.apply(BoolOp::Not, &[f])
    }

    pub fn ite(&mut self, f: NodeRef, g: NodeRef, h: NodeRef) -> Result<NodeRef> {
        self.apply(BoolOp::Ite, &[f, g, h])
    }

    fn run(&mut self, op: BoolOp, args: [NodeRef; 3]) -> Result<NodeRef> {
        let mut tasks = vec![Task::Step { op, args, depth: 1 }];
        let mut values: Vec<NodeRef> = Vec::new();
        while let Some(task) = tasks.pop() {
            match task {
                Task::Step { op, args, depth } => {
                    if let Some(r) = self.terminal(op, &args) {
                        values.push(r);
                        continue;
                    }
                    let mut args = args;
                    if op.commutative() && args[1] < args[0] {
                        args.swap(0, 1);
                    }
                    let key = CacheKey {
                        op: op.tag() as u8,
                        args,
                    };
                    self.stats.cache_lookups += 1;
                    self.stats.lookups_by_op[op.tag()] += 1;
                    if let Some(r) = self.cache.as_ref().and_then(|c| c.get(&key)) {
                        self.stats.cache_hits += 1;
                        values.push(r);
                        continue;
                    }
                    self.stats.max_apply_depth = self.stats.max_apply_depth.max(depth);
                    let k = op.arity();
                    let ctx = self.split_unchecked(&args[..k]);
                    let mut lo = [NodeRef::LEAF0; 3];
                    let mut hi = [NodeRef::LEAF0; 3];
                    for i in 0..k {
                        (lo[i], hi[i]) = self.cofactor_unchecked(args[i], ctx)?;
                    }
                    tasks.push(Task::Build { key, ctx });
                    tasks.push(Task::Step {
                        op,
                        args: hi,
                        depth: depth + 1,
                    });
                    tasks.push(Task::Step {
                        op,
                        args: lo,
                        depth: depth + 1,
                    });
                }
                Task::Build { key, ctx } => {
                    let hi = values.pop().expect("apply: missing hi result");
                    let lo = values.pop().expect("apply: missing lo result");
                    let r = self.mk(ctx.top, ctx.bot, lo, hi)?;
                    if let Some(c) = self.cache.as_mut() {
                        c.insert(key, r);
                    }
                    values.push(r);
                }
            }
        }
        debug_assert_eq!(values.len(), 1);
        Ok(values.pop().expect("apply: no result"))
    }

    /// Terminal cases. Leaf 1 only means "true" for BDD-style kinds; under
    /// zero suppression it is the single all-zero assignment, so identities
    /// that treat it as the constant true function are restricted to BDDs.
    fn terminal(&self, op: BoolOp, args: &[NodeRef; 3]) -> Option<NodeRef> {
        const ZERO: NodeRef = NodeRef::LEAF0;
        const ONE: NodeRef = NodeRef::LEAF1;
        let dc = !self.kind().zero_suppressed();
        let [f, g, h] = *args;
        match op {
            BoolOp::And => {
                if f == ZERO || g == ZERO {
                    Some(ZERO)
                } else if f == g {
                    Some(f)
                } else if f.is_leaf() && g.is_leaf() {
                    Some(ZERO)
                } else if dc && f == ONE {
                    Some(g)
                } else if dc && g == ONE {
                    Some(f)
                } else {
                    None
                }
            }
            BoolOp::Or => {
                if f == ZERO {
                    Some(g)
                } else if g == ZERO || f == g {
                    Some(f)
                } else if dc && (f == ONE || g == ONE) {
                    Some(ONE)
                } else {
                    None
                }
            }
            BoolOp::Xor => {
                if f == ZERO {
                    Some(g)
                } else if g == ZERO {
                    Some(f)
                } else if f == g {
                    Some(ZERO)
                } else {
                    None
                }
            }
            BoolOp::Ite => {
                if f == ZERO {
                    Some(h)
                } else if g == h {
                    Some(g)
                } else if f == ONE && (dc || (g.is_leaf() && h.is_leaf())) {
                    Some(g)
                } else if dc && g == ONE && h == ZERO {
                    Some(f)
                } else {
                    None
                }
            }
            BoolOp::Not => unreachable!("not is rewritten to xor"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DiagramKind;

    fn node(m: &Manager, r: NodeRef) -> (Level, Level, NodeRef, NodeRef) {
        let n = m.node(r).unwrap();
        (n.top, n.bot, n.lo, n.hi)
    }

    /// Distinct nonleaf nodes usable as children below `level`.
    fn stubs(m: &mut Manager, level: Level) -> (NodeRef, NodeRef) {
        let f = m.make_node(level, level, NodeRef::LEAF0, NodeRef::LEAF1).unwrap();
        let g = m.make_node(level, level, NodeRef::LEAF1, NodeRef::LEAF0).unwrap();
        (f, g)
    }

    #[test]
    fn cbdd_split_levels() {
        let mut m = Manager::new(DiagramKind::Cbdd, 10).unwrap();
        let (f, g) = stubs(&mut m, 9);
        let a = m.make_node(1, 5, f, g).unwrap();
        let b = m.make_node(1, 5, g, f).unwrap();
        let c = m.make_node(3, 7, f, g).unwrap();
        assert_eq!(m.split_levels(&[a, b]).unwrap(), SplitContext { top: 1, bot: 5 });
        assert_eq!(m.split_levels(&[a, c]).unwrap(), SplitContext { top: 1, bot: 2 });
        assert_eq!(m.split_levels(&[a, NodeRef::LEAF1]).unwrap(), SplitContext { top: 1, bot: 5 });
        assert!(m.split_levels(&[NodeRef::LEAF0, NodeRef::LEAF1]).is_err());
    }

    #[test]
    fn czdd_split_levels() {
        let mut m = Manager::new(DiagramKind::Czdd, 10).unwrap();
        let (f, g) = stubs(&mut m, 10);
        let a = m.make_node(2, 6, f, g).unwrap();
        assert_eq!(m.split_levels(&[a, NodeRef::LEAF0]).unwrap(), SplitContext { top: 2, bot: 6 });
        let b = m.make_node(1, 4, f, g).unwrap();
        let c = m.make_node(2, 9, f, g).unwrap();
        assert_eq!(m.split_levels(&[b, c]).unwrap(), SplitContext { top: 1, bot: 1 });
        // leaf 1 is a zero chain, so it pins the split to one level
        assert_eq!(m.split_levels(&[a, NodeRef::LEAF1]).unwrap(), SplitContext { top: 2, bot: 2 });
    }

    #[test]
    fn unchained_split_is_single_level() {
        let mut m = Manager::new(DiagramKind::Bdd, 6).unwrap();
        let x = m.var(2).unwrap();
        let y = m.var(4).unwrap();
        assert_eq!(m.split_levels(&[x, y]).unwrap(), SplitContext { top: 2, bot: 2 });
    }

    #[test]
    fn cbdd_cofactor_cases() {
        let mut m = Manager::new(DiagramKind::Cbdd, 8).unwrap();
        let (f, g) = stubs(&mut m, 7);
        let v = m.make_node(3, 3, f, g).unwrap();
        assert_eq!(m.cofactor(v, SplitContext { top: 3, bot: 3 }).unwrap(), (f, g));
        assert_eq!(m.cofactor(v, SplitContext { top: 1, bot: 2 }).unwrap(), (v, v));

        let w = m.make_node(1, 5, f, g).unwrap();
        let (lo, hi) = m.cofactor(w, SplitContext { top: 1, bot: 2 }).unwrap();
        assert_eq!(node(&m, lo), (3, 5, f, g));
        assert_eq!(hi, g);
        assert_eq!(
            m.cofactor(NodeRef::LEAF1, SplitContext { top: 1, bot: 2 }).unwrap(),
            (NodeRef::LEAF1, NodeRef::LEAF1)
        );
    }

    #[test]
    fn czdd_cofactor_cases() {
        let mut m = Manager::new(DiagramKind::Czdd, 8).unwrap();
        let (f, g) = stubs(&mut m, 7);
        let v = m.make_node(4, 4, f, g).unwrap();
        assert_eq!(m.cofactor(v, SplitContext { top: 2, bot: 2 }).unwrap(), (v, NodeRef::LEAF0));

        let w = m.make_node(1, 5, f, g).unwrap();
        let (lo, hi) = m.cofactor(w, SplitContext { top: 1, bot: 2 }).unwrap();
        assert_eq!(lo, hi);
        assert_eq!(node(&m, lo), (3, 5, f, g));
        assert_eq!(
            m.cofactor(NodeRef::LEAF1, SplitContext { top: 1, bot: 1 }).unwrap(),
            (NodeRef::LEAF1, NodeRef::LEAF0)
        );
        assert_eq!(
            m.cofactor(NodeRef::LEAF0, SplitContext { top: 1, bot: 1 }).unwrap(),
            (NodeRef::LEAF0, NodeRef::LEAF0)
        );
        // split above the node's top is a precondition violation
        assert!(m.cofactor(v, SplitContext { top: 5, bot: 5 }).is_err());
    }

    #[test]
    fn cbdd_combine_cases() {
        let mut m = Manager::new(DiagramKind::Cbdd, 8).unwrap();
        let (w, y) = stubs(&mut m, 7);
        assert_eq!(m.combine(SplitContext { top: 2, bot: 4 }, w, w).unwrap(), w);
        let u0 = m.make_node(3, 6, w, y).unwrap();
        let u = m.combine(SplitContext { top: 1, bot: 2 }, u0, y).unwrap();
        assert_eq!(node(&m, u), (1, 6, w, y));
        let u = m.combine(SplitContext { top: 1, bot: 2 }, u0, w).unwrap();
        assert_eq!(node(&m, u), (1, 2, u0, w));
    }

    #[test]
    fn czdd_combine_cases() {
        let mut m = Manager::new(DiagramKind::Czdd, 8).unwrap();
        let (x, y) = stubs(&mut m, 7);
        let u = m.combine(SplitContext { top: 1, bot: 3 }, x, NodeRef::LEAF0).unwrap();
        assert_eq!(node(&m, u), (1, 2, x, x));
        assert_eq!(m.combine(SplitContext { top: 2, bot: 2 }, x, NodeRef::LEAF0).unwrap(), x);
        let v = m.make_node(4, 6, x, y).unwrap();
        let u = m.combine(SplitContext { top: 1, bot: 3 }, v, v).unwrap();
        assert_eq!(node(&m, u), (1, 6, x, y));
        let u = m.combine(SplitContext { top: 1, bot: 3 }, v, x).unwrap();
        assert_eq!(node(&m, u), (1, 3, v, x));
    }

    #[test]
    fn basic_terminals() {
        for kind in DiagramKind::ALL {
            let mut m = Manager::new(kind, 6).unwrap();
            let x = m.var(2).unwrap();
            let y = m.var(5).unwrap();
            let f = m.or(x, y).unwrap();
            let t = m.universe().unwrap();
            assert_eq!(m.and(f, t).unwrap(), f, "{kind}");
            assert_eq!(m.xor(f, f).unwrap(), NodeRef::LEAF0, "{kind}");
            assert_eq!(m.or(f, t).unwrap(), t, "{kind}");
            let nf = m.not(f).unwrap();
            assert_eq!(m.not(nf).unwrap(), f, "{kind}");
            assert_eq!(m.and(f, nf).unwrap(), NodeRef::LEAF0, "{kind}");
            assert_eq!(m.ite(x, y, y).unwrap(), y, "{kind}");
        }
    }

    #[test]
    fn arity_is_checked() {
        let mut m = Manager::new(DiagramKind::Bdd, 3).unwrap();
        assert!(matches!(
            m.apply(BoolOp::And, &[NodeRef::LEAF1]),
            Err(DdError::Arity { expected: 2, got: 1, .. })
        ));
        assert!(m.apply(BoolOp::Ite, &[NodeRef::LEAF1, NodeRef::LEAF0]).is_err());
    }

    #[test]
    fn deep_apply_does_not_overflow() {
        let n = 4128;
        let mut m = Manager::new(DiagramKind::Zdd, n).unwrap();
        let a = m.var(1).unwrap();
        let b = m.var(n as Level).unwrap();
        let f = m.and(a, b).unwrap();
        assert!(m.stats().max_apply_depth <= n + 2);
        assert_eq!(m.node_count(f).unwrap(), n + 2);
    }
}
