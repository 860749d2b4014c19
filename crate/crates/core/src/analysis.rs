//! Function-level queries that interpret edges according to the kind's
//! level-skipping semantics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::error::{DdError, Result};
use crate::manager::Manager;
use crate::node::{Level, NodeRef};

/// A complete assignment to the `n` variables; `bits[0]` is level 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Minterm(pub Vec<bool>);

impl Minterm {
    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at a 1-based level.
    pub fn get(&self, level: Level) -> bool {
        self.0[level as usize - 1]
    }
}

impl fmt::Display for Minterm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Minterm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Minterm({self})")
    }
}

impl FromStr for Minterm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("invalid minterm digit `{other}`")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Minterm)
    }
}

/// A position while walking one level at a time: the function that remains
/// for levels at and below the current one.
#[derive(Clone, Copy, Debug)]
enum Cursor {
    Zero,
    One,
    Chain {
        top: Level,
        bot: Level,
        lo: NodeRef,
        hi: NodeRef,
    },
}

impl Manager {
    fn cursor(&self, r: NodeRef) -> Cursor {
        match r {
            NodeRef::LEAF0 => Cursor::Zero,
            NodeRef::LEAF1 => Cursor::One,
            _ => {
                let n = self.raw(r);
                Cursor::Chain {
                    top: n.top,
                    bot: n.bot,
                    lo: n.lo,
                    hi: n.hi,
                }
            }
        }
    }

    /// Successor cursors when `level` is assigned 0 and 1.
    fn advance(&self, c: Cursor, level: Level) -> (Cursor, Cursor) {
        let zs = self.kind().zero_suppressed();
        match c {
            Cursor::Zero => (Cursor::Zero, Cursor::Zero),
            Cursor::One if zs => (Cursor::One, Cursor::Zero),
            Cursor::One => (Cursor::One, Cursor::One),
            Cursor::Chain { top, .. } if level < top => {
                if zs {
                    (c, Cursor::Zero)
                } else {
                    (c, c)
                }
            }
            Cursor::Chain { top, bot, lo, hi } => {
                debug_assert_eq!(level, top);
                let rest = Cursor::Chain {
                    top: top + 1,
                    bot,
                    lo,
                    hi,
                };
                match (top == bot, zs) {
                    (true, _) => (self.cursor(lo), self.cursor(hi)),
                    // or-chain: a one exits through hi, a zero continues
                    (false, false) => (rest, self.cursor(hi)),
                    // don't-care chain
                    (false, true) => (rest, rest),
                }
            }
        }
    }

    /// Value of the function at `root` for a full assignment (`bits[0]` is level 1).
    pub fn evaluate(&self, root: NodeRef, bits: &[bool]) -> Result<bool> {
        self.check_live(root)?;
        if bits.len() != self.num_vars() as usize {
            return Err(DdError::LevelRange {
                top: 1,
                bot: bits.len() as Level,
                n: self.num_vars(),
            });
        }
        let mut c = self.cursor(root);
        for (i, &bit) in bits.iter().enumerate() {
            let (c0, c1) = self.advance(c, i as Level + 1);
            c = if bit { c1 } else { c0 };
            if matches!(c, Cursor::Zero) {
                return Ok(false);
            }
        }
        Ok(matches!(c, Cursor::One))
    }

    /// Exact number of satisfying assignments over all `n` variables.
    pub fn count_solutions(&self, root: NodeRef) -> Result<BigUint> {
        self.check_live(root)?;
        let zs = self.kind().zero_suppressed();
        let mut counts: FxHashMap<NodeRef, BigUint> = FxHashMap::default();
        counts.insert(NodeRef::LEAF0, BigUint::zero());
        counts.insert(NodeRef::LEAF1, BigUint::one());
        for v in self.postorder(&[root]) {
            let n = self.raw(v);
            let (lo, hi) = (&counts[&n.lo], &counts[&n.hi]);
            let c = if zs {
                // 2^(b-t) free choices on the don't-care chain
                (lo + hi) << (n.bot - n.top) as usize
            } else {
                // skipped levels below the exit are free; the hi exit can be
                // taken at any of the b-t+1 chain levels
                let lo_part = lo << (self.top(n.lo) - 1 - n.bot) as usize;
                let exits = (BigUint::one() << n.span() as usize) - 1u32;
                let hi_part = (hi << (self.top(n.hi) - 1 - n.bot) as usize) * exits;
                lo_part + hi_part
            };
            counts.insert(v, c);
        }
        let c = counts.remove(&root).expect("root counted");
        Ok(if zs {
            c
        } else {
            c << (self.top(root) - 1) as usize
        })
    }

    /// Levels the function depends on, ascending.
    pub fn support(&self, root: NodeRef) -> Result<Vec<Level>> {
        self.check_live(root)?;
        let n = self.num_vars() as usize;
        // difference array over levels 1..=n
        let mut diff = vec![0i64; n + 2];
        let mut mark = |from: Level, to: Level| {
            if from <= to {
                diff[from as usize] += 1;
                diff[to as usize + 1] -= 1;
            }
        };
        let zs = self.kind().zero_suppressed();
        if zs && root != NodeRef::LEAF0 {
            mark(1, self.top(root) - 1);
        }
        for v in self.postorder(&[root]) {
            let node = self.raw(v);
            if zs {
                if node.lo != node.hi {
                    mark(node.bot, node.bot);
                }
                for child in [node.lo, node.hi] {
                    if child != NodeRef::LEAF0 {
                        mark(node.bot + 1, self.top(child) - 1);
                    }
                }
            } else {
                mark(node.top, node.bot);
            }
        }
        let mut out = Vec::new();
        let mut acc = 0;
        for (level, d) in diff.iter().enumerate().take(n + 1).skip(1) {
            acc += d;
            if acc > 0 {
                out.push(level as Level);
            }
        }
        Ok(out)
    }

    /// Satisfying assignments in lexicographic order (level 1 most
    /// significant, 0 before 1), at most `limit` of them.
    pub fn enumerate_minterms(&self, root: NodeRef, limit: usize) -> Result<Vec<Minterm>> {
        self.check_live(root)?;
        let n = self.num_vars() as usize;
        let mut out = Vec::new();
        if limit == 0 || root == NodeRef::LEAF0 {
            return Ok(out);
        }
        let mut bits = vec![false; n];
        // frame for level i (1-based) sits at stack index i-1
        let mut stack: Vec<((Cursor, Cursor), u8)> = vec![(self.advance(self.cursor(root), 1), 0)];
        while !stack.is_empty() {
            let level = stack.len();
            let frame = stack.last_mut().expect("non-empty");
            let branch = frame.1;
            if branch == 2 {
                stack.pop();
                continue;
            }
            frame.1 += 1;
            let child = if branch == 0 { frame.0 .0 } else { frame.0 .1 };
            if matches!(child, Cursor::Zero) {
                continue;
            }
            bits[level - 1] = branch == 1;
            if level == n {
                debug_assert!(matches!(child, Cursor::One));
                out.push(Minterm(bits.clone()));
                if out.len() >= limit {
                    break;
                }
                continue;
            }
            stack.push((self.advance(child, level as Level + 1), 0));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DiagramKind;

    /// S = {0001, 0011, 0101, 0111, 1000} built as a union of minterm cubes.
    fn set_s(m: &mut Manager) -> NodeRef {
        let mut f = NodeRef::LEAF0;
        for word in ["0001", "0011", "0101", "0111", "1000"] {
            let lits: Vec<_> = word
                .chars()
                .enumerate()
                .map(|(i, c)| (i as Level + 1, c == '1'))
                .collect();
            let cube = m.cube(&lits).unwrap();
            f = m.or(f, cube).unwrap();
        }
        f
    }

    #[test]
    fn set_s_all_kinds() {
        for kind in DiagramKind::ALL {
            let mut m = Manager::new(kind, 4).unwrap();
            let s = set_s(&mut m);
            assert_eq!(m.count_solutions(s).unwrap(), BigUint::from(5u32), "{kind}");
            let words: Vec<String> = m
                .enumerate_minterms(s, 10)
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect();
            assert_eq!(words, ["0001", "0011", "0101", "0111", "1000"], "{kind}");
            assert_eq!(m.support(s).unwrap(), vec![1, 2, 3, 4], "{kind}");
        }
    }

    #[test]
    fn set_s_shapes() {
        // levelized graph: BDD keeps the or-chain, ZDD keeps the don't-care chain
        let expect = [
            (DiagramKind::Bdd, 7),
            (DiagramKind::Cbdd, 5),
            (DiagramKind::Zdd, 6),
            (DiagramKind::Czdd, 4),
        ];
        for (kind, nodes) in expect {
            let mut m = Manager::new(kind, 4).unwrap();
            let s = set_s(&mut m);
            assert_eq!(m.node_count(s).unwrap(), nodes, "{kind}");
        }
    }

    #[test]
    fn constants() {
        for kind in DiagramKind::ALL {
            let mut m = Manager::new(kind, 10).unwrap();
            assert_eq!(m.count_solutions(NodeRef::LEAF0).unwrap(), BigUint::zero());
            let t = m.universe().unwrap();
            assert_eq!(m.count_solutions(t).unwrap(), BigUint::from(1024u32), "{kind}");
            assert!(m.support(t).unwrap().is_empty(), "{kind}");
            assert!(m.enumerate_minterms(NodeRef::LEAF0, 5).unwrap().is_empty());
            assert_eq!(m.enumerate_minterms(t, 3).unwrap().len(), 3);
        }
    }

    #[test]
    fn leaf_one_meaning_differs_by_kind() {
        let mut z = Manager::new(DiagramKind::Czdd, 3).unwrap();
        assert_eq!(z.count_solutions(NodeRef::LEAF1).unwrap(), BigUint::one());
        assert_eq!(z.support(NodeRef::LEAF1).unwrap(), vec![1, 2, 3]);
        let b = Manager::new(DiagramKind::Cbdd, 3).unwrap();
        assert_eq!(b.count_solutions(NodeRef::LEAF1).unwrap(), BigUint::from(8u32));
        assert!(b.support(NodeRef::LEAF1).unwrap().is_empty());
        let _ = z.universe();
    }

    #[test]
    fn single_variable_support() {
        for kind in DiagramKind::ALL {
            let mut m = Manager::new(kind, 8).unwrap();
            let x = m.var(3).unwrap();
            assert_eq!(m.support(x).unwrap(), vec![3], "{kind}");
            assert_eq!(m.count_solutions(x).unwrap(), BigUint::from(128u32), "{kind}");
            let nx = m.literal(3, false).unwrap();
            assert_eq!(m.support(nx).unwrap(), vec![3], "{kind}");
        }
    }

    #[test]
    fn counts_are_exact_for_many_levels() {
        let mut m = Manager::new(DiagramKind::Czdd, 4000).unwrap();
        let x = m.var(2000).unwrap();
        assert_eq!(m.count_solutions(x).unwrap(), BigUint::one() << 3999usize);
        let mut m = Manager::new(DiagramKind::Cbdd, 4000).unwrap();
        let x = m.var(2000).unwrap();
        assert_eq!(m.count_solutions(x).unwrap(), BigUint::one() << 3999usize);
    }

    #[test]
    fn evaluate_checks_length() {
        let m = Manager::new(DiagramKind::Bdd, 3).unwrap();
        assert!(m.evaluate(NodeRef::LEAF1, &[true]).is_err());
        assert!(m.evaluate(NodeRef::LEAF1, &[true, false, true]).unwrap());
    }

    #[test]
    fn minterm_text() {
        let m: Minterm = "0101".parse().unwrap();
        assert!(m.get(2) && !m.get(3));
        assert_eq!(m.to_string(), "0101");
        assert!("01x".parse::<Minterm>().is_err());
    }
}
