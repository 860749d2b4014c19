//! Function families that meet the chain-reduction size ratios exactly.
//!
//! Each family is described as an explicit unchained diagram in its native
//! semantics and can be built into a manager of any kind.

use crate::convert::convert;
use crate::error::{DdError, Result};
use crate::kind::DiagramKind;
use crate::manager::Manager;
use crate::node::{Level, NodeRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Zero chains implicit in the ZDD must be spelled out by the CBDD:
    /// ZDD = CZDD = 2k+3 nodes, CBDD = 6k+2 nodes, over 3k+2 variables.
    ZddVsCbdd,
    /// BDD nodes reached both directly and across one skipped level must be
    /// duplicated by the CZDD: BDD = 2k+3 nodes, CZDD = 4k+3, over 2k+1
    /// variables.
    BddVsCzdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Child {
    Zero,
    One,
    Node(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyNode {
    pub level: Level,
    pub lo: Child,
    pub hi: Child,
}

/// One member of a worst-case family. `nodes` are listed children first.
#[derive(Debug, Clone)]
pub struct WorstCase {
    pub family: Family,
    pub k: usize,
    pub num_vars: usize,
    pub nodes: Vec<FamilyNode>,
    pub root: Child,
}

pub fn gen_worst_case_zdd_vs_cbdd(k: usize) -> Result<WorstCase> {
    WorstCase::new(Family::ZddVsCbdd, k)
}

pub fn gen_worst_case_bdd_vs_czdd(k: usize) -> Result<WorstCase> {
    WorstCase::new(Family::BddVsCzdd, k)
}

impl WorstCase {
    pub fn new(family: Family, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(DdError::InvalidParameter { what: "k", value: k });
        }
        Ok(match family {
            Family::ZddVsCbdd => Self::zdd_vs_cbdd(k),
            Family::BddVsCzdd => Self::bdd_vs_czdd(k),
        })
    }

    // Root r at level 1 branches to x_1 (level 2) and y_1 (level 3). Block i
    // holds x_i at 3i-1 and y_i at 3i, then one untouched level. Both nodes
    // of block i point to both nodes of block i+1, so every edge skips at
    // least one level; the last block points to the leaves.
    fn zdd_vs_cbdd(k: usize) -> Self {
        let mut nodes = Vec::with_capacity(2 * k + 1);
        let (mut x_next, mut y_next) = (Child::Zero, Child::One);
        for i in (1..=k as Level).rev() {
            let (lo_x, hi_x, lo_y, hi_y) = if i == k as Level {
                (Child::Zero, Child::One, Child::Zero, Child::One)
            } else {
                (x_next, y_next, x_next, y_next)
            };
            nodes.push(FamilyNode {
                level: 3 * i - 1,
                lo: lo_x,
                hi: hi_x,
            });
            let x = Child::Node(nodes.len() - 1);
            nodes.push(FamilyNode {
                level: 3 * i,
                lo: lo_y,
                hi: hi_y,
            });
            let y = Child::Node(nodes.len() - 1);
            (x_next, y_next) = (x, y);
        }
        nodes.push(FamilyNode {
            level: 1,
            lo: x_next,
            hi: y_next,
        });
        WorstCase {
            family: Family::ZddVsCbdd,
            k,
            num_vars: 3 * k + 2,
            root: Child::Node(nodes.len() - 1),
            nodes,
        }
    }

    // Node j sits at level j; its lo edge goes to j+1 and its hi edge
    // skips to j+2. Every node below level 2 is therefore entered both
    // directly and across a one-level don't-care run.
    fn bdd_vs_czdd(k: usize) -> Self {
        let n = 2 * k + 1;
        let mut nodes = Vec::with_capacity(n);
        // index of the node at level j is n - j
        for j in (1..=n).rev() {
            let at = |l: usize| if l > n { Child::One } else { Child::Node(n - l) };
            let (lo, hi) = if j == n {
                (Child::Zero, Child::One)
            } else {
                (at(j + 1), at(j + 2))
            };
            nodes.push(FamilyNode {
                level: j as Level,
                lo,
                hi,
            });
        }
        WorstCase {
            family: Family::BddVsCzdd,
            k,
            num_vars: n,
            root: Child::Node(nodes.len() - 1),
            nodes,
        }
    }

    /// Kind whose edge semantics the node list is written in.
    pub fn native_kind(&self) -> DiagramKind {
        match self.family {
            Family::ZddVsCbdd => DiagramKind::Zdd,
            Family::BddVsCzdd => DiagramKind::Bdd,
        }
    }

    /// Closed-form node count (leaves included) for `kind`, where one is known.
    pub fn expected_nodes(&self, kind: DiagramKind) -> Option<usize> {
        let k = self.k;
        match (self.family, kind) {
            (Family::ZddVsCbdd, DiagramKind::Zdd | DiagramKind::Czdd) => Some(2 * k + 3),
            (Family::ZddVsCbdd, DiagramKind::Cbdd) => Some(6 * k + 2),
            (Family::BddVsCzdd, DiagramKind::Bdd) => Some(2 * k + 3),
            (Family::BddVsCzdd, DiagramKind::Czdd) => Some(4 * k + 3),
            _ => None,
        }
    }

    /// Build the function in `m`, which must have `num_vars` variables.
    pub fn build(&self, m: &mut Manager) -> Result<NodeRef> {
        if m.num_vars() as usize != self.num_vars {
            return Err(DdError::ManagerMismatch {
                left: self.native_kind(),
                left_n: self.num_vars as Level,
                right: m.kind(),
                right_n: m.num_vars(),
            });
        }
        if m.kind().zero_suppressed() == self.native_kind().zero_suppressed() {
            return self.build_native(m);
        }
        let mut native = Manager::new(self.native_kind(), self.num_vars)?;
        let root = self.build_native(&mut native)?;
        convert(&native, root, m)
    }

    fn build_native(&self, m: &mut Manager) -> Result<NodeRef> {
        let mut built: Vec<NodeRef> = Vec::with_capacity(self.nodes.len());
        let resolve = |built: &[NodeRef], c: Child| match c {
            Child::Zero => NodeRef::LEAF0,
            Child::One => NodeRef::LEAF1,
            Child::Node(i) => built[i],
        };
        for node in &self.nodes {
            let lo = resolve(&built, node.lo);
            let hi = resolve(&built, node.hi);
            built.push(m.make_node(node.level, node.level, lo, hi)?);
        }
        Ok(resolve(&built, self.root))
    }
}
