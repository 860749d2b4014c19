use std::fmt;

/// A variable level. Levels run from 1 (top) to `n`; leaves sit at `n + 1`.
pub type Level = u32;

/// Largest supported variable count. Levels and `n + 1` fit in 16 bits.
pub const MAX_VARIABLES: usize = (1 << 16) - 2;

/// Handle to a node inside one manager.
///
/// Equal handles within one manager denote the same function; the unique
/// table guarantees there is only one node per `(top, bot, lo, hi)` tuple.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeRef(pub(crate) u32);

impl NodeRef {
    pub const LEAF0: NodeRef = NodeRef(0);
    pub const LEAF1: NodeRef = NodeRef(1);

    #[inline]
    pub fn is_leaf(self) -> bool {
        self.0 < 2
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_leaf_value(value: bool) -> NodeRef {
        if value {
            NodeRef::LEAF1
        } else {
            NodeRef::LEAF0
        }
    }
}

impl fmt::Debug for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NodeRef::LEAF0 => f.write_str("LEAF0"),
            NodeRef::LEAF1 => f.write_str("LEAF1"),
            NodeRef(i) => write!(f, "#{i}"),
        }
    }
}

/// A nonleaf vertex `<top,bot>(lo, hi)`.
///
/// For CBDDs the node encodes an or-chain over `top..=bot`: the first level
/// set to one exits through `hi`, all zeros continue to `lo`. For CZDDs it
/// encodes a don't-care chain over `top..bot` followed by an ordinary branch
/// at `bot`. Unchained kinds always have `top == bot`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Node {
    pub top: Level,
    pub bot: Level,
    pub lo: NodeRef,
    pub hi: NodeRef,
}

impl Node {
    pub fn span(&self) -> Level {
        self.bot - self.top + 1
    }
}
