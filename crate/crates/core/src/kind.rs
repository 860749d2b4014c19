use std::fmt;
use std::str::FromStr;

/// The four canonical forms a manager can hold.
///
/// BDD-style kinds read a level-skipping edge as a don't-care chain and
/// ZDD-style kinds read it as a zero chain. The chained variants additionally
/// let one node span a range of levels: an or-chain for CBDDs and a
/// don't-care chain for CZDDs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramKind {
    Bdd,
    Zdd,
    Cbdd,
    Czdd,
}

impl DiagramKind {
    pub const ALL: [DiagramKind; 4] = [
        DiagramKind::Bdd,
        DiagramKind::Zdd,
        DiagramKind::Cbdd,
        DiagramKind::Czdd,
    ];

    /// True when skipped levels must be zero (ZDD and CZDD).
    #[inline]
    pub fn zero_suppressed(self) -> bool {
        matches!(self, DiagramKind::Zdd | DiagramKind::Czdd)
    }

    /// True when nodes may span more than one level.
    #[inline]
    pub fn chained(self) -> bool {
        matches!(self, DiagramKind::Cbdd | DiagramKind::Czdd)
    }

    pub fn name(self) -> &'static str {
        match self {
            DiagramKind::Bdd => "bdd",
            DiagramKind::Zdd => "zdd",
            DiagramKind::Cbdd => "cbdd",
            DiagramKind::Czdd => "czdd",
        }
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DiagramKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bdd" => Ok(DiagramKind::Bdd),
            "zdd" => Ok(DiagramKind::Zdd),
            "cbdd" => Ok(DiagramKind::Cbdd),
            "czdd" => Ok(DiagramKind::Czdd),
            other => Err(format!("unknown diagram kind `{other}`")),
        }
    }
}
