use thiserror::Error;

use crate::kind::DiagramKind;
use crate::node::{Level, NodeRef};

/// Errors raised by manager operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DdError {
    #[error("variable count {n} out of range (1..={max})")]
    VariableCount { n: usize, max: usize },

    #[error("level pair <{top},{bot}> invalid for a manager with {n} variables")]
    LevelRange { top: Level, bot: Level, n: Level },

    #[error("child {child:?} starts at level {child_top}, not below bottom level {bot}")]
    ChildOrder {
        child: NodeRef,
        child_top: Level,
        bot: Level,
    },

    #[error("node reference {0:?} is not live in this manager")]
    StaleNode(NodeRef),

    #[error("{op} takes {expected} argument(s), got {got}")]
    Arity {
        op: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("managers disagree: {left} with {left_n} variables vs {right} with {right_n} variables")]
    ManagerMismatch {
        left: DiagramKind,
        left_n: Level,
        right: DiagramKind,
        right_n: Level,
    },

    #[error("node limit of {0} live nodes exceeded")]
    NodeLimit(usize),

    #[error("truth-table oracle supports at most {max} variables, got {n}")]
    OracleTooLarge { n: usize, max: usize },

    #[error("invalid {what}: {value}")]
    InvalidParameter { what: &'static str, value: usize },
}

pub type Result<T> = std::result::Result<T, DdError>;
