//! Reduced ordered BDDs, ZDDs and their chain-reduced forms (CBDDs and
//! CZDDs) behind one manager type.
//!
//! A [`Manager`] is created for one [`DiagramKind`] and a fixed number of
//! variables. Nodes carry a level pair `<top,bot>`; for the unchained kinds
//! the two levels always coincide. Boolean operations go through
//! [`Manager::apply`], whose split/cofactor/combine steps handle all four
//! kinds.
//!
//! ```
//! use chaindd::{DiagramKind, Manager};
//!
//! let mut m = Manager::new(DiagramKind::Czdd, 4000).unwrap();
//! let x = m.var(2000).unwrap();
//! assert_eq!(m.node_count(x).unwrap(), 4);
//! ```

mod analysis;
mod apply;
mod cache;
mod convert;
mod error;
mod expr;
mod kind;
mod manager;
mod node;
mod oracle;
mod worst_case;

pub use analysis::Minterm;
pub use apply::{BoolOp, SplitContext};
pub use convert::convert;
pub use error::{DdError, Result};
pub use expr::Expr;
pub use kind::DiagramKind;
pub use manager::{Manager, Stats};
pub use node::{Level, Node, NodeRef, MAX_VARIABLES};
pub use oracle::{TruthOracle, MAX_ORACLE_VARIABLES};
pub use worst_case::{
    gen_worst_case_bdd_vs_czdd, gen_worst_case_zdd_vs_cbdd, Child, Family, FamilyNode, WorstCase,
};
