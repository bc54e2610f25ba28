//! A small language for defining finite rings, ideals, homomorphisms and
//! amalgamations and for requesting checks on them, plus the instance
//! catalog and report output used by the `amalgam` binary.
//!
//! ```
//! use amalgam_cli::{evaluate, parse};
//!
//! let script = parse("ring A = zmod(4); ideal I = gen(A; 2); check reduced_criterion(dup(A, I));").unwrap();
//! let reports = evaluate(&script).unwrap();
//! assert_eq!(reports[0].fact("A⋈^f J reduced"), Some("false"));
//! assert!(reports[0].passed());
//! ```

pub mod ast;
pub mod catalog;
mod error;
mod eval;
pub mod explain;
mod lexer;
pub mod output;
mod parser;
pub mod render;
pub mod sig;

pub use ast::Script;
pub use catalog::generate_catalog;
pub use error::DslError;
pub use eval::evaluate;
pub use parser::parse;
pub use render::render_script;
