use thiserror::Error;

use crate::ast::Pos;

/// Errors from parsing or evaluating a script, each with its source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{pos}: syntax error: found {found}, expected {}", expected.join(" or "))]
    Syntax {
        pos: Pos,
        found: String,
        expected: Vec<String>,
    },
    #[error("{pos}: unknown name `{name}`")]
    UnknownName { pos: Pos, name: String },
    #[error("{pos}: type mismatch: expected {expected}, found {found}")]
    TypeMismatch {
        pos: Pos,
        expected: String,
        found: String,
    },
    #[error("{pos}: `{name}` is already defined")]
    Redefinition { pos: Pos, name: String },
    #[error("{pos}: no element labeled `{label}` in a ring of order {order}")]
    UnknownElement { pos: Pos, label: String, order: usize },
    #[error("{pos}: {source}")]
    Eval {
        pos: Pos,
        source: amalgam_core::Error,
    },
}

impl DslError {
    pub fn pos(&self) -> Pos {
        match self {
            DslError::Syntax { pos, .. }
            | DslError::UnknownName { pos, .. }
            | DslError::TypeMismatch { pos, .. }
            | DslError::Redefinition { pos, .. }
            | DslError::UnknownElement { pos, .. }
            | DslError::Eval { pos, .. } => *pos,
        }
    }
}
