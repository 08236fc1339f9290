//! The line-oriented session language.

mod ast;
mod lexer;
mod parser;

use thiserror::Error;

pub use ast::{CheckKind, Expr, Located, Pos, Session, Statement, Stmt};
pub use parser::{parse, parse_expr, CORPUS_FAMILIES};

use crate::env::Env;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    ParseError {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: undefined {kind} `{name}`")]
    UndefinedName {
        line: usize,
        column: usize,
        kind: String,
        name: String,
    },
    #[error("{line}:{column}: homogeneity violation: {detail}")]
    HomogeneityViolation { line: usize, column: usize, detail: String },
    #[error("{line}:{column}: {detail}")]
    Invalid { line: usize, column: usize, detail: String },
}

impl SessionError {
    pub fn undefined(pos: Pos, kind: &str, name: &str) -> Self {
        SessionError::UndefinedName {
            line: pos.line,
            column: pos.column,
            kind: kind.into(),
            name: name.into(),
        }
    }

    pub fn invalid(pos: Pos, detail: impl Into<String>) -> Self {
        SessionError::Invalid {
            line: pos.line,
            column: pos.column,
            detail: detail.into(),
        }
    }

    pub fn homogeneity(pos: Pos, detail: impl Into<String>) -> Self {
        SessionError::HomogeneityViolation {
            line: pos.line,
            column: pos.column,
            detail: detail.into(),
        }
    }
}

/// Parses the text and checks that every name is declared before use and
/// every polynomial is homogeneous.
pub fn parse_session(text: &str) -> Result<Session, SessionError> {
    let s = parse(text)?;
    Env::build(&s)?;
    Ok(s)
}
