//! Calculator front end: expression language, evaluator and SVG rendering
//! for braided Thompson group elements.

pub mod eval;
pub mod parser;
pub mod svg;

use std::fmt;

/// Front-end errors. Syntax errors carry the byte offset of the offending
/// token; domain errors come from the group arithmetic layer.
#[derive(Debug)]
pub enum CliError {
    Syntax { pos: usize, msg: String },
    Domain(braidthom_core::Error),
    Unbound(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Syntax { pos, msg } => write!(f, "syntax error at offset {pos}: {msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Unbound(name) => write!(f, "unbound variable `{name}`"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<braidthom_core::Error> for CliError {
    fn from(e: braidthom_core::Error) -> CliError {
        CliError::Domain(e)
    }
}

impl CliError {
    /// Process exit code: 2 for syntax errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax { .. } => 2,
            _ => 1,
        }
    }

    /// Render with line/column resolved against the source text.
    pub fn display_in(&self, src: &str) -> String {
        match self {
            CliError::Syntax { pos, msg } => {
                let (line, col) = parser::line_col(src, *pos);
                format!("syntax error at line {line}, column {col}: {msg}")
            }
            other => other.to_string(),
        }
    }
}
