//! Expression language for algebra elements.
//!
//! Precedence from tightest to loosest: `^` (integer exponent on an atom),
//! unary `-`, `*` and `/`, `@` (tensor product, `⊗` accepted), binary `+`
//! and `-`.

mod ast;
mod eval;
mod lexer;
mod parser;

pub use ast::Expr;
pub use eval::{EvalError, Evaluator, Value};
pub use lexer::{tokenize, Span, Token, TokenKind};
pub use parser::parse;

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub len: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub(crate) fn lexical(span: Span, message: String) -> Self {
        ParseError { line: span.line, column: span.column, len: span.len, message, expected: Vec::new() }
    }

    pub(crate) fn syntax(span: Span, found: String, expected: &[&str]) -> Self {
        ParseError {
            line: span.line,
            column: span.column,
            len: span.len,
            message: format!("unexpected {found}"),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Multi-line rendering with the offending line and a caret marker.
    pub fn render(&self, source: &str) -> String {
        let text = source.lines().nth(self.line - 1).unwrap_or("");
        let marker = format!("{}{}", " ".repeat(self.column - 1), "^".repeat(self.len.max(1)));
        format!("{self}\n  {text}\n  {marker}")
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}
