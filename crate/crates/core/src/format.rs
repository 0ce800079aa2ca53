//! Shared helpers for the line-oriented text formats.

use thiserror::Error;

/// A diagnostic tied to a 1-based line number (0 = whole file).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Non-empty records with `#` comments stripped, as (line number, fields).
pub(crate) fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

pub(crate) fn parse_u32(line: usize, field: &str) -> Result<u32, ParseError> {
    field
        .parse()
        .map_err(|_| ParseError::new(line, format!("`{field}` is not a nonnegative integer")))
}

pub(crate) fn parse_u64(line: usize, field: &str) -> Result<u64, ParseError> {
    field
        .parse()
        .map_err(|_| ParseError::new(line, format!("`{field}` is not a nonnegative integer")))
}

pub(crate) fn parse_usize(line: usize, field: &str) -> Result<usize, ParseError> {
    field
        .parse()
        .map_err(|_| ParseError::new(line, format!("`{field}` is not a nonnegative integer")))
}
