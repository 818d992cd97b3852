//! The `.mat` matrix format and the moduli file.
//!
//! A `.mat` file holds the row and column counts followed by the entries in
//! row-major order, all separated by arbitrary whitespace. A moduli file holds
//! a count `h` followed by `h` positive integers.

use std::str::FromStr;

use num_bigint::BigInt;
use semidec::IntMatrix;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: malformed header: {message}")]
    Header {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}, column {column}: expected an integer, found `{token}`")]
    NotAnInteger {
        line: usize,
        column: usize,
        token: String,
    },

    #[error("line {line}, column {column}: expected {expected} entries, found {found}")]
    Count {
        line: usize,
        column: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}, column {column}: modulus must be positive, found {value}")]
    NonPositiveModulus {
        line: usize,
        column: usize,
        value: String,
    },
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            out.push(Token {
                text: &tail[..len],
                line: i + 1,
                column: line[..offset + start].chars().count() + 1,
            });
            offset += start + len;
            rest = &tail[len..];
        }
    }
    out
}

/// Position just past the last token, for errors about missing input.
fn end_of(text: &str) -> (usize, usize) {
    let line = text.lines().count().max(1);
    let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn integer(t: &Token<'_>) -> Result<BigInt, ParseError> {
    BigInt::from_str(t.text).map_err(|_| ParseError::NotAnInteger {
        line: t.line,
        column: t.column,
        token: t.text.to_string(),
    })
}

fn dimension(t: Option<&Token<'_>>, what: &str, text: &str) -> Result<usize, ParseError> {
    let Some(t) = t else {
        let (line, column) = end_of(text);
        return Err(ParseError::Header {
            line,
            column,
            message: format!("missing {what}"),
        });
    };
    t.text.parse().map_err(|_| ParseError::Header {
        line: t.line,
        column: t.column,
        message: format!("{what} must be a nonnegative integer, found `{}`", t.text),
    })
}

/// Parses the contents of a `.mat` file.
pub fn parse_mat(text: &str) -> Result<IntMatrix, ParseError> {
    let toks = tokens(text);
    let rows = dimension(toks.first(), "row count", text)?;
    let cols = dimension(toks.get(1), "column count", text)?;
    let expected = rows * cols;
    let entries = &toks[2..];
    if entries.len() != expected {
        let (line, column) = match entries.get(expected) {
            Some(t) => (t.line, t.column),
            None => end_of(text),
        };
        return Err(ParseError::Count {
            line,
            column,
            expected,
            found: entries.len(),
        });
    }
    let data = entries.iter().map(integer).collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::from_vec(rows, cols, data).expect("entry count checked"))
}

/// Parses a moduli file.
pub fn parse_moduli(text: &str) -> Result<Vec<BigInt>, ParseError> {
    let toks = tokens(text);
    let h = dimension(toks.first(), "modulus count", text)?;
    let entries = toks.get(1..).unwrap_or_default();
    if entries.len() != h {
        let (line, column) = match entries.get(h) {
            Some(t) => (t.line, t.column),
            None => end_of(text),
        };
        return Err(ParseError::Count {
            line,
            column,
            expected: h,
            found: entries.len(),
        });
    }
    entries
        .iter()
        .map(|t| {
            let c = integer(t)?;
            if c <= BigInt::from(0) {
                return Err(ParseError::NonPositiveModulus {
                    line: t.line,
                    column: t.column,
                    value: c.to_string(),
                });
            }
            Ok(c)
        })
        .collect()
}

/// Renders a matrix in `.mat` format.
pub fn format_mat(m: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
