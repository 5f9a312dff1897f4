//! Plain-text exchange format for complexes.
//!
//! One simplex per line as whitespace-separated vertex ids; `#` starts a
//! comment that runs to the end of the line; blank lines are skipped.
//! Lines list maximal simplices but any generating set works, since the
//! complex closes downward on build.

use thiserror::Error;

use crate::complex::VertexId;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("line {line}: cannot parse {token:?} as a vertex id")]
    Parse { line: usize, token: String },
    #[error("line {line}: repeated vertex {vertex} in one simplex")]
    DegenerateSimplex { line: usize, vertex: VertexId },
}

/// Parses the text format. Tuples come back sorted, in file order;
/// repeats across lines are fine. Line numbers in errors are 1-based.
pub fn parse_input(text: &str) -> Result<Vec<Vec<VertexId>>, InputError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut tuple = Vec::new();
        for token in body.split_whitespace() {
            let v: VertexId = token
                .parse()
                .map_err(|_| InputError::Parse { line, token: token.to_string() })?;
            tuple.push(v);
        }
        if tuple.is_empty() {
            continue;
        }
        tuple.sort_unstable();
        for pair in tuple.windows(2) {
            if pair[0] == pair[1] {
                return Err(InputError::DegenerateSimplex { line, vertex: pair[0] });
            }
        }
        out.push(tuple);
    }
    Ok(out)
}

/// Renders tuples in the same format, one simplex per line.
pub fn format_simplices(simplices: &[Vec<VertexId>]) -> String {
    let mut out = String::new();
    for tuple in simplices {
        let words: Vec<String> = tuple.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}
