//! Input file formats.
//!
//! PLAIN is the line format common to published polytope lists: comment
//! lines start with `#`, then a header `rows cols` followed by that many
//! rows of integers. Rows are vertices by default; with the transpose
//! flag the columns are the vertices, which matches distributions that
//! print one coordinate per line. Several records may follow each other
//! in one file, and a comment line directly above a header names the
//! record.
//!
//! STRUCTURED is JSON: one record object with fields `name`, `dim`,
//! `vertices`, or an array of such objects.

use std::fmt;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::record::PolytopeRecord;

/// Input format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Plain,
    Structured,
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputFormat::Plain => write!(f, "plain"),
            InputFormat::Structured => write!(f, "structured"),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}:{line}: malformed header, expected two counts `rows cols`")]
    MalformedHeader { path: String, line: usize },

    #[error("{path}:{line}: row has {got} entries, expected {expected}")]
    RaggedRow {
        path: String,
        line: usize,
        expected: usize,
        got: usize,
    },

    #[error("{path}:{line}: non-integer entry {token:?}")]
    NonIntegerEntry {
        path: String,
        line: usize,
        token: String,
    },

    #[error("{path}:{line}: integer entry out of supported range")]
    IntegerOutOfRange { path: String, line: usize },

    #[error("{path}: {message}")]
    Structured { path: String, message: String },

    #[error("unknown fixture {id:?}; run `tauric fixtures` for the list")]
    UnknownFixture { id: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Reads and parses one input file.
pub fn parse_polytope_file(
    path: &Path,
    format: InputFormat,
    transpose: bool,
) -> Result<Vec<PolytopeRecord>, ParseError> {
    let label = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: label.clone(),
        source,
    })?;
    match format {
        InputFormat::Plain => parse_plain(&text, &label, transpose),
        InputFormat::Structured => parse_structured(&text, &label),
    }
}

/// Parses the PLAIN line format. Line numbers in errors are 1-based.
pub fn parse_plain(
    text: &str,
    path: &str,
    transpose: bool,
) -> Result<Vec<PolytopeRecord>, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut records = Vec::new();
    let mut pending_name: Option<String> = None;
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i].trim();
        if line.is_empty() {
            pending_name = None;
            i += 1;
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            pending_name = Some(comment.trim().to_string()).filter(|s| !s.is_empty());
            i += 1;
            continue;
        }

        let header_line = i + 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::MalformedHeader {
                path: path.to_string(),
                line: header_line,
            });
        }
        let rows: usize = tokens[0].parse().map_err(|_| ParseError::MalformedHeader {
            path: path.to_string(),
            line: header_line,
        })?;
        let cols: usize = tokens[1].parse().map_err(|_| ParseError::MalformedHeader {
            path: path.to_string(),
            line: header_line,
        })?;
        if rows == 0 || cols == 0 {
            return Err(ParseError::MalformedHeader {
                path: path.to_string(),
                line: header_line,
            });
        }
        i += 1;

        let mut matrix: Vec<Vec<i64>> = Vec::with_capacity(rows);
        while matrix.len() < rows {
            if i >= lines.len() {
                return Err(ParseError::RaggedRow {
                    path: path.to_string(),
                    line: lines.len(),
                    expected: cols,
                    got: 0,
                });
            }
            let row_line = i + 1;
            let raw = lines[i].trim();
            i += 1;
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = raw.split_whitespace().collect();
            if tokens.len() != cols {
                return Err(ParseError::RaggedRow {
                    path: path.to_string(),
                    line: row_line,
                    expected: cols,
                    got: tokens.len(),
                });
            }
            let mut row = Vec::with_capacity(cols);
            for token in tokens {
                if !looks_like_integer(token) {
                    return Err(ParseError::NonIntegerEntry {
                        path: path.to_string(),
                        line: row_line,
                        token: token.to_string(),
                    });
                }
                let value: i64 = token.parse().map_err(|_| ParseError::IntegerOutOfRange {
                    path: path.to_string(),
                    line: row_line,
                })?;
                row.push(value);
            }
            matrix.push(row);
        }

        let vertices: Vec<Vec<i64>> = if transpose {
            (0..cols)
                .map(|c| (0..rows).map(|r| matrix[r][c]).collect())
                .collect()
        } else {
            matrix
        };
        let dim = if transpose { rows } else { cols };
        let name = pending_name
            .take()
            .unwrap_or_else(|| format!("poly{}", records.len() + 1));
        records.push(PolytopeRecord {
            name,
            dim,
            vertices,
            source: path.to_string(),
        });
    }
    Ok(records)
}

fn looks_like_integer(token: &str) -> bool {
    let body = token.strip_prefix(['-', '+']).unwrap_or(token);
    !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(PolytopeRecord),
    Many(Vec<PolytopeRecord>),
}

/// Parses the STRUCTURED (JSON) format.
pub fn parse_structured(text: &str, path: &str) -> Result<Vec<PolytopeRecord>, ParseError> {
    let parsed: OneOrMany = serde_json::from_str(text).map_err(|e| ParseError::Structured {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    let mut records = match parsed {
        OneOrMany::One(r) => vec![r],
        OneOrMany::Many(rs) => rs,
    };
    for record in &mut records {
        record.source = path.to_string();
        for row in &record.vertices {
            if row.len() != record.dim {
                return Err(ParseError::Structured {
                    path: path.to_string(),
                    message: format!(
                        "record {:?}: vertex row has {} entries, dim is {}",
                        record.name,
                        row.len(),
                        record.dim
                    ),
                });
            }
        }
    }
    Ok(records)
}

/// Writes records back out in the PLAIN format, rows as vertices.
pub fn serialize_plain(records: &[PolytopeRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&format!("# {}\n", record.name));
        out.push_str(&format!("{} {}\n", record.vertices.len(), record.dim));
        for row in &record.vertices {
            let line = row
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&line);
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

/// Writes records in the STRUCTURED (JSON) format.
pub fn serialize_structured(records: &[PolytopeRecord]) -> String {
    let mut out = serde_json::to_string_pretty(records).expect("records serialize");
    out.push('\n');
    out
}
