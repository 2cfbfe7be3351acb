//! OEIS-style b-files: one `index value` pair per line.
//!
//! Reading skips `#` comment lines and blank lines and accepts LF or CRLF.
//! Writing always emits `index value\n` with no comments.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: expected \"index value\", got {content:?}")]
    Malformed { line: usize, content: String },

    #[error("line {line}: expected index {expected}, found {found}")]
    NonContiguous {
        line: usize,
        expected: i64,
        found: i64,
    },

    #[error("b-file contains no terms")]
    Empty,
}

/// Consecutive terms `a(offset), a(offset + 1), ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub offset: i64,
    pub values: Vec<BigInt>,
}

impl BFile {
    pub fn new(offset: i64, values: Vec<BigInt>) -> Self {
        Self { offset, values }
    }

    /// Index of the `i`-th stored term.
    pub fn index_of(&self, i: usize) -> i64 {
        self.offset + i as i64
    }

    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut offset = None;
        let mut values = Vec::new();
        for (i, raw) in text.split('\n').enumerate() {
            let line_no = i + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let malformed = || BFileError::Malformed {
                line: line_no,
                content: line.to_string(),
            };
            let (index, value) = line.split_once(' ').ok_or_else(malformed)?;
            let index: i64 = index.parse().map_err(|_| malformed())?;
            let value: BigInt = value.parse().map_err(|_| malformed())?;
            let start = *offset.get_or_insert(index);
            let expected = start + values.len() as i64;
            if index != expected {
                return Err(BFileError::NonContiguous {
                    line: line_no,
                    expected,
                    found: index,
                });
            }
            values.push(value);
        }
        match offset {
            Some(offset) => Ok(Self { offset, values }),
            None => Err(BFileError::Empty),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.values.iter().enumerate() {
            writeln!(out, "{} {v}", self.index_of(i)).expect("writing to a String");
        }
        out
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, BFileError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| BFileError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<(), BFileError> {
        let path = path.as_ref();
        fs::write(path, self.render()).map_err(|source| BFileError::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}
