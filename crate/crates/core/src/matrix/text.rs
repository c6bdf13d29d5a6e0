//! Matrix text format.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! GF 7
//! 2 2
//! 2 0
//! 0 0
//! ```
//!
//! Line 1 is the domain tag (`Q`, `GF <p>`, `Zn <n>`, `Z`), line 2 the
//! shape, then one line of whitespace-separated literals per row.

use crate::scalar::{Domain, Scalar};

use super::{Matrix, MatrixError};

/// Largest dimension accepted from files.
pub const MAX_FILE_DIMENSION: usize = 64;

/// A parsed file whose literals have not yet been interpreted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMatrix {
    pub domain: Domain,
    pub rows: usize,
    pub cols: usize,
    pub literals: Vec<Vec<String>>,
    /// Source line of each row, for diagnostics.
    row_lines: Vec<usize>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Reads just the domain tag.
pub fn parse_header(text: &str) -> Result<Domain, MatrixError> {
    let (line, tag) = content_lines(text)
        .next()
        .ok_or(MatrixError::Parse { line: 0, message: "empty input".into() })?;
    Domain::parse_file_tag(tag).map_err(|e| MatrixError::Parse { line, message: e.to_string() })
}

impl RawMatrix {
    pub fn parse(text: &str) -> Result<Self, MatrixError> {
        if !text.is_ascii() {
            return Err(MatrixError::Parse { line: 0, message: "input is not ASCII".into() });
        }
        let domain = parse_header(text)?;
        let mut lines = content_lines(text).skip(1);
        let (dim_line, dims) = lines
            .next()
            .ok_or(MatrixError::Parse { line: 0, message: "missing dimension line".into() })?;
        let bad_dims = |message: String| MatrixError::Parse { line: dim_line, message };
        let parts: Vec<&str> = dims.split_whitespace().collect();
        let [r, c] = parts.as_slice() else {
            return Err(bad_dims(format!("expected `<rows> <cols>`, got {dims:?}")));
        };
        let rows: usize = r.parse().map_err(|_| bad_dims(format!("bad row count {r:?}")))?;
        let cols: usize = c.parse().map_err(|_| bad_dims(format!("bad column count {c:?}")))?;
        if rows == 0 || cols == 0 {
            return Err(bad_dims("dimensions must be positive".into()));
        }
        if rows > MAX_FILE_DIMENSION || cols > MAX_FILE_DIMENSION {
            return Err(bad_dims(format!("dimension exceeds {MAX_FILE_DIMENSION}")));
        }
        let mut literals = Vec::with_capacity(rows);
        let mut row_lines = Vec::with_capacity(rows);
        for (line, content) in lines.by_ref() {
            if literals.len() == rows {
                return Err(MatrixError::Parse { line, message: "unexpected extra row".into() });
            }
            let row: Vec<String> = content.split_whitespace().map(str::to_string).collect();
            if row.len() != cols {
                return Err(MatrixError::Parse {
                    line,
                    message: format!("expected {cols} entries, found {}", row.len()),
                });
            }
            literals.push(row);
            row_lines.push(line);
        }
        if literals.len() != rows {
            return Err(MatrixError::Parse {
                line: 0,
                message: format!("expected {rows} rows, found {}", literals.len()),
            });
        }
        Ok(RawMatrix { domain, rows, cols, literals, row_lines })
    }

    pub fn into_matrix<T: Scalar>(self) -> Result<Matrix<T>, MatrixError> {
        let domain = self.domain;
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for (row, line) in self.literals.iter().zip(&self.row_lines) {
            for lit in row {
                let v = T::parse_in(lit, &domain)
                    .map_err(|e| MatrixError::Parse { line: *line, message: e.to_string() })?;
                entries.push(v);
            }
        }
        Matrix::new(domain, self.rows, self.cols, entries)
    }
}
