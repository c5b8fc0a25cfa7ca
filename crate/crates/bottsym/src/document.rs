//! Matrix text format.
//!
//! One row per line, `0`/`1` entries separated by whitespace; `#` starts a
//! comment and blank lines are ignored. A row may also be written packed
//! (`0110`). The inline form separates rows with `;` (`"0110;0011;0000;0000"`).

use bottsym_core::BottMatrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("no matrix rows found")]
    Empty,
    #[error("line {line}: unexpected token {token:?}, expected 0 or 1")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix has {rows} rows but {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("line {line}: entry in column {col} is on or below the diagonal but nonzero")]
    NotStrictlyUpper { line: usize, col: usize },
    #[error(transparent)]
    Matrix(#[from] bottsym_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDocument {
    pub source: String,
    pub matrix: BottMatrix,
}

impl MatrixDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let rows = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
            .filter(|(_, line)| !line.is_empty());
        Self::from_rows(text, rows)
    }

    /// Rows separated by `;`, as accepted by `--matrix`.
    pub fn parse_inline(text: &str) -> Result<Self, ParseError> {
        let rows = text
            .split(';')
            .enumerate()
            .map(|(i, row)| (i + 1, row.trim()))
            .filter(|(_, row)| !row.is_empty());
        Self::from_rows(text, rows)
    }

    fn from_rows<'a>(
        source: &str,
        rows: impl Iterator<Item = (usize, &'a str)>,
    ) -> Result<Self, ParseError> {
        let mut parsed: Vec<(usize, Vec<u8>)> = Vec::new();
        for (line, row) in rows {
            let tokens: Vec<&str> = row.split_whitespace().collect();
            let entries: Vec<&str> = if tokens.len() == 1 && tokens[0].len() > 1 {
                // packed row like 0110
                tokens[0].split("").filter(|s| !s.is_empty()).collect()
            } else {
                tokens
            };
            let values = entries
                .iter()
                .map(|t| match *t {
                    "0" => Ok(0u8),
                    "1" => Ok(1u8),
                    other => Err(ParseError::BadToken {
                        line,
                        token: other.to_string(),
                    }),
                })
                .collect::<Result<Vec<u8>, _>>()?;
            if let Some((_, first)) = parsed.first() {
                if values.len() != first.len() {
                    return Err(ParseError::RaggedRow {
                        line,
                        expected: first.len(),
                        found: values.len(),
                    });
                }
            }
            parsed.push((line, values));
        }
        let Some((_, first)) = parsed.first() else {
            return Err(ParseError::Empty);
        };
        if parsed.len() != first.len() {
            return Err(ParseError::NotSquare {
                rows: parsed.len(),
                cols: first.len(),
            });
        }
        for (i, (line, values)) in parsed.iter().enumerate() {
            if let Some(col) = values.iter().take(i + 1).position(|&v| v != 0) {
                return Err(ParseError::NotStrictlyUpper {
                    line: *line,
                    col: col + 1,
                });
            }
        }
        let rows: Vec<Vec<u8>> = parsed.into_iter().map(|(_, v)| v).collect();
        Ok(Self {
            source: source.to_string(),
            matrix: BottMatrix::from_rows(&rows)?,
        })
    }
}

/// `"0110;0011;0000;0000"`.
pub fn to_inline(a: &BottMatrix) -> String {
    a.rows()
        .map(|row| row.iter().map(|v| char::from(b'0' + v)).collect::<String>())
        .collect::<Vec<_>>()
        .join(";")
}

/// The file format: space-separated rows, newline-terminated.
pub fn to_text(a: &BottMatrix) -> String {
    format!("{a}\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_with_comments() {
        let doc = MatrixDocument::parse("# Klein bottle\n0 1\n\n0 0  # last row\n").unwrap();
        assert_eq!(
            doc.matrix,
            BottMatrix::from_rows(&[[0, 1], [0, 0]]).unwrap()
        );
    }

    #[test]
    fn parses_inline_and_packed() {
        let a = MatrixDocument::parse_inline("0110;0011;0000;0000")
            .unwrap()
            .matrix;
        let b = MatrixDocument::parse("0 1 1 0\n0 0 1 1\n0 0 0 0\n0 0 0 0")
            .unwrap()
            .matrix;
        assert_eq!(a, b);
        assert_eq!(to_inline(&a), "0110;0011;0000;0000");
        assert_eq!(MatrixDocument::parse(&to_text(&a)).unwrap().matrix, a);
        assert_eq!(MatrixDocument::parse_inline("0").unwrap().matrix.size(), 1);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(MatrixDocument::parse("# nothing\n"), Err(ParseError::Empty));
        assert!(matches!(
            MatrixDocument::parse("0 2\n0 0"),
            Err(ParseError::BadToken { line: 1, .. })
        ));
        assert!(matches!(
            MatrixDocument::parse("0 1\n0"),
            Err(ParseError::RaggedRow {
                line: 2,
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            MatrixDocument::parse("0 1 1\n0 0 1"),
            Err(ParseError::NotSquare { rows: 2, cols: 3 })
        ));
        assert_eq!(
            MatrixDocument::parse("0 1\n1 0"),
            Err(ParseError::NotStrictlyUpper { line: 2, col: 1 })
        );
        assert_eq!(
            MatrixDocument::parse("1 0\n0 0"),
            Err(ParseError::NotStrictlyUpper { line: 1, col: 1 })
        );
    }
}
