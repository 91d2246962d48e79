//! Matrix files: headerless CSV or `{"rows", "cols", "entries", "col_support"}` JSON.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::NonNegMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// By extension, falling back to sniffing for a leading `{`.
    pub fn detect(path: &Path, contents: &str) -> Format {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            _ if contents.trim_start().starts_with('{') => Format::Json,
            _ => Format::Csv,
        }
    }

    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => Format::Csv,
            _ => Format::Json,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    col_support: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

pub fn parse_matrix(contents: &str, format: Format) -> Result<NonNegMatrix, String> {
    match format {
        Format::Json => {
            let m: MatrixJson = serde_json::from_str(contents).map_err(|e| e.to_string())?;
            if m.entries.len() != m.rows {
                return Err(Error::ShapeMismatch {
                    rows: m.rows,
                    cols: m.cols,
                    expected: m.rows,
                    got: m.entries.len(),
                }
                .to_string());
            }
            if let Some((row, r)) = m
                .entries
                .iter()
                .enumerate()
                .find(|(_, r)| r.len() != m.cols)
            {
                return Err(Error::RaggedRow {
                    row,
                    expected: m.cols,
                    got: r.len(),
                }
                .to_string());
            }
            let a = NonNegMatrix::from_rows(&m.entries).map_err(|e| e.to_string())?;
            match m.col_support {
                Some(k0) => a.with_col_support(k0).map_err(|e| e.to_string()),
                None => Ok(a),
            }
        }
        Format::Csv => {
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(false)
                .flexible(true)
                .trim(csv::Trim::All)
                .from_reader(contents.as_bytes());
            let mut rows: Vec<Vec<f64>> = Vec::new();
            for (j, record) in reader.records().enumerate() {
                let record = record.map_err(|e| e.to_string())?;
                let row = record
                    .iter()
                    .enumerate()
                    .map(|(k, field)| {
                        field.parse::<f64>().map_err(|_| {
                            format!("row {}, column {}: `{field}` is not a number", j + 1, k + 1)
                        })
                    })
                    .collect::<Result<Vec<f64>, String>>()?;
                rows.push(row);
            }
            NonNegMatrix::from_rows(&rows).map_err(|e| e.to_string())
        }
    }
}

pub fn read_matrix(path: &Path) -> Result<NonNegMatrix, IoError> {
    let contents = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_matrix(&contents, Format::detect(path, &contents)).map_err(|message| IoError::Parse {
        path: path.display().to_string(),
        message,
    })
}

pub fn render_matrix(a: &NonNegMatrix, format: Format) -> String {
    match format {
        Format::Json => {
            let m = MatrixJson {
                rows: a.rows(),
                cols: a.cols(),
                entries: a.to_rows(),
                col_support: a.col_support(),
            };
            let mut s = serde_json::to_string(&m).expect("finite entries serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            for row in a.row_iter() {
                w.write_record(row.iter().map(|v| v.to_string()))
                    .expect("writing to memory");
            }
            String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 digits")
        }
    }
}

pub fn write_matrix(path: &Path, a: &NonNegMatrix) -> Result<(), IoError> {
    fs::write(path, render_matrix(a, Format::from_path(path))).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}
