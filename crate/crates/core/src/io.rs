//! Vector and matrix files.
//!
//! Vectors are CSV (`re,im` per line, a single column is read as real) or
//! JSON (`[[re, im], ...]`), chosen by file extension. Matrix files are JSON
//! arrays of rows, each row an array of `[re, im]` pairs. Written numbers use
//! shortest round-trip formatting, so a write/read cycle is exact.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::base::BaseMatrix;
use crate::error::GttError;
use crate::vector::ComplexVector;
use crate::Complex;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Gtt(#[from] GttError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorFormat {
    Csv,
    Json,
}

impl VectorFormat {
    /// `.json` selects JSON; anything else is CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Self::Json,
            _ => Self::Csv,
        }
    }
}

fn parse_number(field: &str, line: usize) -> Result<f64, FileError> {
    field.trim().parse::<f64>().map_err(|e| FileError::Parse {
        line,
        msg: format!("{:?}: {e}", field.trim()),
    })
}

/// Blank lines and lines starting with `#` are skipped.
pub fn parse_csv(text: &str) -> Result<Vec<Complex>, FileError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let z = match fields.as_slice() {
            [re] => Complex::new(parse_number(re, i + 1)?, 0.0),
            [re, im] => Complex::new(parse_number(re, i + 1)?, parse_number(im, i + 1)?),
            _ => {
                return Err(FileError::Parse {
                    line: i + 1,
                    msg: format!("expected 1 or 2 fields, found {}", fields.len()),
                })
            }
        };
        out.push(z);
    }
    Ok(out)
}

pub fn format_csv(data: &[Complex]) -> String {
    data.iter().map(|z| format!("{:?},{:?}\n", z.re, z.im)).collect()
}

pub fn parse_json(text: &str) -> Result<Vec<Complex>, FileError> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(text)?;
    Ok(pairs.into_iter().map(|[re, im]| Complex::new(re, im)).collect())
}

pub fn to_pairs(data: &[Complex]) -> Vec<[f64; 2]> {
    data.iter().map(|z| [z.re, z.im]).collect()
}

pub fn format_json(data: &[Complex]) -> String {
    let mut s = serde_json::to_string(&to_pairs(data)).expect("pairs serialize");
    s.push('\n');
    s
}

pub fn format_vector(data: &[Complex], format: VectorFormat) -> String {
    match format {
        VectorFormat::Csv => format_csv(data),
        VectorFormat::Json => format_json(data),
    }
}

pub fn parse_vector(text: &str, format: VectorFormat) -> Result<ComplexVector, FileError> {
    let data = match format {
        VectorFormat::Csv => parse_csv(text)?,
        VectorFormat::Json => parse_json(text)?,
    };
    Ok(ComplexVector::new(data)?)
}

fn read_text(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_vector(path: &Path) -> Result<ComplexVector, FileError> {
    parse_vector(&read_text(path)?, VectorFormat::from_path(path))
}

pub fn write_vector(path: &Path, data: &[Complex]) -> Result<(), FileError> {
    write_text(path, &format_vector(data, VectorFormat::from_path(path)))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), FileError> {
    fs::write(path, text).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse_matrix(text: &str) -> Result<BaseMatrix, FileError> {
    let rows: Vec<Vec<[f64; 2]>> = serde_json::from_str(text)?;
    let rows: Vec<Vec<Complex>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|[re, im]| Complex::new(re, im)).collect())
        .collect();
    Ok(BaseMatrix::from_rows(&rows)?)
}

pub fn read_matrix(path: &Path) -> Result<BaseMatrix, FileError> {
    parse_matrix(&read_text(path)?)
}

pub fn format_matrix(m: &BaseMatrix) -> String {
    let rows: Vec<Vec<[f64; 2]>> = m.rows().iter().map(|r| to_pairs(r)).collect();
    serde_json::to_string(&rows).expect("rows serialize")
}
