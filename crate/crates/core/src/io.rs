//! Complex vector files: JSON (`[[re, im], …]`) or CSV (`re,im` header).
//!
//! Numbers are written in shortest round-trip form, so parse → write → parse
//! reproduces every `f64` exactly.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::numerics::ComplexScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl Format {
    /// `.csv` means CSV; anything else is read as JSON.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => Format::Csv,
            _ => Format::Json,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected json or csv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON vector: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid CSV vector: {0}")]
    Csv(#[from] csv::Error),
    #[error("CSV header must be `re,im`, found `{0}`")]
    Header(String),
    #[error("row {row}: expected 2 fields, found {found}")]
    Width { row: usize, found: usize },
    #[error("row {row}: `{text}` is not a number")]
    Number { row: usize, text: String },
    #[error("row {row}: value is not finite")]
    NonFinite { row: usize },
}

pub fn parse(text: &str, format: Format) -> Result<Vec<ComplexScalar>, ParseError> {
    let pairs: Vec<[f64; 2]> = match format {
        Format::Json => serde_json::from_str(text)?,
        Format::Csv => parse_csv(text)?,
    };
    pairs
        .into_iter()
        .enumerate()
        .map(|(row, [re, im])| {
            if re.is_finite() && im.is_finite() {
                Ok(ComplexScalar::new(re, im))
            } else {
                Err(ParseError::NonFinite { row })
            }
        })
        .collect()
}

fn parse_csv(text: &str) -> Result<Vec<[f64; 2]>, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let header = reader.headers()?.clone();
    if header.len() != 2 || &header[0] != "re" || &header[1] != "im" {
        return Err(ParseError::Header(
            header.iter().collect::<Vec<_>>().join(","),
        ));
    }
    let mut out = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record?;
        if record.len() != 2 {
            return Err(ParseError::Width {
                row,
                found: record.len(),
            });
        }
        let num = |s: &str| {
            s.parse::<f64>().map_err(|_| ParseError::Number {
                row,
                text: s.to_string(),
            })
        };
        out.push([num(&record[0])?, num(&record[1])?]);
    }
    Ok(out)
}

pub fn serialize(values: &[ComplexScalar], format: Format) -> String {
    match format {
        Format::Json => {
            let pairs: Vec<[f64; 2]> = values.iter().map(|z| [z.re, z.im]).collect();
            let mut s = serde_json::to_string(&pairs).expect("finite values serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("re,im\n");
            for z in values {
                // Debug formatting is shortest round-trip and switches to
                // exponent notation for very large or small magnitudes.
                s.push_str(&format!("{:?},{:?}\n", z.re, z.im));
            }
            s
        }
    }
}
