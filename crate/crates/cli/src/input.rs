//! Input parsing: a JSON document `{"matrix": [[…]], "label": …, "beta": …,
//! "seed": …}` or a plain whitespace/comma-separated integer grid.

use gkzcheck_core::intlin::IntegerMatrix;
use gkzcheck_core::poly::text::{parse_rational, render_rational};
use gkzcheck_core::{Error, Rational};
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixInput {
    pub matrix: Vec<Vec<i64>>,
    pub label: Option<String>,
    pub beta: Option<Vec<Rational>>,
    pub seed: Option<u64>,
}

#[derive(Deserialize)]
struct JsonDoc {
    matrix: Vec<Vec<i64>>,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    beta: Option<Vec<serde_json::Value>>,
    #[serde(default)]
    seed: Option<u64>,
}

pub fn parse_input(text: &str) -> Result<MatrixInput, Error> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_json(text)
    } else {
        parse_grid(text)
    }
}

fn parse_json(text: &str) -> Result<MatrixInput, Error> {
    let doc: JsonDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let beta = match doc.beta {
        None => None,
        Some(values) => {
            let mut out = Vec::with_capacity(values.len());
            for v in values {
                let r = match &v {
                    serde_json::Value::Number(n) if n.is_i64() => {
                        Rational::from_integer(n.as_i64().unwrap().into())
                    }
                    serde_json::Value::String(s) => parse_rational(s)?,
                    other => {
                        return Err(Error::Parse {
                            line: 1,
                            column: 1,
                            message: format!(
                                "beta entries must be integers or rational strings, got {other}"
                            ),
                        })
                    }
                };
                out.push(r);
            }
            Some(out)
        }
    };
    let input = MatrixInput {
        matrix: doc.matrix,
        label: doc.label,
        beta,
        seed: doc.seed,
    };
    input.validate()?;
    Ok(input)
}

fn parse_grid(text: &str) -> Result<MatrixInput, Error> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let stripped = line.trim();
        if stripped.is_empty() || stripped.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        let mut column = 1usize;
        for token in stripped.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                column += 1;
                continue;
            }
            let value: i64 = token.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                column: line.find(token).map(|o| o + 1).unwrap_or(column),
                message: format!("expected an integer, got {token:?}"),
            })?;
            row.push(value);
            column += token.len() + 1;
        }
        rows.push(row);
    }
    let input = MatrixInput {
        matrix: rows,
        label: None,
        beta: None,
        seed: None,
    };
    input.validate()?;
    Ok(input)
}

impl MatrixInput {
    pub fn validate(&self) -> Result<(), Error> {
        if self.matrix.is_empty() || self.matrix[0].is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols = self.matrix[0].len();
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedMatrix {
                    row: i + 1,
                    found: row.len(),
                    expected: cols,
                });
            }
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> Result<IntegerMatrix, Error> {
        IntegerMatrix::from_rows(&self.matrix)
    }

    /// Canonical JSON rendering; `parse_input` round-trips it.
    #[allow(dead_code)] // exercised by the round-trip tests
    pub fn to_json_document(&self) -> String {
        let mut doc = serde_json::Map::new();
        doc.insert(
            "matrix".to_string(),
            serde_json::to_value(&self.matrix).expect("matrix serializes"),
        );
        if let Some(label) = &self.label {
            doc.insert("label".to_string(), serde_json::Value::String(label.clone()));
        }
        if let Some(beta) = &self.beta {
            doc.insert(
                "beta".to_string(),
                serde_json::Value::Array(
                    beta.iter()
                        .map(|r| serde_json::Value::String(render_rational(r)))
                        .collect(),
                ),
            );
        }
        if let Some(seed) = self.seed {
            doc.insert("seed".to_string(), serde_json::Value::Number(seed.into()));
        }
        serde_json::to_string_pretty(&serde_json::Value::Object(doc)).expect("document serializes")
    }
}

pub fn parse_beta_flag(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',')
        .map(|part| parse_rational(part.trim()))
        .collect()
}
