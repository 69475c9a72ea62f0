//! Matrix documents: `{"n": 3, "A": [[...], ...], "q": [...]}`.
//!
//! Entries may be JSON integers, JSON decimals or strings holding an integer,
//! a decimal or a fraction `"p/q"`. Everything is converted exactly; decimals
//! keep their digits because JSON numbers are read as text. Documents are
//! written with every entry as a string.

use std::fs;
use std::path::Path;

use lcplab_core::numerics::{format_rational, parse_rational};
use lcplab_core::{Rational, RationalMatrix, RationalVector};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Content(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixDocument {
    pub a: RationalMatrix,
    pub q: Option<RationalVector>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    n: usize,
    #[serde(rename = "A", alias = "a")]
    a: Vec<Vec<Value>>,
    #[serde(default)]
    q: Option<Vec<Value>>,
}

#[derive(Serialize)]
struct OutDocument {
    n: usize,
    #[serde(rename = "A")]
    a: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<Vec<String>>,
}

fn entry(value: &Value, at: impl Fn() -> String) -> Result<Rational, DocumentError> {
    let text = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => {
            return Err(DocumentError::Content(format!(
                "{}: expected a number, found {other}",
                at()
            )))
        }
    };
    parse_rational(&text).map_err(|e| DocumentError::Content(format!("{}: {e}", at())))
}

impl MatrixDocument {
    pub fn new(a: RationalMatrix, q: Option<RationalVector>) -> Self {
        MatrixDocument { a, q }
    }

    pub fn n(&self) -> usize {
        self.a.dim()
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let n = raw.n;
        if n == 0 {
            return Err(DocumentError::Content("n must be at least 1".into()));
        }
        if raw.a.len() != n {
            return Err(DocumentError::Content(format!(
                "A has {} rows, expected n = {n}",
                raw.a.len()
            )));
        }
        let mut rows = Vec::with_capacity(n);
        for (i, row) in raw.a.iter().enumerate() {
            if row.len() != n {
                return Err(DocumentError::Content(format!(
                    "row {} of A has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, v)| entry(v, || format!("A[{}][{}]", i + 1, j + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
        let a = RationalMatrix::from_rows(rows).map_err(|e| DocumentError::Content(e.to_string()))?;
        let q = match raw.q {
            None => None,
            Some(q) if q.len() != n => {
                return Err(DocumentError::Content(format!(
                    "q has {} entries, expected n = {n}",
                    q.len()
                )));
            }
            Some(q) => Some(RationalVector(
                q.iter()
                    .enumerate()
                    .map(|(i, v)| entry(v, || format!("q[{}]", i + 1)))
                    .collect::<Result<_, _>>()?,
            )),
        };
        Ok(MatrixDocument { a, q })
    }

    pub fn read(path: &Path) -> Result<Self, DocumentError> {
        let text = fs::read_to_string(path).map_err(|source| DocumentError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        let out = OutDocument {
            n: self.n(),
            a: self.a.rows().map(|r| r.iter().map(format_rational).collect()).collect(),
            q: self.q.as_ref().map(|q| q.iter().map(format_rational).collect()),
        };
        let mut text = serde_json::to_string_pretty(&out).expect("strings always serialize");
        text.push('\n');
        text
    }

    pub fn write(&self, path: &Path) -> Result<(), DocumentError> {
        fs::write(path, self.to_json()).map_err(|source| DocumentError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcplab_core::numerics::{rat, ratio};

    #[test]
    fn mixed_notations_parse_exactly() {
        let d = MatrixDocument::parse(r#"{"n": 2, "A": [[0.5, "-3/6"], [2, "1e-2"]], "q": ["0.1", -4]}"#).unwrap();
        assert_eq!(d.a[(0, 0)], ratio(1, 2));
        assert_eq!(d.a[(0, 1)], ratio(-1, 2));
        assert_eq!(d.a[(1, 0)], rat(2));
        assert_eq!(d.a[(1, 1)], ratio(1, 100));
        assert_eq!(d.q.unwrap().0, vec![ratio(1, 10), rat(-4)]);
    }

    #[test]
    fn long_decimals_are_not_rounded() {
        let d = MatrixDocument::parse(r#"{"n": 1, "A": [[0.1000000000000000000001]]}"#).unwrap();
        assert_eq!(
            format_rational(&d.a[(0, 0)]),
            "1000000000000000000001/10000000000000000000000"
        );
    }

    #[test]
    fn round_trip() {
        let d = MatrixDocument::new(
            RationalMatrix::from_rows(vec![vec![ratio(1, 3), rat(-2)], vec![rat(0), ratio(-7, 5)]]).unwrap(),
            Some(RationalVector(vec![ratio(2, 9), rat(4)])),
        );
        assert_eq!(MatrixDocument::parse(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let err = MatrixDocument::parse("{\n  \"n\": 2,\n  \"A\": [[1, 2], [3 4]]\n}").unwrap_err();
        assert!(matches!(err, DocumentError::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn content_errors() {
        for text in [
            r#"{"n": 2, "A": [[1, 2]]}"#,
            r#"{"n": 2, "A": [[1, 2], [3]]}"#,
            r#"{"n": 1, "A": [["1/0"]]}"#,
            r#"{"n": 1, "A": [[true]]}"#,
            r#"{"n": 1, "A": [[1]], "q": [1, 2]}"#,
            r#"{"n": 0, "A": []}"#,
        ] {
            assert!(
                matches!(MatrixDocument::parse(text), Err(DocumentError::Content(_))),
                "{text}"
            );
        }
    }
}
