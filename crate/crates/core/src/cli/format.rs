//! Output formats and the JSON value schema.
//!
//! Every JSON value record has the shape
//!
//! ```text
//! {"family": "GM", "n": 0, "k": 1, "value": {"re": "0", "im": "-1", "exp2": 1}}
//! ```
//!
//! Polynomials carry `{"coeffs": [...]}` instead, lowest degree first, each
//! coefficient in the scalar shape. Big integers are decimal strings.

use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{GaussianDyadic, GaussianPolynomial};
use crate::sequences::{FamilyTag, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Plain,
}

/// `(re + im·i) / 2^exp2` with decimal-string parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonScalar {
    pub re: String,
    pub im: String,
    pub exp2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonValue {
    Scalar(JsonScalar),
    Poly { coeffs: Vec<JsonScalar> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRecord {
    pub family: String,
    pub n: u64,
    pub k: u64,
    pub value: JsonValue,
    /// Only present on table cells whose reference value is a known misprint.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub misprint: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("unknown family: {0}")]
    Family(String),
    #[error("not a decimal integer: {0:?}")]
    Integer(String),
    #[error("value shape does not match family {0}")]
    Shape(FamilyTag),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<&GaussianDyadic> for JsonScalar {
    fn from(g: &GaussianDyadic) -> Self {
        JsonScalar {
            re: g.re_num().to_string(),
            im: g.im_num().to_string(),
            exp2: g.exp2(),
        }
    }
}

impl JsonScalar {
    pub fn to_dyadic(&self) -> Result<GaussianDyadic, DecodeError> {
        let int = |s: &str| BigInt::from_str(s).map_err(|_| DecodeError::Integer(s.to_string()));
        Ok(GaussianDyadic::new(
            int(&self.re)?,
            int(&self.im)?,
            self.exp2,
        ))
    }
}

impl From<&Term> for JsonValue {
    fn from(term: &Term) -> Self {
        match term {
            Term::Integer(v) => {
                JsonValue::Scalar((&GaussianDyadic::from_integer(v.clone())).into())
            }
            Term::Gaussian(g) => JsonValue::Scalar(g.into()),
            Term::IntPoly(_) | Term::GaussianPoly(_) => JsonValue::Poly {
                coeffs: term
                    .to_polynomial()
                    .coeffs()
                    .iter()
                    .map(JsonScalar::from)
                    .collect(),
            },
        }
    }
}

impl JsonValue {
    /// Rebuilds the value in the natural domain of `family`.
    pub fn to_term(&self, family: FamilyTag) -> Result<Term, DecodeError> {
        let shape = || DecodeError::Shape(family);
        match (family, self) {
            (FamilyTag::M, JsonValue::Scalar(s)) => s
                .to_dyadic()?
                .as_integer()
                .cloned()
                .map(Term::Integer)
                .ok_or_else(shape),
            (FamilyTag::GM, JsonValue::Scalar(s)) => Ok(Term::Gaussian(s.to_dyadic()?)),
            (FamilyTag::MP | FamilyTag::GMP, JsonValue::Poly { coeffs }) => {
                let coeffs = coeffs
                    .iter()
                    .map(JsonScalar::to_dyadic)
                    .collect::<Result<Vec<_>, _>>()?;
                let poly = GaussianPolynomial::from_coeffs(coeffs);
                if family == FamilyTag::MP {
                    poly.to_integer().map(Term::IntPoly).ok_or_else(shape)
                } else {
                    Ok(Term::GaussianPoly(poly))
                }
            }
            _ => Err(shape()),
        }
    }
}

impl JsonRecord {
    pub fn new(family: FamilyTag, n: u64, k: u64, term: &Term) -> Self {
        JsonRecord {
            family: family.to_string(),
            n,
            k,
            value: term.into(),
            misprint: None,
        }
    }

    pub fn to_term(&self) -> Result<(FamilyTag, Term), DecodeError> {
        let family: FamilyTag = self
            .family
            .parse()
            .map_err(|_| DecodeError::Family(self.family.clone()))?;
        Ok((family, self.value.to_term(family)?))
    }
}

/// Parses one record, as printed by `seq --format json`.
pub fn parse_record(text: &str) -> Result<JsonRecord, DecodeError> {
    serde_json::from_str(text).map_err(|e| DecodeError::Json(e.to_string()))
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data always serializes");
    s.push('\n');
    s
}

pub(crate) fn to_csv<R, I>(header: &[&str], rows: R) -> String
where
    R: IntoIterator<Item = I>,
    I: IntoIterator,
    I::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv fields are utf-8")
}

/// Left-aligned columns separated by two spaces.
pub(crate) fn to_plain_grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 < row.len() {
                line.push_str(&format!("{cell:<width$}  ", width = widths[c]));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_record_roundtrip() {
        let term = FamilyTag::GM.term(0, 1).unwrap();
        let record = JsonRecord::new(FamilyTag::GM, 0, 1, &term);
        let text = serde_json::to_string(&record).unwrap();
        assert_eq!(
            text,
            r#"{"family":"GM","n":0,"k":1,"value":{"re":"0","im":"-1","exp2":1}}"#
        );
        assert_eq!(
            parse_record(&text).unwrap().to_term().unwrap(),
            (FamilyTag::GM, term)
        );
    }

    #[test]
    fn polynomial_record_roundtrip() {
        let term = FamilyTag::MP.term(5, 2).unwrap();
        let record = JsonRecord::new(FamilyTag::MP, 5, 2, &term);
        let back = parse_record(&serde_json::to_string(&record).unwrap()).unwrap();
        assert_eq!(back.to_term().unwrap().1, term);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let record = JsonRecord::new(FamilyTag::GM, 0, 1, &FamilyTag::GM.term(0, 1).unwrap());
        assert!(record.value.to_term(FamilyTag::M).is_err());
        assert!(record.value.to_term(FamilyTag::MP).is_err());
        let bad = JsonScalar {
            re: "1.5".into(),
            im: "0".into(),
            exp2: 0,
        };
        assert!(bad.to_dyadic().is_err());
    }

    #[test]
    fn plain_grid_alignment() {
        let rows = vec![
            vec!["a".into(), "bb".into()],
            vec!["ccc".into(), "d".into()],
        ];
        assert_eq!(to_plain_grid(&rows), "a    bb\nccc  d\n");
    }
}
