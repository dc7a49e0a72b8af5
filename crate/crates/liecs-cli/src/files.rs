//! On-disk formats: JSON with rational-string scalars.
//!
//! Scalars are never numeric JSON literals, always strings in the exact
//! `p/q` grammar, so files are bit-exact. Basis indices are 1-based in
//! files, matching reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use liecs::affalg::CommAssocAlgebra;
use liecs::cstruct::AlmostComplexStructure;
use liecs::lie::LieAlgebra;
use liecs::mat::Mat;
use liecs::scalar::{format_rational, parse_rational, Rat};

#[derive(Debug)]
pub enum FileError {
    Json(String),
    Invalid(String),
}

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FileError::Json(m) => write!(f, "malformed JSON: {m}"),
            FileError::Invalid(m) => write!(f, "invalid file: {m}"),
        }
    }
}

impl std::error::Error for FileError {}

fn invalid(msg: impl Into<String>) -> FileError {
    FileError::Invalid(msg.into())
}

/// Sparse bracket or product table: `i`, `j` are 1-based basis indices and
/// `result` maps basis indices to rational strings.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub result: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    pub dim: usize,
    pub brackets: Vec<TableEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AcsFile {
    pub dim: usize,
    /// Row-major dense grid; column c holds the coordinates of J e_c.
    pub j: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AssocFile {
    pub dim: usize,
    /// Symmetric-pair list: entries with i <= j.
    pub products: Vec<TableEntry>,
}

fn parse_result_vector(
    dim: usize,
    result: &BTreeMap<String, String>,
) -> Result<Vec<Rat>, FileError> {
    let mut v = vec![Rat::from_integer(0.into()); dim];
    for (key, value) in result {
        let idx: usize = key
            .parse()
            .map_err(|_| invalid(format!("basis index {key:?} is not a number")))?;
        if idx == 0 || idx > dim {
            return Err(invalid(format!("basis index {idx} out of range 1..={dim}")));
        }
        v[idx - 1] =
            parse_rational(value).map_err(|e| invalid(format!("scalar {value:?}: {e}")))?;
    }
    Ok(v)
}

fn render_result_vector(v: &[Rat]) -> BTreeMap<String, String> {
    let zero = liecs::scalar::rint(0);
    v.iter()
        .enumerate()
        .filter(|(_, x)| **x != zero)
        .map(|(k, x)| ((k + 1).to_string(), format_rational(x)))
        .collect()
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Validates indices and scalars and builds the raw algebra (the Jacobi
    /// check is a separate, reported step).
    pub fn to_algebra(&self) -> Result<LieAlgebra, FileError> {
        let mut seen = std::collections::BTreeSet::new();
        let mut entries = Vec::new();
        for entry in &self.brackets {
            if entry.i == 0 || entry.j == 0 || entry.i > self.dim || entry.j > self.dim {
                return Err(invalid(format!(
                    "bracket pair ({}, {}) out of range 1..={}",
                    entry.i, entry.j, self.dim
                )));
            }
            if entry.i >= entry.j {
                return Err(invalid(format!(
                    "bracket pair ({}, {}) must satisfy i < j",
                    entry.i, entry.j
                )));
            }
            if !seen.insert((entry.i, entry.j)) {
                return Err(invalid(format!("duplicate bracket pair ({}, {})", entry.i, entry.j)));
            }
            entries.push(((entry.i - 1, entry.j - 1), parse_result_vector(self.dim, &entry.result)?));
        }
        LieAlgebra::new_raw(self.dim, entries).map_err(|e| invalid(e.to_string()))
    }

    pub fn from_algebra(lie: &LieAlgebra) -> Self {
        AlgebraFile {
            dim: lie.dim(),
            brackets: lie
                .entries()
                .map(|(&(i, j), v)| TableEntry {
                    i: i + 1,
                    j: j + 1,
                    result: render_result_vector(v),
                })
                .collect(),
        }
    }
}

impl AcsFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Parses the dense grid into a matrix; the structure equation
    /// `J^2 = -I` is a separate, reported check.
    pub fn to_matrix(&self) -> Result<Mat<Rat>, FileError> {
        if self.j.len() != self.dim || self.j.iter().any(|row| row.len() != self.dim) {
            return Err(invalid(format!("structure grid must be {0} x {0}", self.dim)));
        }
        let mut rows = Vec::new();
        for row in &self.j {
            let mut out = Vec::new();
            for value in row {
                out.push(
                    parse_rational(value).map_err(|e| invalid(format!("scalar {value:?}: {e}")))?,
                );
            }
            rows.push(out);
        }
        Ok(Mat::from_rows(rows))
    }

    pub fn from_structure(acs: &AlmostComplexStructure) -> Self {
        let m = acs.matrix();
        AcsFile {
            dim: m.rows(),
            j: (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| format_rational(&m[(r, c)])).collect())
                .collect(),
        }
    }
}

impl AssocFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_algebra(&self) -> Result<CommAssocAlgebra, FileError> {
        let mut seen = std::collections::BTreeSet::new();
        let mut entries = Vec::new();
        for entry in &self.products {
            if entry.i == 0 || entry.j == 0 || entry.i > self.dim || entry.j > self.dim {
                return Err(invalid(format!(
                    "product pair ({}, {}) out of range 1..={}",
                    entry.i, entry.j, self.dim
                )));
            }
            if entry.i > entry.j {
                return Err(invalid(format!(
                    "product pair ({}, {}) must satisfy i <= j",
                    entry.i, entry.j
                )));
            }
            if !seen.insert((entry.i, entry.j)) {
                return Err(invalid(format!("duplicate product pair ({}, {})", entry.i, entry.j)));
            }
            entries.push(((entry.i - 1, entry.j - 1), parse_result_vector(self.dim, &entry.result)?));
        }
        CommAssocAlgebra::new_raw(self.dim, entries).map_err(|e| invalid(e.to_string()))
    }

    pub fn from_algebra(a: &CommAssocAlgebra) -> Self {
        AssocFile {
            dim: a.dim(),
            products: a
                .entries()
                .map(|(&(i, j), v)| TableEntry {
                    i: i + 1,
                    j: j + 1,
                    result: render_result_vector(v),
                })
                .collect(),
        }
    }
}
