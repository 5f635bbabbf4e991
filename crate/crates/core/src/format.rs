//! JSON file formats for algebras and matrices. Indices in files are
//! 1-based and every scalar is a string such as `"-3/4"`.
//!
//! ```json
//! {"dim": 2, "kind": "general", "gamma": [[1, 1, 2, "1"]]}
//! {"dim": 2, "kind": "evolution", "matrix": [["0", "1"], ["0", "0"]]}
//! {"rows": [["0", "1"], ["1", "0"]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evolution::EvolutionMatrix;
use crate::exact::{Matrix, Rational};
use crate::structure::CubicTensor;

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Repr {
    General {
        dim: usize,
        gamma: Vec<(usize, usize, usize, Rational)>,
    },
    Evolution {
        dim: usize,
        matrix: Vec<Vec<Rational>>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixRepr {
    rows: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraFile {
    General(CubicTensor),
    Evolution(EvolutionMatrix),
}

impl AlgebraFile {
    pub fn tensor(&self) -> CubicTensor {
        match self {
            AlgebraFile::General(t) => t.clone(),
            AlgebraFile::Evolution(m) => m.to_tensor(),
        }
    }

    /// The natural-basis matrix, also for general files whose products
    /// happen to be of evolution type.
    pub fn evolution(&self) -> Result<EvolutionMatrix> {
        match self {
            AlgebraFile::General(t) => EvolutionMatrix::from_tensor(t),
            AlgebraFile::Evolution(m) => Ok(m.clone()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AlgebraFile::General(t) => t.dim(),
            AlgebraFile::Evolution(m) => m.dim(),
        }
    }
}

fn format_err(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

fn zero_based(idx: usize, dim: usize) -> Result<usize> {
    if idx == 0 || idx > dim {
        return Err(Error::Format(format!("index {idx} outside 1..={dim}")));
    }
    Ok(idx - 1)
}

pub fn parse_algebra(json: &str) -> Result<AlgebraFile> {
    match serde_json::from_str::<Repr>(json).map_err(format_err)? {
        Repr::General { dim, gamma } => {
            let entries = gamma
                .into_iter()
                .map(|(i, j, k, v)| Ok((zero_based(i, dim)?, zero_based(j, dim)?, zero_based(k, dim)?, v)))
                .collect::<Result<Vec<_>>>()?;
            Ok(AlgebraFile::General(CubicTensor::from_entries(dim, entries)?))
        }
        Repr::Evolution { dim, matrix } => {
            if matrix.len() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    found: matrix.len(),
                });
            }
            Ok(AlgebraFile::Evolution(EvolutionMatrix::from_rows(matrix)?))
        }
    }
}

pub fn algebra_to_json(file: &AlgebraFile) -> String {
    let repr = match file {
        AlgebraFile::General(t) => Repr::General {
            dim: t.dim(),
            gamma: t
                .entries()
                .map(|((i, j, k), v)| (i + 1, j + 1, k + 1, v.clone()))
                .collect(),
        },
        AlgebraFile::Evolution(m) => Repr::Evolution {
            dim: m.dim(),
            matrix: m.matrix().to_rows(),
        },
    };
    serde_json::to_string_pretty(&repr).expect("serializable")
}

pub fn parse_matrix(json: &str) -> Result<Matrix> {
    Ok(serde_json::from_str::<MatrixRepr>(json).map_err(format_err)?.rows)
}

pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string_pretty(&MatrixRepr { rows: m.clone() }).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn general_round_trip() {
        let mut t = CubicTensor::zero(2);
        t.set(0, 0, 1, q(-3, 4));
        t.set(1, 0, 0, q(2, 1));
        let file = AlgebraFile::General(t);
        assert_eq!(parse_algebra(&algebra_to_json(&file)).unwrap(), file);
    }

    #[test]
    fn evolution_round_trip() {
        let file = AlgebraFile::Evolution(EvolutionMatrix::from_ints(&[&[1, 2], &[3, 4]]));
        assert_eq!(parse_algebra(&algebra_to_json(&file)).unwrap(), file);
    }

    #[test]
    fn rejects_bad_input() {
        let dup = r#"{"dim": 2, "kind": "general", "gamma": [[1,1,1,"1"],[1,1,1,"2"]]}"#;
        assert_eq!(parse_algebra(dup), Err(Error::DuplicateEntry(1, 1, 1)));
        let zero_idx = r#"{"dim": 2, "kind": "general", "gamma": [[0,1,1,"1"]]}"#;
        assert!(matches!(parse_algebra(zero_idx), Err(Error::Format(_))));
        let bad_q = r#"{"dim": 1, "kind": "evolution", "matrix": [["1/0"]]}"#;
        assert!(matches!(parse_algebra(bad_q), Err(Error::Format(_))));
        let ragged = r#"{"dim": 2, "kind": "evolution", "matrix": [["1","2"],["3"]]}"#;
        assert!(parse_algebra(ragged).is_err());
        let extra = r#"{"dim": 1, "kind": "evolution", "matrix": [["1"]], "x": 1}"#;
        assert!(parse_algebra(extra).is_err());
    }

    #[test]
    fn matrix_file() {
        let m = parse_matrix(r#"{"rows": [["0","1"],["1","0"]]}"#).unwrap();
        assert_eq!(m, Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(parse_matrix(&matrix_to_json(&m)).unwrap(), m);
    }
}
