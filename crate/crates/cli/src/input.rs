//! The matrix document read by every subcommand.

use std::fmt;
use std::path::Path;

use centralizer_core::perm::{images_from_cycles, permutation_matrix};
use centralizer_core::{CycleType, ExactMatrix, FieldSpec};
use serde::Deserialize;

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn bad(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    /// `"Q"` or `"Fp"`; the latter needs `p`.
    pub field: String,
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub entries: Option<Vec<Vec<String>>>,
    /// `(eigenvalue, block size)` pairs.
    #[serde(default)]
    pub jordan: Option<Vec<(String, usize)>>,
    #[serde(default)]
    pub permutation: Option<PermutationShorthand>,
}

/// Points are numbered from 1.
#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum PermutationShorthand {
    Cycles(Vec<Vec<usize>>),
    Images(Vec<usize>),
}

/// A parsed document: the matrix, plus the cycle type when given as a permutation.
pub struct Input {
    pub matrix: ExactMatrix,
    pub cycle_type: Option<CycleType>,
}

impl MatrixDocument {
    pub fn field_spec(&self) -> Result<FieldSpec, InputError> {
        match (self.field.as_str(), self.p) {
            ("Q", None) => Ok(FieldSpec::rationals()),
            ("Q", Some(_)) => Err(bad("field Q takes no \"p\"")),
            ("Fp", Some(p)) => FieldSpec::prime(p).map_err(|e| bad(format!("field: {e}"))),
            ("Fp", None) => Err(bad("field Fp needs \"p\"")),
            (other, _) => Err(bad(format!("unknown field {other:?}; use \"Q\" or \"Fp\""))),
        }
    }

    fn check_n(&self, actual: usize) -> Result<(), InputError> {
        match self.n {
            Some(n) if n != actual => Err(bad(format!("\"n\" is {n} but the matrix has size {actual}"))),
            _ => Ok(()),
        }
    }

    pub fn into_input(self) -> Result<Input, InputError> {
        let field = self.field_spec()?;
        let given = [self.entries.is_some(), self.jordan.is_some(), self.permutation.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(bad("exactly one of \"entries\", \"jordan\", \"permutation\" is required"));
        }
        if let Some(rows) = &self.entries {
            let n = rows.len();
            self.check_n(n)?;
            if n == 0 {
                return Err(bad("the matrix is empty"));
            }
            let mut parsed = Vec::with_capacity(n);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(bad(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
                }
                let mut out = Vec::with_capacity(n);
                for (j, s) in row.iter().enumerate() {
                    let v = field
                        .parse(s)
                        .map_err(|_| bad(format!("entry ({}, {}) {s:?} is not an element of {field}", i + 1, j + 1)))?;
                    out.push(v);
                }
                parsed.push(out);
            }
            let matrix = ExactMatrix::from_rows(field, parsed).map_err(|e| bad(e.to_string()))?;
            return Ok(Input { matrix, cycle_type: None });
        }
        if let Some(blocks) = &self.jordan {
            let mut parsed = Vec::with_capacity(blocks.len());
            for (k, (e, size)) in blocks.iter().enumerate() {
                let v = field
                    .parse(e)
                    .map_err(|_| bad(format!("jordan block {} eigenvalue {e:?} is not an element of {field}", k + 1)))?;
                if *size == 0 {
                    return Err(bad(format!("jordan block {} has size 0", k + 1)));
                }
                parsed.push((v, *size));
            }
            let matrix = ExactMatrix::jordan(field, &parsed);
            if matrix.n() == 0 {
                return Err(bad("the matrix is empty"));
            }
            self.check_n(matrix.n())?;
            return Ok(Input { matrix, cycle_type: None });
        }
        let images = match self.permutation.as_ref().unwrap() {
            PermutationShorthand::Images(images) => {
                self.check_n(images.len())?;
                if images.iter().any(|&a| a == 0 || a > images.len()) {
                    return Err(bad(format!("images {images:?} are not a permutation of 1..={}", images.len())));
                }
                images.iter().map(|a| a - 1).collect()
            }
            PermutationShorthand::Cycles(cycles) => {
                let top = cycles.iter().flatten().copied().max().unwrap_or(0);
                let n = self.n.unwrap_or(top);
                images_from_cycles(cycles, n).map_err(|_| bad(format!("cycles {cycles:?} are not disjoint cycles on 1..={n}")))?
            }
        };
        if images.is_empty() {
            return Err(bad("the permutation is empty"));
        }
        let cycle_type = CycleType::from_images(&images).map_err(|e| bad(e.to_string()))?;
        let matrix = permutation_matrix(&images, field).map_err(|e| bad(e.to_string()))?;
        Ok(Input {
            matrix,
            cycle_type: Some(cycle_type),
        })
    }
}

pub fn read_document(path: &Path) -> Result<MatrixDocument, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(json: &str) -> Result<Input, InputError> {
        serde_json::from_str::<MatrixDocument>(json).unwrap().into_input()
    }

    #[test]
    fn entries_and_shorthands() {
        let m = parse(r#"{"field":"Q","entries":[["1/2","0"],["3","-1"]]}"#).unwrap();
        assert_eq!(m.matrix.n(), 2);
        let j = parse(r#"{"field":"Fp","p":3,"jordan":[["1",2],["0",1]]}"#).unwrap();
        assert_eq!(j.matrix.n(), 3);
        let c = parse(r#"{"field":"Q","permutation":{"cycles":[[1,2,3],[4,5]]}}"#).unwrap();
        assert_eq!(c.cycle_type.unwrap().to_string(), "(3,2)");
        let i = parse(r#"{"field":"Q","n":3,"permutation":{"images":[2,1,3]}}"#).unwrap();
        assert_eq!(i.cycle_type.unwrap().to_string(), "(2,1)");
        let padded = parse(r#"{"field":"Q","n":4,"permutation":{"cycles":[[1,2]]}}"#).unwrap();
        assert_eq!(padded.matrix.n(), 4);
    }

    #[test]
    fn diagnostics_name_the_offending_entry() {
        let e = parse(r#"{"field":"Fp","p":5,"entries":[["1","2"],["1/3","0"]]}"#).err().unwrap();
        assert!(e.0.contains("entry (2, 1)"), "{e}");
        let e = parse(r#"{"field":"Fp","p":4,"entries":[["1"]]}"#).err().unwrap();
        assert!(e.0.contains("not a prime"), "{e}");
        let e = parse(r#"{"field":"Q","entries":[["1"]],"jordan":[["0",1]]}"#).err().unwrap();
        assert!(e.0.contains("exactly one"), "{e}");
        let e = parse(r#"{"field":"Q","entries":[["1","2"]]}"#).err().unwrap();
        assert!(e.0.contains("row 1"), "{e}");
        assert!(parse(r#"{"field":"Q","permutation":{"cycles":[[1,2],[2,3]]}}"#).is_err());
        assert!(parse(r#"{"field":"Q","permutation":{"images":[1,1]}}"#).is_err());
    }
}
