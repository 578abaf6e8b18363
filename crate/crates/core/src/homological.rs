//! Homological invariants of the centralizer algebra read off its divisor structure.

use std::fmt;

use crate::error::{Error, Result};
use crate::structure::{hj_data, StructureReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominantDimension {
    Two,
    Infinite,
}

impl fmt::Display for DominantDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominantDimension::Two => f.write_str("2"),
            DominantDimension::Infinite => f.write_str("infinity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologicalReport {
    pub rep_finite: bool,
    pub dominant_dimension: DominantDimension,
    /// Finitistic dimension is always finite for these algebras.
    pub findim_finite: bool,
    pub is_symmetric_nakayama: bool,
}

/// Every block's power-index set lies in `{1, b - 1, b}` with `b = max(P, 3)`.
pub fn rep_finite(report: &StructureReport) -> bool {
    report.blocks.iter().all(|block| {
        let b = block.power_index_set.iter().copied().max().unwrap_or(0).max(3);
        block
            .power_index_set
            .iter()
            .all(|&m| m == 1 || m == b - 1 || m == b)
    })
}

pub fn dominant_dimension(report: &StructureReport) -> DominantDimension {
    if report.blocks.iter().all(|b| b.power_index_set.len() == 1) {
        DominantDimension::Infinite
    } else {
        DominantDimension::Two
    }
}

pub fn homological_report(report: &StructureReport) -> HomologicalReport {
    let dominant = dominant_dimension(report);
    HomologicalReport {
        rep_finite: rep_finite(report),
        dominant_dimension: dominant,
        findim_finite: true,
        is_symmetric_nakayama: dominant == DominantDimension::Infinite,
    }
}

/// Symmetric integer matrix with `(k, l)` entry `scale * u_max(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanBlockMatrix {
    pub size: usize,
    pub scale: u64,
    pub entries: Vec<Vec<i64>>,
}

fn check_decreasing(u: &[u64]) -> Result<()> {
    if u.is_empty() || u.windows(2).any(|w| w[0] <= w[1]) || u.contains(&0) {
        return Err(Error::NotStrictlyDecreasing(u.to_vec()));
    }
    Ok(())
}

pub fn cartan_block(u: &[u64], scale: u64) -> Result<CartanBlockMatrix> {
    check_decreasing(u)?;
    let h = u.len();
    let entries = (0..h)
        .map(|k| (0..h).map(|l| (scale * u[k.max(l)]) as i64).collect())
        .collect();
    Ok(CartanBlockMatrix {
        size: h,
        scale,
        entries,
    })
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// `U X U^T` with `U = I - sum e_(t, t+1)`, which turns the Cartan block into
/// the diagonal of consecutive differences. (`U^T X U` is not diagonal for this `X`.)
pub fn difference_congruence(x: &CartanBlockMatrix) -> Vec<Vec<i64>> {
    let h = x.size;
    let u: Vec<Vec<i64>> = (0..h)
        .map(|i| {
            (0..h)
                .map(|j| {
                    if i == j {
                        1
                    } else if j == i + 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    mat_mul(&mat_mul(&u, &x.entries), &transpose(&u))
}

/// Whether the Cartan blocks of two sequences with the same leading entry are
/// congruent over the integers: their difference multisets agree.
pub fn cartan_congruent(m: &[u64], n: &[u64]) -> Result<bool> {
    if m.len() != n.len() {
        return Err(Error::LengthMismatch(m.len(), n.len()));
    }
    if m.len() < 2 {
        return Err(Error::SequenceTooShort);
    }
    check_decreasing(m)?;
    check_decreasing(n)?;
    if m[0] != n[0] {
        return Err(Error::FirstEntryMismatch(m[0], n[0]));
    }
    for seq in [m, n] {
        let d = difference_congruence(&cartan_block(seq, 1)?);
        let expected: Vec<i64> = seq
            .iter()
            .enumerate()
            .map(|(i, &v)| v as i64 - seq.get(i + 1).map_or(0, |&w| w as i64))
            .collect();
        for (i, row) in d.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let want = if i == j { expected[i] } else { 0 };
                assert_eq!(v, want, "unimodular reduction of the Cartan block");
            }
        }
    }
    Ok(hj_data(m)?.h_multiset == hj_data(n)?.h_multiset)
}
