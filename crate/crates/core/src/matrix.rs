//! Square matrices over a [`FieldSpec`] and their polynomial counterparts.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, Value};
use crate::poly::Polynomial;

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: FieldSpec,
    n: usize,
    entries: Vec<Value>,
}

impl ExactMatrix {
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Value>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NonSquareInput {
                    rows: n,
                    cols: row.len(),
                });
            }
            for v in row {
                if !field.contains(&v) {
                    return Err(Error::MixedFields(field.to_string(), format!("{v:?}")));
                }
                entries.push(v);
            }
        }
        Ok(ExactMatrix { field, n, entries })
    }

    pub fn from_elements(field: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let mut values = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for e in row {
                field.check_same(&e.field())?;
                r.push(e.into_value());
            }
            values.push(r);
        }
        Self::from_rows(field, values)
    }

    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, rows)
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        ExactMatrix {
            field,
            n,
            entries: vec![field.zero(); n * n],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::scalar(field, n, field.one())
    }

    pub fn scalar(field: FieldSpec, n: usize, c: Value) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Upper-triangular Jordan block `J_size(eigenvalue)`.
    pub fn jordan_block(field: FieldSpec, eigenvalue: &Value, size: usize) -> Self {
        let mut m = Self::scalar(field, size, eigenvalue.clone());
        for i in 1..size {
            m.set(i - 1, i, field.one());
        }
        m
    }

    /// Direct sum of Jordan blocks given as `(eigenvalue, size)`.
    pub fn jordan(field: FieldSpec, blocks: &[(Value, usize)]) -> Self {
        let parts: Vec<ExactMatrix> = blocks
            .iter()
            .map(|(e, s)| Self::jordan_block(field, e, *s))
            .collect();
        Self::block_diag(field, &parts)
    }

    /// Companion matrix of a monic polynomial of positive degree.
    pub fn companion(f: &Polynomial) -> Self {
        let field = f.field();
        let f = f.monic();
        let n = f.degree().unwrap_or(0);
        let mut m = Self::zero(field, n);
        for i in 1..n {
            m.set(i, i - 1, field.one());
        }
        for i in 0..n {
            m.set(i, n - 1, field.neg(&f.coeff(i)));
        }
        m
    }

    pub fn block_diag(field: FieldSpec, blocks: &[ExactMatrix]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zero(field, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.n;
        }
        m
    }

    /// 0/1 matrix with a one at `(i, images[i])`; images are 0-based.
    pub fn permutation(field: FieldSpec, images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in images {
            if j >= n || seen[j] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[j] = true;
        }
        let mut m = Self::zero(field, n);
        for (i, &j) in images.iter().enumerate() {
            m.set(i, j, field.one());
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Value {
        &self.entries[i * self.n + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.field.element(self.get(i, j).clone())
    }

    pub fn set(&mut self, i: usize, j: usize, v: Value) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Value>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| self.field.is_zero(v))
    }

    fn check_compatible(&self, other: &ExactMatrix) -> Result<()> {
        self.field.check_same(&other.field)?;
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_compatible(other)?;
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f.add(a, b))
            .collect();
        Ok(ExactMatrix { field: self.field, n: self.n, entries })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_compatible(other)?;
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f.sub(a, b))
            .collect();
        Ok(ExactMatrix { field: self.field, n: self.n, entries })
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_compatible(other)?;
        let (f, n) = (self.field, self.n);
        let mut out = Self::zero(f, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Value) -> ExactMatrix {
        let f = self.field;
        ExactMatrix {
            field: f,
            n: self.n,
            entries: self.entries.iter().map(|v| f.mul(v, c)).collect(),
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = Self::zero(self.field, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> ExactMatrix {
        let mut acc = Self::identity(self.field, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        acc
    }

    /// `f(self)` by Horner's rule.
    pub fn eval_poly(&self, f: &Polynomial) -> Result<ExactMatrix> {
        self.field.check_same(&f.field())?;
        let mut acc = Self::zero(self.field, self.n);
        for c in f.coeffs().iter().rev() {
            acc = acc
                .mul(self)?
                .add(&Self::scalar(self.field, self.n, c.clone()))?;
        }
        Ok(acc)
    }

    /// Row echelon form in place; returns the rank.
    fn echelon(rows: &mut [Vec<Value>], field: FieldSpec) -> usize {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..width {
            let Some(pivot) = (rank..height).find(|&r| !field.is_zero(&rows[r][col])) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = field.inv(&rows[rank][col]).expect("nonzero pivot");
            for v in rows[rank].iter_mut() {
                *v = field.mul(v, &inv);
            }
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || field.is_zero(&row[col]) {
                    continue;
                }
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    if !field.is_zero(p) {
                        *v = field.sub(v, &field.mul(&factor, p));
                    }
                }
            }
            rank += 1;
            if rank == height {
                break;
            }
        }
        rank
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        Self::echelon(&mut rows, self.field)
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        let (f, n) = (self.field, self.n);
        let mut rows: Vec<Vec<Value>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
                r
            })
            .collect();
        let rank = Self::echelon(&mut rows, f);
        if rank < n || (0..n).any(|i| !f.is_one(&rows[i][i])) {
            return Err(Error::DivisionByZero);
        }
        let inv = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Self::from_rows(f, inv)
    }

    /// `g * self * g^-1`.
    pub fn conjugate(&self, g: &ExactMatrix) -> Result<ExactMatrix> {
        g.mul(self)?.mul(&g.inverse()?)
    }

    pub(crate) fn rank_of_rows(rows: &mut [Vec<Value>], field: FieldSpec) -> usize {
        Self::echelon(rows, field)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| self.field.format(self.get(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Square matrix of polynomials over a shared field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    field: FieldSpec,
    n: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NonSquareInput {
                    rows: n,
                    cols: row.len(),
                });
            }
            for p in row {
                field.check_same(&p.field())?;
                entries.push(p);
            }
        }
        Ok(PolyMatrix { field, n, entries })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<Polynomial>> {
        let n = self.n;
        let mut it = self.entries.into_iter();
        (0..n).map(|_| it.by_ref().take(n).collect()).collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn non_square_rejected() {
        let err = ExactMatrix::from_ints(q(), &[&[1, 2], &[3]]).unwrap_err();
        assert_eq!(err, Error::NonSquareInput { rows: 2, cols: 1 });
    }

    #[test]
    fn companion_is_annihilated() {
        let f = Polynomial::from_ints(q(), &[-2, 0, 0, 1]);
        let c = ExactMatrix::companion(&f);
        assert!(c.eval_poly(&f).unwrap().is_zero());
    }

    #[test]
    fn inverse_and_rank() {
        let g = ExactMatrix::from_ints(q(), &[&[2, 1], &[1, 1]]).unwrap();
        let inv = g.inverse().unwrap();
        assert_eq!(g.mul(&inv).unwrap(), ExactMatrix::identity(q(), 2));
        let s = ExactMatrix::from_ints(q(), &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn jordan_powers() {
        let j = ExactMatrix::jordan_block(q(), &q().zero(), 3);
        assert_eq!(j.pow(2).rank(), 1);
        assert!(j.pow(3).is_zero());
    }

    #[test]
    fn permutation_matrix() {
        let p = ExactMatrix::permutation(q(), &[1, 2, 0]).unwrap();
        assert_eq!(p.pow(3), ExactMatrix::identity(q(), 3));
        assert!(ExactMatrix::permutation(q(), &[0, 0]).is_err());
    }
}
