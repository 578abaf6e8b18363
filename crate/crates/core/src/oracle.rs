//! Brute-force cross-checks that share no code with the Smith normal form path.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Value;
use crate::matrix::ExactMatrix;
use crate::poly::Polynomial;
use crate::smith::{self, characteristic_matrix, InvariantFactorList};
use crate::structure::{self, StructureReport};
use crate::Config;

/// Largest size accepted by [`determinantal_divisors`].
pub const MINOR_LIMIT: usize = 6;
/// Largest size accepted by [`commutant_dimension`].
pub const COMMUTANT_LIMIT: usize = 12;

/// Minors of a polynomial matrix, memoized by row and column bitmasks.
struct Minors<'a> {
    entries: &'a [Vec<Polynomial>],
    memo: HashMap<(u16, u16), Polynomial>,
}

impl Minors<'_> {
    fn det(&mut self, rows: u16, cols: u16) -> Polynomial {
        if rows == 0 {
            return Polynomial::one(self.entries[0][0].field());
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return v.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest = rows & (rows - 1);
        let mut acc = Polynomial::zero(self.entries[0][0].field());
        let mut sign_positive = true;
        for c in 0..16 {
            if cols & (1 << c) == 0 {
                continue;
            }
            let a = &self.entries[r][c];
            if !a.is_zero() {
                let sub = self.det(rest, cols & !(1 << c));
                let term = a * &sub;
                acc = if sign_positive { &acc + &term } else { &acc - &term };
            }
            sign_positive = !sign_positive;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

fn subsets(n: usize, k: usize) -> Vec<u16> {
    (0u16..(1 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

/// Invariant factors as quotients of successive gcds of k-by-k minors of `xI - c`.
pub fn determinantal_divisors(c: &ExactMatrix) -> Result<InvariantFactorList> {
    let n = c.n();
    if n > MINOR_LIMIT {
        return Err(Error::DimensionTooLarge {
            n,
            limit: MINOR_LIMIT,
        });
    }
    let field = c.field();
    if n == 0 {
        return Ok(InvariantFactorList::new(vec![]));
    }
    let m = characteristic_matrix(c);
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut minors = Minors {
        entries: &entries,
        memo: HashMap::new(),
    };
    let mut deltas = vec![Polynomial::one(field)];
    for k in 1..=n {
        let mut g = Polynomial::zero(field);
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let d = minors.det(rows, cols);
                if d.is_zero() {
                    continue;
                }
                g = if g.is_zero() { d.monic() } else { g.gcd(&d)? };
                if g.is_one() {
                    break;
                }
            }
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() {
            return Err(Error::SingularPolyMatrix);
        }
        deltas.push(g);
    }
    let factors = deltas
        .windows(2)
        .map(|w| w[1].div_exact(&w[0]).monic())
        .filter(|d| !d.is_constant())
        .collect();
    Ok(InvariantFactorList::new(factors))
}

/// Dimension of `{a : ca = ac}` as the nullity of `a -> ca - ac`.
pub fn commutant_dimension(c: &ExactMatrix) -> Result<usize> {
    let n = c.n();
    if n > COMMUTANT_LIMIT {
        return Err(Error::DimensionTooLarge {
            n,
            limit: COMMUTANT_LIMIT,
        });
    }
    let f = c.field();
    let mut rows: Vec<Vec<Value>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // (ca - ac)_{ij} = sum_k c_{ik} a_{kj} - a_{ik} c_{kj}
            let mut row = vec![f.zero(); n * n];
            for k in 0..n {
                let v = f.add(&row[k * n + j], c.get(i, k));
                row[k * n + j] = v;
                let v = f.sub(&row[i * n + k], c.get(k, j));
                row[i * n + k] = v;
            }
            rows.push(row);
        }
    }
    Ok(n * n - ExactMatrix::rank_of_rows(&mut rows, f))
}

/// Jordan block sizes of a nilpotent matrix, largest first, from ranks of powers.
pub fn jordan_sizes_by_rank(c: &ExactMatrix) -> Result<Vec<u64>> {
    let n = c.n();
    let mut ranks = vec![n];
    let mut power = ExactMatrix::identity(c.field(), n);
    for _ in 0..=n {
        power = power.mul(c)?;
        ranks.push(power.rank());
    }
    if ranks[n] != 0 {
        return Err(Error::NotNilpotent);
    }
    let mut sizes = Vec::new();
    for t in (1..=n).rev() {
        let count = ranks[t + 1] + ranks[t - 1] - 2 * ranks[t];
        sizes.extend(std::iter::repeat(t as u64).take(count));
    }
    Ok(sizes)
}

/// Similarity via equality of invariant factors.
pub fn similar(c: &ExactMatrix, d: &ExactMatrix) -> Result<bool> {
    c.field().check_same(&d.field())?;
    if c.n() != d.n() {
        return Err(Error::SizeMismatch(c.n(), d.n()));
    }
    Ok(smith::invariant_factors(c)? == smith::invariant_factors(d)?)
}

/// One cross-check: the main-path value against the oracle value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub kind: String,
    pub expected: String,
    pub observed: String,
    pub agree: bool,
}

impl OracleReport {
    fn new(kind: &str, expected: String, observed: String) -> Self {
        let agree = expected == observed;
        OracleReport {
            kind: kind.to_string(),
            expected,
            observed,
            agree,
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.agree { "agree" } else { "DISAGREE" };
        write!(
            f,
            "{}: {} (main path {}, oracle {})",
            self.kind, status, self.expected, self.observed
        )
    }
}

fn nilpotent_divisors(report: &StructureReport) -> Vec<u64> {
    let mut sizes: Vec<u64> = report
        .elementary_divisors
        .multiset
        .iter()
        .flat_map(|e| std::iter::repeat(e.exponent).take(e.multiplicity))
        .collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Runs every oracle whose size guard admits `c`.
pub fn run_oracles(c: &ExactMatrix, config: &Config) -> Result<Vec<OracleReport>> {
    let n = c.n();
    if n > COMMUTANT_LIMIT {
        return Err(Error::DimensionTooLarge {
            n,
            limit: COMMUTANT_LIMIT,
        });
    }
    let report = structure::structure_report_with(c, config)?;
    let mut out = Vec::new();
    if n <= MINOR_LIMIT {
        out.push(OracleReport::new(
            "determinantal-divisors",
            report.invariant_factors.to_string(),
            determinantal_divisors(c)?.to_string(),
        ));
    }
    out.push(OracleReport::new(
        "commutant-dimension",
        report.frobenius_dimension.to_string(),
        commutant_dimension(c)?.to_string(),
    ));
    let x = Polynomial::x(c.field());
    let nilpotent = report.blocks.len() == 1 && report.blocks[0].irreducible_base == x;
    if nilpotent {
        out.push(OracleReport::new(
            "jordan-sizes",
            format!("{:?}", nilpotent_divisors(&report)),
            format!("{:?}", jordan_sizes_by_rank(c)?),
        ));
    }
    Ok(out)
}
