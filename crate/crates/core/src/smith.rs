//! Smith normal form of `xI - c` over `R[x]`, invariant factors and elementary divisors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor;
use crate::factor::rational::rational_parts;
use crate::field::{FieldSpec, Value};
use crate::matrix::{ExactMatrix, PolyMatrix};
use crate::poly::Polynomial;
use crate::Config;

/// Monic invariant factors of positive degree, `d_1 | d_2 | ... | d_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactorList {
    pub factors: Vec<Polynomial>,
}

impl InvariantFactorList {
    pub fn new(factors: Vec<Polynomial>) -> Self {
        InvariantFactorList { factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The last invariant factor, i.e. the minimal polynomial.
    pub fn minimal_polynomial(&self) -> Option<&Polynomial> {
        self.factors.last()
    }

    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|d| d.degree().unwrap_or(0)).sum()
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].divides(&w[1]))
    }
}

impl fmt::Display for InvariantFactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// One entry `base^exponent` of the elementary divisor multiset, seen `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ElementaryDivisor {
    pub base: Polynomial,
    pub exponent: u64,
    pub multiplicity: usize,
}

impl ElementaryDivisor {
    pub fn polynomial(&self) -> Polynomial {
        self.base.pow(self.exponent)
    }
}

impl fmt::Display for ElementaryDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base.power_string(self.exponent))
    }
}

/// Elementary divisors sorted by base (canonically) and exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryDivisorData {
    pub field: FieldSpec,
    pub multiset: Vec<ElementaryDivisor>,
}

impl ElementaryDivisorData {
    /// Builds the data from `(base, exponent)` occurrences, merging repeats.
    pub fn from_occurrences(
        field: FieldSpec,
        occurrences: impl IntoIterator<Item = (Polynomial, u64, usize)>,
    ) -> Self {
        let mut multiset: Vec<ElementaryDivisor> = Vec::new();
        for (base, exponent, multiplicity) in occurrences {
            if multiplicity == 0 || exponent == 0 {
                continue;
            }
            match multiset
                .iter_mut()
                .find(|e| e.base == base && e.exponent == exponent)
            {
                Some(e) => e.multiplicity += multiplicity,
                None => multiset.push(ElementaryDivisor {
                    base,
                    exponent,
                    multiplicity,
                }),
            }
        }
        multiset.sort_by(|a, b| {
            a.base
                .canonical_cmp(&b.base)
                .then(a.exponent.cmp(&b.exponent))
        });
        ElementaryDivisorData { field, multiset }
    }

    /// The deduplicated set as `(base, exponent)` pairs.
    pub fn support_set(&self) -> Vec<(Polynomial, u64)> {
        self.multiset
            .iter()
            .map(|e| (e.base.clone(), e.exponent))
            .collect()
    }

    /// `sum q * deg p` over the multiset, which is the matrix size.
    pub fn total_degree(&self) -> usize {
        self.multiset
            .iter()
            .map(|e| e.multiplicity * e.exponent as usize * e.base.degree().unwrap_or(0))
            .sum()
    }

    /// Rebuilds invariant factors: the k-th largest takes, for each base, the
    /// k-th largest exponent occurrence.
    pub fn invariant_factors(&self) -> InvariantFactorList {
        let mut columns: Vec<(Polynomial, Vec<u64>)> = Vec::new();
        for e in &self.multiset {
            let slot = match columns.iter_mut().position(|(b, _)| *b == e.base) {
                Some(i) => &mut columns[i].1,
                None => {
                    columns.push((e.base.clone(), Vec::new()));
                    &mut columns.last_mut().expect("just pushed").1
                }
            };
            slot.extend(std::iter::repeat(e.exponent).take(e.multiplicity));
        }
        let r = columns.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![Polynomial::one(self.field); r];
        for (base, mut exps) in columns {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (k, e) in exps.into_iter().enumerate() {
                let slot = &mut factors[r - 1 - k];
                *slot = &*slot * &base.pow(e);
            }
        }
        InvariantFactorList::new(factors)
    }
}

impl fmt::Display for ElementaryDivisorData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for e in &self.multiset {
            for _ in 0..e.multiplicity {
                parts.push(e.to_string());
            }
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `xI - c`.
pub fn characteristic_matrix(c: &ExactMatrix) -> PolyMatrix {
    let field = c.field();
    let n = c.n();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minus = Polynomial::constant(field, field.neg(c.get(i, j)));
                    if i == j {
                        &minus + &Polynomial::x(field)
                    } else {
                        minus
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(field, rows).expect("square by construction")
}

/// Nonzero entry of least degree in the trailing submatrix, first in row-major order.
fn find_pivot(a: &[Vec<Polynomial>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, p) in row.iter().enumerate().skip(k) {
            if let Some(d) = p.degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                    if d == 0 {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Scales a row over `Q` so its coefficients are coprime integers. Row scaling by a
/// unit keeps the module the same and stops rational coefficient growth.
fn make_primitive(row: &mut [Polynomial]) {
    let mut numer = BigInt::zero();
    let mut denom = BigInt::one();
    for c in row.iter().flat_map(|p| p.coeffs()) {
        let (n, d) = rational_parts(c);
        numer = numer.gcd(&n);
        denom = denom.lcm(&d);
    }
    if numer.is_zero() || (numer.is_one() && denom.is_one()) {
        return;
    }
    let unit = Value::Rational(BigRational::new(denom, numer));
    for p in row.iter_mut() {
        if !p.is_zero() {
            *p = p.scale(&unit);
        }
    }
}

/// Invariant factors of a square polynomial matrix with nonzero determinant.
pub fn smith_normal_form(m: &PolyMatrix) -> Result<InvariantFactorList> {
    let n = m.n();
    let mut a = m.clone().into_rows();
    let mut diag = Vec::with_capacity(n);
    let rational = m.field().is_rationals();
    for k in 0..n {
        loop {
            let Some((pi, pj)) = find_pivot(&a, k) else {
                return Err(Error::SingularPolyMatrix);
            };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = a[k][k].clone();
            let mut clean = true;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a[i][k].divrem(&pivot)?;
                for j in k..n {
                    if a[k][j].is_zero() {
                        continue;
                    }
                    let t = &q * &a[k][j];
                    a[i][j] = &a[i][j] - &t;
                }
                clean &= r.is_zero();
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a[k][j].divrem(&pivot)?;
                for row in a.iter_mut().skip(k) {
                    if row[k].is_zero() {
                        continue;
                    }
                    let t = &q * &row[k];
                    row[j] = &row[j] - &t;
                }
                clean &= r.is_zero();
            }
            if rational {
                for row in a.iter_mut().skip(k + 1) {
                    make_primitive(&mut row[k..]);
                }
            }
            if clean {
                break;
            }
        }
        diag.push(a[k][k].monic());
    }

    // diag(a, b) is equivalent to diag(gcd, lcm)
    for i in 0..n {
        for j in i + 1..n {
            if diag[i].divides(&diag[j]) {
                continue;
            }
            let g = diag[i].gcd(&diag[j])?;
            let l = diag[i].lcm(&diag[j])?;
            diag[i] = g;
            diag[j] = l;
        }
    }
    let factors = diag.into_iter().filter(|d| !d.is_constant()).collect();
    Ok(InvariantFactorList::new(factors))
}

/// Reduced echelon rows used to test membership in the span of the basis built so
/// far, and to express a vector in that basis.
struct Echelon {
    field: FieldSpec,
    /// `(pivot column, row with a one at the pivot, the row in basis coordinates)`
    rows: Vec<(usize, Vec<Value>, Vec<Value>)>,
    size: usize,
}

impl Echelon {
    /// Splits `y` as `residual + sum comb_k u_k`.
    fn reduce(&self, mut y: Vec<Value>) -> (Vec<Value>, Vec<Value>) {
        let f = self.field;
        let mut comb = vec![f.zero(); self.size];
        for (p, row, rc) in &self.rows {
            let coef = y[*p].clone();
            if f.is_zero(&coef) {
                continue;
            }
            for (yi, ri) in y.iter_mut().zip(row) {
                *yi = f.sub(yi, &f.mul(&coef, ri));
            }
            for (ci, ri) in comb.iter_mut().zip(rc) {
                *ci = f.add(ci, &f.mul(&coef, ri));
            }
        }
        (y, comb)
    }

    /// Adds the basis vector whose reduction left `residual` and `comb`.
    fn push(&mut self, residual: Vec<Value>, comb: Vec<Value>) {
        let f = self.field;
        let p = residual.iter().position(|v| !f.is_zero(v)).expect("nonzero residual");
        let inv = f.inv(&residual[p]).expect("nonzero pivot");
        let row = residual.iter().map(|v| f.mul(v, &inv)).collect();
        // residual = u_new - sum comb_k u_k
        let mut rc: Vec<Value> = comb.iter().map(|v| f.neg(&f.mul(v, &inv))).collect();
        rc.push(inv);
        self.size += 1;
        for (_, _, other) in self.rows.iter_mut() {
            other.push(f.zero());
        }
        self.rows.push((p, row, rc));
    }
}

/// Relation matrix of `R^n` as an `R[x]`-module with `x` acting by `c`, over
/// generators `v_1, ..., v_m` chosen from the standard basis: column `j` records
/// `f_j(x) v_j = sum_(i<j) g_ij(x) v_i` with `f_j` the minimal polynomial of `v_j`
/// modulo the earlier cyclic subspaces. It is upper triangular with
/// `sum deg f_j = n`, so it is equivalent to `xI - c` up to unit factors.
fn krylov_presentation(c: &ExactMatrix) -> PolyMatrix {
    let n = c.n();
    let f = c.field();
    let mut ech = Echelon {
        field: f,
        rows: Vec::new(),
        size: 0,
    };
    // starting index of each block in basis order
    let mut starts: Vec<usize> = Vec::new();
    let mut columns: Vec<Vec<Polynomial>> = Vec::new();
    for i in 0..n {
        if ech.size == n {
            break;
        }
        let mut y: Vec<Value> = (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect();
        let (res, comb) = ech.reduce(y.clone());
        if res.iter().all(|v| f.is_zero(v)) {
            continue;
        }
        let start = ech.size;
        ech.push(res, comb);
        let comb = loop {
            y = (0..n)
                .map(|r| (0..n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(c.get(r, k), &y[k]))))
                .collect();
            let (res, comb) = ech.reduce(y.clone());
            if res.iter().all(|v| f.is_zero(v)) {
                break comb;
            }
            ech.push(res, comb);
        };
        let d = ech.size - start;
        let mut fj = vec![f.zero(); d + 1];
        for t in 0..d {
            fj[t] = f.neg(&comb[start + t]);
        }
        fj[d] = f.one();
        let mut column = Vec::with_capacity(starts.len() + 1);
        for (b, &s) in starts.iter().enumerate() {
            let e = starts.get(b + 1).copied().unwrap_or(start);
            let g: Vec<Value> = comb[s..e].iter().map(|v| f.neg(v)).collect();
            column.push(Polynomial::new(f, g));
        }
        column.push(Polynomial::new(f, fj));
        columns.push(column);
        starts.push(start);
    }
    let m = columns.len();
    let rows = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| columns[j].get(i).cloned().unwrap_or_else(|| Polynomial::zero(f)))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(f, rows).expect("square by construction")
}

enum Local {
    /// Exponents of `q` on the diagonal, ascending.
    Exponents(Vec<u64>),
    /// A proper factor of `q` exposed by a pivot that is not `q^v` times a unit.
    Split(Polynomial),
}

/// Largest `v <= cap` with `q^v | e`, and the cofactor.
fn valuation(e: &Polynomial, q: &Polynomial, cap: u64) -> Result<(u64, Polynomial)> {
    if e.is_zero() {
        return Ok((cap, e.clone()));
    }
    let mut v = 0;
    let mut rest = e.clone();
    while v < cap {
        let (quo, r) = rest.divrem(q)?;
        if !r.is_zero() {
            break;
        }
        rest = quo;
        v += 1;
    }
    Ok((v, rest))
}

/// Smith form of `r` over `R[x] / (q^cap)` for squarefree `q`: the exponents of `q`
/// on the diagonal, each truncated at `cap`. Every pivot is `q^v` times a unit, so
/// each elimination pass is clean and no remainder sequences arise.
fn local_smith(r: &PolyMatrix, q: &Polynomial, cap: u64) -> Result<Local> {
    let m = r.n();
    let modulus = q.pow(cap);
    let mut t: Vec<Vec<Polynomial>> = r
        .clone()
        .into_rows()
        .into_iter()
        .map(|row| row.iter().map(|e| e.rem(&modulus)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut exps = Vec::with_capacity(m);
    for k in 0..m {
        let mut best: Option<(u64, usize, usize, Polynomial)> = None;
        for (i, row) in t.iter().enumerate().skip(k) {
            for (j, e) in row.iter().enumerate().skip(k) {
                if e.is_zero() {
                    continue;
                }
                let (v, u) = valuation(e, q, cap)?;
                if best.as_ref().is_none_or(|(bv, ..)| v < *bv) {
                    best = Some((v, i, j, u));
                }
            }
        }
        let Some((v, pi, pj, u)) = best else {
            // the rest of the diagonal vanishes modulo q^cap
            exps.resize(m, cap);
            break;
        };
        let g = u.gcd(q)?;
        if !g.is_constant() {
            return Ok(Local::Split(g));
        }
        let (_, inv, _) = u.ext_gcd(&modulus)?;
        t.swap(k, pi);
        for row in t.iter_mut() {
            row.swap(k, pj);
        }
        for j in k..m {
            t[k][j] = (&t[k][j] * &inv).rem(&modulus)?;
        }
        let qv = q.pow(v);
        for i in k + 1..m {
            if t[i][k].is_zero() {
                continue;
            }
            let w = t[i][k].div_exact(&qv);
            for j in k..m {
                if t[k][j].is_zero() {
                    continue;
                }
                let d = &t[i][j] - &(&w * &t[k][j]);
                t[i][j] = d.rem(&modulus)?;
            }
        }
        for j in k + 1..m {
            if t[k][j].is_zero() {
                continue;
            }
            let w = t[k][j].div_exact(&qv);
            for row in t.iter_mut().skip(k) {
                if row[k].is_zero() {
                    continue;
                }
                let d = &row[j] - &(&w * &row[k]);
                row[j] = d.rem(&modulus)?;
            }
        }
        exps.push(v);
    }
    exps.sort_unstable();
    Ok(Local::Exponents(exps))
}

/// Invariant factors of `xI - c`.
///
/// `xI - c` is first brought to the cyclic-block relation matrix by a change of basis
/// and elimination of its constant pivots. That matrix is then diagonalized locally
/// at each part of a coprime squarefree splitting of the characteristic polynomial,
/// and the local exponents are reassembled.
pub fn invariant_factors(c: &ExactMatrix) -> Result<InvariantFactorList> {
    let r = krylov_presentation(c);
    let m = r.n();
    if m == 1 {
        return Ok(InvariantFactorList::new(vec![r.get(0, 0).clone()]));
    }
    let field = c.field();
    let chi = (0..m).fold(Polynomial::one(field), |acc, j| &acc * r.get(j, j));
    let mut work: Vec<(Polynomial, u64)> = factor::squarefree_decomposition(&chi)?;
    let mut diag = vec![Polynomial::one(field); m];
    while let Some((q, a)) = work.pop() {
        // exponents never exceed a, so a truncated exponent below the cap is exact
        let mut cap = 2.min(a + 1);
        let local = loop {
            match local_smith(&r, &q, cap)? {
                Local::Exponents(exps) if exps.contains(&cap) && cap <= a => {
                    cap = (2 * cap).min(a + 1);
                }
                other => break other,
            }
        };
        match local {
            Local::Exponents(exps) => {
                for (d, e) in diag.iter_mut().zip(exps) {
                    *d = &*d * &q.pow(e);
                }
            }
            Local::Split(g) => {
                let h = q.div_exact(&g);
                work.push((g.monic(), a));
                work.push((h.monic(), a));
            }
        }
    }
    let factors = diag.into_iter().filter(|d| !d.is_constant()).collect();
    Ok(InvariantFactorList::new(factors))
}

/// Splits every invariant factor over the irreducible factors of the last one.
pub fn elementary_divisors_of(
    inv: &InvariantFactorList,
    config: &Config,
) -> Result<ElementaryDivisorData> {
    let last = inv.minimal_polynomial().ok_or(Error::EmptyList)?;
    let field = last.field();
    let fac = factor::factor_with(last, config)?;
    let mut occurrences = Vec::new();
    for (g, top) in &fac.factors {
        for d in &inv.factors {
            let mut rest = d.clone();
            let mut e = 0;
            while e < *top {
                let (q, r) = rest.divrem(g)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            occurrences.push((g.clone(), e, 1));
        }
    }
    Ok(ElementaryDivisorData::from_occurrences(field, occurrences))
}

/// Elementary divisors of `c` with the default seed.
pub fn elementary_divisors(c: &ExactMatrix) -> Result<ElementaryDivisorData> {
    elementary_divisors_with(c, &Config::default())
}

pub fn elementary_divisors_with(c: &ExactMatrix, config: &Config) -> Result<ElementaryDivisorData> {
    let inv = invariant_factors(c)?;
    if inv.is_empty() {
        return Ok(ElementaryDivisorData::from_occurrences(c.field(), []));
    }
    elementary_divisors_of(&inv, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Value;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn qp(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(q(), c)
    }

    fn nilpotent(sizes: &[usize]) -> ExactMatrix {
        let blocks: Vec<(Value, usize)> = sizes.iter().map(|&s| (q().zero(), s)).collect();
        ExactMatrix::jordan(q(), &blocks)
    }

    #[test]
    fn characteristic_matrix_of_jordan_block() {
        let m = characteristic_matrix(&nilpotent(&[2]));
        assert_eq!(m.get(0, 0), &qp(&[0, 1]));
        assert_eq!(m.get(0, 1), &qp(&[-1]));
        assert!(m.get(1, 0).is_zero());
    }

    #[test]
    fn local_exponents_of_hidden_primary_blocks() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (field, quad) in [
            (q(), [1, 1, 1]),
            (FieldSpec::prime(2).unwrap(), [1, 1, 1]),
            (FieldSpec::prime(3).unwrap(), [1, 0, 1]),
        ] {
            let bases = [
                Polynomial::from_ints(field, &[0, 1]),
                Polynomial::from_ints(field, &[-1, 1]),
                Polynomial::from_ints(field, &quad),
            ];
            for _ in 0..12 {
                let mut sizes: Vec<Vec<u64>> = vec![Vec::new(); bases.len()];
                let mut parts = Vec::new();
                for _ in 0..rng.gen_range(2..=5) {
                    let b = rng.gen_range(0..bases.len());
                    let s = rng.gen_range(1..=3);
                    sizes[b].push(s);
                    parts.push(ExactMatrix::companion(&bases[b].pow(s)));
                }
                let c = ExactMatrix::block_diag(field, &parts);
                let n = c.n();
                // unit lower times unit upper triangular
                let mut l = ExactMatrix::identity(field, n);
                let mut u = ExactMatrix::identity(field, n);
                for i in 0..n {
                    for j in i + 1..n {
                        l.set(j, i, field.from_i64(rng.gen_range(-1..=1)));
                        u.set(i, j, field.from_i64(rng.gen_range(-1..=1)));
                    }
                }
                let hidden = c.conjugate(&l.mul(&u).unwrap()).unwrap();
                let len = sizes.iter().map(Vec::len).max().unwrap();
                let mut expected = vec![Polynomial::one(field); len];
                for (base, s) in bases.iter().zip(&mut sizes) {
                    s.sort_unstable_by(|a, b| b.cmp(a));
                    for (k, &e) in s.iter().enumerate() {
                        expected[len - 1 - k] = &expected[len - 1 - k] * &base.pow(e);
                    }
                }
                assert_eq!(invariant_factors(&hidden).unwrap().factors, expected, "{c}");
            }
        }
    }

    #[test]
    fn cyclic_presentation_matches_direct_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for field in [q(), FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()] {
            for _ in 0..40 {
                let n = rng.gen_range(1..=6);
                // sparse entries give repeated eigenvalues and several cyclic blocks
                let rows = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| field.from_i64(if rng.gen_bool(0.6) { 0 } else { rng.gen_range(-2..=2) }))
                            .collect()
                    })
                    .collect();
                let c = ExactMatrix::from_rows(field, rows).unwrap();
                let direct = smith_normal_form(&characteristic_matrix(&c)).unwrap();
                assert_eq!(invariant_factors(&c).unwrap(), direct, "{c}");
            }
        }
    }

    #[test]
    fn invariant_factor_examples() {
        let c = ExactMatrix::companion(&qp(&[1, 0, 1]));
        assert_eq!(invariant_factors(&c).unwrap().factors, vec![qp(&[1, 0, 1])]);
        let c = ExactMatrix::identity(q(), 2);
        assert_eq!(
            invariant_factors(&c).unwrap().factors,
            vec![qp(&[-1, 1]), qp(&[-1, 1])]
        );
        let c = nilpotent(&[2, 1]);
        assert_eq!(
            invariant_factors(&c).unwrap().factors,
            vec![qp(&[0, 1]), qp(&[0, 0, 1])]
        );
    }

    #[test]
    fn elementary_divisors_of_mixed_jordan_form() {
        let one = q().one();
        let zero = q().zero();
        let c = ExactMatrix::jordan(
            q(),
            &[(one.clone(), 3), (one, 4), (zero.clone(), 3), (zero, 2)],
        );
        let e = elementary_divisors(&c).unwrap();
        let shown: Vec<String> = e.support_set().iter().map(|(b, k)| b.power_string(*k)).collect();
        assert_eq!(shown, vec!["(x - 1)^3", "(x - 1)^4", "x^2", "x^3"]);
        assert_eq!(e.total_degree(), 12);
    }

    #[test]
    fn identity_has_one_divisor_with_multiplicity() {
        let e = elementary_divisors(&ExactMatrix::identity(q(), 4)).unwrap();
        assert_eq!(e.multiset.len(), 1);
        assert_eq!(e.multiset[0].multiplicity, 4);
    }

    #[test]
    fn invariant_factors_round_trip_through_elementary_divisors() {
        let c = nilpotent(&[5, 4, 2]);
        let inv = invariant_factors(&c).unwrap();
        let e = elementary_divisors_of(&inv, &Config::default()).unwrap();
        assert_eq!(e.invariant_factors(), inv);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let zero = Polynomial::zero(q());
        let m = PolyMatrix::from_rows(q(), vec![vec![zero.clone(), zero.clone()], vec![zero.clone(), zero]])
            .unwrap();
        assert_eq!(smith_normal_form(&m), Err(Error::SingularPolyMatrix));
    }
}
