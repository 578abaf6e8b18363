//! Maximal divisors, power-index sets and the block structure of the centralizer algebra.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::ExactMatrix;
use crate::poly::Polynomial;
use crate::smith::{self, ElementaryDivisorData, InvariantFactorList};
use crate::Config;

/// A maximal divisor `base^exponent` together with its power-index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalDivisorRecord {
    pub irreducible_base: Polynomial,
    pub exponent: u64,
    /// Ascending; the largest entry equals `exponent`.
    pub power_index_set: Vec<u64>,
    pub is_reducible: bool,
}

impl MaximalDivisorRecord {
    pub fn polynomial(&self) -> Polynomial {
        self.irreducible_base.pow(self.exponent)
    }

    pub fn hj(&self) -> HJData {
        hj_data(&self.power_index_set).expect("power-index sets are nonempty")
    }
}

impl fmt::Display for MaximalDivisorRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.power_index_set.iter().map(u64::to_string).collect();
        write!(
            f,
            "{}  P = {{{}}}",
            self.irreducible_base.power_string(self.exponent),
            p.join(", ")
        )
    }
}

/// The difference multiset H and the reflected set J of a finite set of positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HJData {
    /// Strictly decreasing `m_1 > ... > m_s`.
    pub source_set: Vec<u64>,
    /// `m_1 - m_2, ..., m_{s-1} - m_s, m_s`, sorted ascending.
    pub h_multiset: Vec<u64>,
    /// `m_1, m_1 - m_2, ..., m_1 - m_s`, sorted ascending.
    pub j_set: Vec<u64>,
}

pub fn hj_data(t: &[u64]) -> Result<HJData> {
    let set: BTreeSet<u64> = t.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let desc: Vec<u64> = set.into_iter().rev().collect();
    let m1 = desc[0];
    let mut h: Vec<u64> = desc.windows(2).map(|w| w[0] - w[1]).collect();
    h.push(*desc.last().expect("nonempty"));
    h.sort_unstable();
    let mut j: Vec<u64> = std::iter::once(m1)
        .chain(desc[1..].iter().map(|m| m1 - m))
        .collect();
    j.sort_unstable();
    Ok(HJData {
        source_set: desc,
        h_multiset: h,
        j_set: j,
    })
}

/// Records for every distinct irreducible base, in canonical base order.
pub fn maximal_divisors(e: &ElementaryDivisorData) -> Vec<MaximalDivisorRecord> {
    let mut out: Vec<MaximalDivisorRecord> = Vec::new();
    for d in &e.multiset {
        match out.iter_mut().find(|r| r.irreducible_base == d.base) {
            Some(r) => {
                r.power_index_set.push(d.exponent);
                r.exponent = r.exponent.max(d.exponent);
            }
            None => out.push(MaximalDivisorRecord {
                irreducible_base: d.base.clone(),
                exponent: d.exponent,
                power_index_set: vec![d.exponent],
                is_reducible: false,
            }),
        }
    }
    for r in &mut out {
        r.power_index_set.sort_unstable();
        r.power_index_set.dedup();
        r.is_reducible = r.exponent >= 2 || r.irreducible_base.degree().unwrap_or(0) >= 2;
    }
    out.sort_by(|a, b| a.irreducible_base.canonical_cmp(&b.irreducible_base));
    out
}

/// `sum_i (2s - 2i + 1) deg d_i` over invariant factors listed by ascending divisibility.
pub fn frobenius_dimension(inv: &InvariantFactorList) -> Result<u64> {
    if inv.is_empty() {
        return Err(Error::EmptyList);
    }
    let s = inv.len() as u64;
    Ok(inv
        .factors
        .iter()
        .enumerate()
        .map(|(i, d)| (2 * s - 2 * (i as u64 + 1) + 1) * d.degree().unwrap_or(0) as u64)
        .sum())
}

/// Whether the centralizer is `R[c]`, i.e. the minimal and characteristic polynomials agree.
pub fn is_full_polynomial_centralizer(c: &ExactMatrix) -> Result<bool> {
    Ok(smith::invariant_factors(c)?.len() <= 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub field: FieldSpec,
    pub n: usize,
    pub minimal_polynomial: Polynomial,
    pub is_full_centralizer_polynomial: bool,
    pub invariant_factors: InvariantFactorList,
    pub elementary_divisors: ElementaryDivisorData,
    pub blocks: Vec<MaximalDivisorRecord>,
    pub frobenius_dimension: u64,
}

impl StructureReport {
    /// Assembles the report from invariant factors already known.
    pub fn from_invariant_factors(inv: InvariantFactorList, config: &Config) -> Result<Self> {
        let elementary = smith::elementary_divisors_of(&inv, config)?;
        Self::assemble(inv, elementary)
    }

    /// Assembles the report from elementary divisors alone; invariant factors are rebuilt.
    pub fn from_elementary_divisors(elementary: ElementaryDivisorData) -> Result<Self> {
        let inv = elementary.invariant_factors();
        Self::assemble(inv, elementary)
    }

    fn assemble(inv: InvariantFactorList, elementary: ElementaryDivisorData) -> Result<Self> {
        let minimal_polynomial = inv.minimal_polynomial().ok_or(Error::EmptyList)?.clone();
        let blocks = maximal_divisors(&elementary);
        Ok(StructureReport {
            field: elementary.field,
            n: inv.total_degree(),
            is_full_centralizer_polynomial: inv.len() == 1,
            frobenius_dimension: frobenius_dimension(&inv)?,
            minimal_polynomial,
            invariant_factors: inv,
            elementary_divisors: elementary,
            blocks,
        })
    }

    /// Number of blocks of the centralizer algebra.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

pub fn structure_report(c: &ExactMatrix) -> Result<StructureReport> {
    structure_report_with(c, &Config::default())
}

pub fn structure_report_with(c: &ExactMatrix, config: &Config) -> Result<StructureReport> {
    if c.n() == 0 {
        return Err(Error::EmptyList);
    }
    let inv = smith::invariant_factors(c)?;
    StructureReport::from_invariant_factors(inv, config)
}
