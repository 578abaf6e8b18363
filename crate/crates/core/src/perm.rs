//! Permutation matrices handled through their cycle types.
//!
//! The elementary divisors of a permutation matrix only depend on the cycle
//! type: a cycle of length `l = p^v l'` contributes `g^(p^v)` for every
//! irreducible factor `g` of `x^l' - 1`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::equivalence::{EquivalenceKind, Relation};
use crate::error::{Error, Result};
use crate::factor::{self, split_p_part};
use crate::field::FieldSpec;
use crate::matrix::ExactMatrix;
use crate::smith::ElementaryDivisorData;
use crate::structure::{hj_data, StructureReport};
use crate::Config;

/// Multiset of cycle lengths, stored in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<u64>,
}

impl CycleType {
    pub fn new(parts: &[u64]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        let mut parts = parts.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    /// Cycle type of a permutation of `{0, ..., n-1}` given by its images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in images {
            if j >= n || seen[j] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[j] = true;
        }
        let mut visited = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = images[i];
                len += 1;
            }
            parts.push(len);
        }
        Self::new(&parts)
    }

    /// Parses `"15,4"`, `"(3,2,1^15)"` or `"3 2 1^15"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPartition(s.to_string());
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let (base, rep) = match tok.split_once('^') {
                Some((b, r)) => (b, r.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let base = base.parse::<u64>().map_err(|_| bad())?;
            parts.extend(std::iter::repeat(base).take(rep));
        }
        Self::new(&parts).map_err(|_| bad())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// A permutation with this cycle type, as 0-based images.
    pub fn representative(&self) -> Vec<usize> {
        let mut images = Vec::with_capacity(self.n() as usize);
        let mut start = 0;
        for &len in &self.parts {
            let len = len as usize;
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        images
    }

    /// The cycle type with one more fixed point.
    pub fn with_fixed_point(&self) -> CycleType {
        let mut parts = self.parts.clone();
        parts.push(1);
        CycleType { parts }
    }

    fn padded(kept: Vec<u64>, n: u64) -> CycleType {
        let used: u64 = kept.iter().sum();
        let mut parts = kept;
        parts.extend(std::iter::repeat(1).take((n - used) as usize));
        CycleType::new(&parts).expect("n is positive")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&w| w == v).count();
            if run > 1 && v == 1 {
                out.push(format!("1^{run}"));
            } else {
                out.extend(std::iter::repeat(v.to_string()).take(run));
            }
            i += run;
        }
        write!(f, "({})", out.join(","))
    }
}

/// Largest `s` with `p^s | m`; zero when `p = 0`.
pub fn nu_p(m: u64, p: u64) -> u32 {
    split_p_part(m, p).0
}

/// 0/1 matrix with a one at `(i, sigma(i))`.
pub fn permutation_matrix(images: &[usize], field: FieldSpec) -> Result<ExactMatrix> {
    ExactMatrix::permutation(field, images)
}

/// Converts 1-based cycles on `{1, ..., n}` to 0-based images.
pub fn images_from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Vec<usize>> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut seen = vec![false; n];
    for cycle in cycles {
        for (k, &a) in cycle.iter().enumerate() {
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::NotAPermutation(format!("{cycles:?}")));
            }
            seen[a - 1] = true;
            let b = cycle[(k + 1) % cycle.len()];
            if b == 0 || b > n {
                return Err(Error::NotAPermutation(format!("{cycles:?}")));
            }
            images[a - 1] = b - 1;
        }
    }
    Ok(images)
}

/// Elementary divisors of the permutation matrix of cycle type `lambda`, without SNF.
pub fn permutation_elementary_divisors(
    lambda: &CycleType,
    field: FieldSpec,
) -> Result<ElementaryDivisorData> {
    permutation_elementary_divisors_with(lambda, field, &Config::default())
}

pub fn permutation_elementary_divisors_with(
    lambda: &CycleType,
    field: FieldSpec,
    config: &Config,
) -> Result<ElementaryDivisorData> {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &part in lambda.parts() {
        *counts.entry(part).or_insert(0) += 1;
    }
    let mut occurrences = Vec::new();
    for (part, count) in counts {
        let fac = factor::factor_x_pow_m_minus_1_with(part, field, config)?;
        for (g, e) in fac.factors {
            occurrences.push((g, e, count));
        }
    }
    Ok(ElementaryDivisorData::from_occurrences(field, occurrences))
}

pub fn permutation_structure_report(
    lambda: &CycleType,
    field: FieldSpec,
    config: &Config,
) -> Result<StructureReport> {
    StructureReport::from_elementary_divisors(permutation_elementary_divisors_with(
        lambda, field, config,
    )?)
}

/// The p-regular and p-singular parts, each padded with fixed points to the same degree.
pub fn regular_singular_parts(lambda: &CycleType, p: u64) -> (CycleType, CycleType) {
    let n = lambda.n();
    let divisible = |m: u64| p != 0 && m % p == 0;
    let regular = lambda.parts().iter().copied().filter(|&m| !divisible(m)).collect();
    let singular = lambda.parts().iter().copied().filter(|&m| divisible(m)).collect();
    (CycleType::padded(regular, n), CycleType::padded(singular, n))
}

/// Representation-finiteness of the centralizer of a permutation matrix:
/// all nonzero `nu_p(lambda_i)` coincide.
pub fn perm_rep_finite(lambda: &CycleType, p: u64) -> bool {
    if p == 0 {
        return true;
    }
    let nonzero: BTreeSet<u32> = lambda
        .parts()
        .iter()
        .map(|&m| nu_p(m, p))
        .filter(|&v| v > 0)
        .collect();
    nonzero.len() <= 1
}

/// Whether adding a fixed point preserves the Morita class of the centralizer.
pub fn fixed_point_extension_equivalent(lambda: &CycleType, p: u64) -> bool {
    p == 0 || lambda.parts().iter().any(|&m| m % p != 0)
}

/// Eigenvalues of one multiplicative order over the algebraic closure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClosurePoint {
    pub order: u64,
    /// Number of primitive roots of unity of this order.
    pub count: u64,
    /// Power-index set shared by each of those eigenvalues, ascending.
    pub exponent_set: Vec<u64>,
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

fn totient(m: u64) -> u64 {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count() as u64
}

/// One point per root order `d` dividing some `lambda_i'`, over an algebraically
/// closed field of characteristic `p`.
pub fn closure_structure(lambda: &CycleType, p: u64) -> Vec<ClosurePoint> {
    let mut by_order: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
    let mut divisor_cache: HashMap<u64, Vec<u64>> = HashMap::new();
    for &m in lambda.parts() {
        let (v, m_prime) = split_p_part(m, p);
        let exp = if p == 0 { 1 } else { p.pow(v) };
        let ds = divisor_cache.entry(m_prime).or_insert_with(|| divisors(m_prime));
        for &d in ds.iter() {
            by_order.entry(d).or_default().insert(exp);
        }
    }
    by_order
        .into_iter()
        .map(|(order, exps)| ClosurePoint {
            order,
            count: totient(order),
            exponent_set: exps.into_iter().collect(),
        })
        .collect()
}

/// Total number of maximal divisors over the closure.
pub fn closure_block_count(points: &[ClosurePoint]) -> u64 {
    points.iter().map(|pt| pt.count).sum()
}

fn closure_key(kind: EquivalenceKind, p: &[u64]) -> Vec<u64> {
    match kind {
        EquivalenceKind::Morita => p.to_vec(),
        EquivalenceKind::Derived => hj_data(p).expect("nonempty").h_multiset,
        EquivalenceKind::AlmostNuStable => {
            let j = hj_data(p).expect("nonempty").j_set;
            std::cmp::min(p.to_vec(), j)
        }
    }
}

/// Expanded maximal divisors as `(point index, copy)` sorted by key, with their keys.
fn expanded(points: &[ClosurePoint], kind: EquivalenceKind) -> Vec<(Vec<u64>, usize)> {
    let mut out = Vec::new();
    let mut idx = 0;
    for pt in points {
        let key = closure_key(kind, &pt.exponent_set);
        for _ in 0..pt.count {
            out.push((key.clone(), idx));
            idx += 1;
        }
    }
    out.sort();
    out
}

/// Decides one kind of equivalence over the algebraic closure. Witness pairs
/// index the expanded maximal divisors, listed point by point.
pub fn closure_relation(a: &[ClosurePoint], b: &[ClosurePoint], kind: EquivalenceKind) -> Relation {
    let (na, nb) = (closure_block_count(a), closure_block_count(b));
    if na != nb {
        return Relation {
            holds: false,
            witness: None,
            refutation: Some(format!(
                "over the closure the first matrix has {na} maximal divisors, the second has {nb}"
            )),
        };
    }
    let ea = expanded(a, kind);
    let eb = expanded(b, kind);
    if let Some(((ka, _), _)) = ea.iter().zip(&eb).find(|((ka, _), (kb, _))| ka != kb) {
        let census = |e: &[(Vec<u64>, usize)], k: &Vec<u64>| e.iter().filter(|(x, _)| x == k).count();
        return Relation {
            holds: false,
            witness: None,
            refutation: Some(format!(
                "over the closure {} eigenvalues of the first matrix carry invariant {:?} but {} of the second do",
                census(&ea, ka),
                ka,
                census(&eb, ka)
            )),
        };
    }
    let mut witness: Vec<(usize, usize)> = ea.iter().zip(&eb).map(|((_, i), (_, j))| (*i, *j)).collect();
    witness.sort_unstable();
    Relation {
        holds: true,
        witness: Some(witness),
        refutation: None,
    }
}

/// All three closure verdicts for two cycle types in characteristic `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureVerdict {
    pub morita: Relation,
    pub derived: Relation,
    pub almost_nu_stable: Relation,
}

pub fn closure_verdict(a: &CycleType, b: &CycleType, p: u64) -> ClosureVerdict {
    let pa = closure_structure(a, p);
    let pb = closure_structure(b, p);
    ClosureVerdict {
        morita: closure_relation(&pa, &pb, EquivalenceKind::Morita),
        derived: closure_relation(&pa, &pb, EquivalenceKind::Derived),
        almost_nu_stable: closure_relation(&pa, &pb, EquivalenceKind::AlmostNuStable),
    }
}

/// Every cycle type (partition) of `n`, largest parts first.
pub fn partitions(n: u64) -> Vec<CycleType> {
    fn go(rest: u64, max: u64, acc: &mut Vec<u64>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            out.push(CycleType { parts: acc.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            acc.push(k);
            go(rest - k, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}
