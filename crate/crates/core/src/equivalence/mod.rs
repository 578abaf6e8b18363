//! M-, D- and AD-equivalence of matrices, which decide Morita, derived and
//! almost nu-stable derived equivalence of their centralizer algebras.

pub mod matching;
pub mod number_field;

use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::matrix::ExactMatrix;
use crate::poly::Polynomial;
use crate::structure::{self, hj_data, MaximalDivisorRecord, StructureReport};
use crate::Config;

pub use number_field::{
    discriminant, quotient_algebras_isomorphic, quotient_algebras_isomorphic_with, resultant,
    IsoClassProbe, ProbeMethod,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquivalenceKind {
    /// M-equivalence: equal power-index sets.
    Morita,
    /// D-equivalence: equal difference multisets.
    Derived,
    /// AD-equivalence: `P_c = P_d` or `P_c = J(P_d)`.
    AlmostNuStable,
}

impl EquivalenceKind {
    pub const ALL: [EquivalenceKind; 3] = [
        EquivalenceKind::Morita,
        EquivalenceKind::Derived,
        EquivalenceKind::AlmostNuStable,
    ];

    pub fn label(self) -> &'static str {
        match self {
            EquivalenceKind::Morita => "Morita",
            EquivalenceKind::Derived => "derived",
            EquivalenceKind::AlmostNuStable => "almost nu-stable derived",
        }
    }

    /// The pairing condition on power-index sets.
    pub fn sets_compatible(self, pc: &[u64], pd: &[u64]) -> bool {
        match self {
            EquivalenceKind::Morita => pc == pd,
            EquivalenceKind::Derived => {
                hj_data(pc).map(|h| h.h_multiset).ok() == hj_data(pd).map(|h| h.h_multiset).ok()
            }
            EquivalenceKind::AlmostNuStable => {
                pc == pd || hj_data(pd).is_ok_and(|h| h.j_set == pc)
            }
        }
    }
}

impl fmt::Display for EquivalenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome for one kind: a witnessing bijection or a reason for failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub holds: bool,
    /// Pairs `(i, j)` matching the i-th maximal divisor of the first matrix to the j-th of the second.
    pub witness: Option<Vec<(usize, usize)>>,
    pub refutation: Option<String>,
}

impl Relation {
    fn holds_with(witness: Vec<(usize, usize)>) -> Self {
        Relation {
            holds: true,
            witness: Some(witness),
            refutation: None,
        }
    }

    fn fails_with(reason: String) -> Self {
        Relation {
            holds: false,
            witness: None,
            refutation: Some(reason),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub morita: Relation,
    pub derived: Relation,
    pub almost_nu_stable: Relation,
}

impl EquivalenceVerdict {
    pub fn m_equivalent(&self) -> bool {
        self.morita.holds
    }

    pub fn d_equivalent(&self) -> bool {
        self.derived.holds
    }

    pub fn ad_equivalent(&self) -> bool {
        self.almost_nu_stable.holds
    }

    pub fn relation(&self, kind: EquivalenceKind) -> &Relation {
        match kind {
            EquivalenceKind::Morita => &self.morita,
            EquivalenceKind::Derived => &self.derived,
            EquivalenceKind::AlmostNuStable => &self.almost_nu_stable,
        }
    }
}

/// Pairwise quotient-algebra isomorphism between the maximal divisors of two reports.
#[derive(Clone, Debug)]
pub struct IsoTable {
    admissible: Vec<Vec<bool>>,
}

impl IsoTable {
    pub fn build(c: &[MaximalDivisorRecord], d: &[MaximalDivisorRecord], config: &Config) -> Result<Self> {
        let mut cache: HashMap<(Polynomial, Polynomial), bool> = HashMap::new();
        let mut admissible = vec![vec![false; d.len()]; c.len()];
        for (i, f) in c.iter().enumerate() {
            for (j, g) in d.iter().enumerate() {
                if f.exponent != g.exponent {
                    continue;
                }
                let key = (f.irreducible_base.clone(), g.irreducible_base.clone());
                let iso = match cache.get(&key) {
                    Some(v) => *v,
                    None => {
                        let v = number_field::probe_base_fields(&key.0, &key.1, config)?.verdict;
                        cache.insert(key, v);
                        v
                    }
                };
                admissible[i][j] = iso;
            }
        }
        Ok(IsoTable { admissible })
    }

    pub fn isomorphic(&self, i: usize, j: usize) -> bool {
        self.admissible[i][j]
    }
}

fn describe_set(p: &[u64]) -> String {
    let s: Vec<String> = p.iter().map(u64::to_string).collect();
    format!("{{{}}}", s.join(", "))
}

fn decide_with_table(
    c: &[MaximalDivisorRecord],
    d: &[MaximalDivisorRecord],
    table: &IsoTable,
    kind: EquivalenceKind,
) -> Relation {
    if c.len() != d.len() {
        return Relation::fails_with(format!(
            "the first matrix has {} maximal divisors, the second has {}",
            c.len(),
            d.len()
        ));
    }
    let adj: Vec<Vec<bool>> = c
        .iter()
        .enumerate()
        .map(|(i, f)| {
            d.iter()
                .enumerate()
                .map(|(j, g)| {
                    table.isomorphic(i, j)
                        && kind.sets_compatible(&f.power_index_set, &g.power_index_set)
                })
                .collect()
        })
        .collect();
    if let Some(pairs) = matching::perfect_matching(&adj) {
        return Relation::holds_with(pairs);
    }
    let matched = matching::maximum_matching(&adj);
    let stuck = matched
        .iter()
        .position(Option::is_none)
        .expect("an imperfect matching leaves a vertex free");
    let f = &c[stuck];
    let candidates = adj[stuck].iter().filter(|&&e| e).count();
    let reason = if candidates == 0 {
        format!(
            "{} with P = {} has no partner with an isomorphic quotient and a compatible power-index set",
            f.irreducible_base.power_string(f.exponent),
            describe_set(&f.power_index_set)
        )
    } else {
        format!(
            "no bijection of maximal divisors satisfies the {} condition; {} competes for partners already taken",
            kind,
            f.irreducible_base.power_string(f.exponent)
        )
    };
    Relation::fails_with(reason)
}

/// Decides one kind of equivalence from precomputed structure reports.
pub fn decide_from_reports(
    c: &StructureReport,
    d: &StructureReport,
    kind: EquivalenceKind,
    config: &Config,
) -> Result<Relation> {
    c.field.check_same(&d.field)?;
    if c.blocks.len() != d.blocks.len() {
        return Ok(decide_with_table(&c.blocks, &d.blocks, &IsoTable { admissible: vec![] }, kind));
    }
    let table = IsoTable::build(&c.blocks, &d.blocks, config)?;
    Ok(decide_with_table(&c.blocks, &d.blocks, &table, kind))
}

/// All three kinds from precomputed reports, sharing one isomorphism table.
pub fn verdict_from_reports(
    c: &StructureReport,
    d: &StructureReport,
    config: &Config,
) -> Result<EquivalenceVerdict> {
    c.field.check_same(&d.field)?;
    let table = if c.blocks.len() == d.blocks.len() {
        IsoTable::build(&c.blocks, &d.blocks, config)?
    } else {
        IsoTable { admissible: vec![] }
    };
    let run = |kind| decide_with_table(&c.blocks, &d.blocks, &table, kind);
    Ok(EquivalenceVerdict {
        morita: run(EquivalenceKind::Morita),
        derived: run(EquivalenceKind::Derived),
        almost_nu_stable: run(EquivalenceKind::AlmostNuStable),
    })
}

pub fn decide_equivalence(c: &ExactMatrix, d: &ExactMatrix, kind: EquivalenceKind) -> Result<bool> {
    decide_equivalence_with(c, d, kind, &Config::default()).map(|r| r.holds)
}

pub fn decide_equivalence_with(
    c: &ExactMatrix,
    d: &ExactMatrix,
    kind: EquivalenceKind,
    config: &Config,
) -> Result<Relation> {
    c.field().check_same(&d.field())?;
    let rc = structure::structure_report_with(c, config)?;
    let rd = structure::structure_report_with(d, config)?;
    decide_from_reports(&rc, &rd, kind, config)
}

pub fn algebra_equivalence_report(c: &ExactMatrix, d: &ExactMatrix) -> Result<EquivalenceVerdict> {
    algebra_equivalence_report_with(c, d, &Config::default())
}

pub fn algebra_equivalence_report_with(
    c: &ExactMatrix,
    d: &ExactMatrix,
    config: &Config,
) -> Result<EquivalenceVerdict> {
    c.field().check_same(&d.field())?;
    let rc = structure::structure_report_with(c, config)?;
    let rd = structure::structure_report_with(d, config)?;
    verdict_from_reports(&rc, &rd, config)
}

/// Checks a claimed bijection directly against the definition, without matching.
pub fn replay_witness(
    c: &StructureReport,
    d: &StructureReport,
    kind: EquivalenceKind,
    witness: &[(usize, usize)],
    config: &Config,
) -> Result<bool> {
    let n = c.blocks.len();
    if d.blocks.len() != n || witness.len() != n {
        return Ok(false);
    }
    let mut left = vec![false; n];
    let mut right = vec![false; n];
    for &(i, j) in witness {
        if i >= n || j >= n || left[i] || right[j] {
            return Ok(false);
        }
        left[i] = true;
        right[j] = true;
        let (f, g) = (&c.blocks[i], &d.blocks[j]);
        let iso = quotient_algebras_isomorphic_with(
            &f.irreducible_base,
            f.exponent,
            &g.irreducible_base,
            g.exponent,
            config,
        )?;
        if !iso || !kind.sets_compatible(&f.power_index_set, &g.power_index_set) {
            return Ok(false);
        }
    }
    Ok(true)
}
