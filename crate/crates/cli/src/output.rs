//! Serializable documents emitted by the subcommands and their text renderings.

use std::fmt::Write as _;

use centralizer_core::homological::homological_report;
use centralizer_core::{
    ClosurePoint, ClosureVerdict, CycleType, EquivalenceVerdict, FieldSpec, OracleReport, Relation,
    StructureReport,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub field: String,
}

impl Provenance {
    pub fn new(seed: u64, field: FieldSpec) -> Self {
        Provenance {
            tool: "centralizer".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            seed,
            field: field.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryDivisorDto {
    pub base: String,
    pub exponent: u64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDto {
    pub maximal_divisor: String,
    pub base: String,
    pub exponent: u64,
    pub power_index_set: Vec<u64>,
    pub h_multiset: Vec<u64>,
    pub j_set: Vec<u64>,
    pub reducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDto {
    pub n: usize,
    pub minimal_polynomial: String,
    pub full_polynomial_centralizer: bool,
    pub invariant_factors: Vec<String>,
    pub elementary_divisors: Vec<ElementaryDivisorDto>,
    pub maximal_divisors: Vec<BlockDto>,
    pub frobenius_dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalDto {
    pub rep_finite: bool,
    pub dominant_dimension: String,
    pub findim_finite: bool,
    pub symmetric_nakayama: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle_type: Option<String>,
    pub structure: StructureDto,
    pub homological: HomologicalDto,
}

impl ReportDocument {
    pub fn new(report: &StructureReport, seed: u64, cycle_type: Option<&CycleType>) -> Self {
        let h = homological_report(report);
        let structure = StructureDto {
            n: report.n,
            minimal_polynomial: report.minimal_polynomial.to_string(),
            full_polynomial_centralizer: report.is_full_centralizer_polynomial,
            invariant_factors: report.invariant_factors.factors.iter().map(|d| d.to_string()).collect(),
            elementary_divisors: report
                .elementary_divisors
                .multiset
                .iter()
                .map(|e| ElementaryDivisorDto {
                    base: e.base.to_string(),
                    exponent: e.exponent,
                    multiplicity: e.multiplicity,
                })
                .collect(),
            maximal_divisors: report
                .blocks
                .iter()
                .map(|b| {
                    let hj = b.hj();
                    BlockDto {
                        maximal_divisor: b.irreducible_base.power_string(b.exponent),
                        base: b.irreducible_base.to_string(),
                        exponent: b.exponent,
                        power_index_set: b.power_index_set.clone(),
                        h_multiset: hj.h_multiset,
                        j_set: hj.j_set,
                        reducible: b.is_reducible,
                    }
                })
                .collect(),
            frobenius_dimension: report.frobenius_dimension,
        };
        ReportDocument {
            provenance: Provenance::new(seed, report.field),
            cycle_type: cycle_type.map(|c| c.to_string()),
            structure,
            homological: HomologicalDto {
                rep_finite: h.rep_finite,
                dominant_dimension: h.dominant_dimension.to_string(),
                findim_finite: h.findim_finite,
                symmetric_nakayama: h.is_symmetric_nakayama,
            },
        }
    }

    pub fn to_text(&self) -> String {
        let s = &self.structure;
        let mut out = String::new();
        let _ = writeln!(out, "field: {}  n = {}", self.provenance.field, s.n);
        if let Some(c) = &self.cycle_type {
            let _ = writeln!(out, "cycle type: {c}");
        }
        let _ = writeln!(out, "minimal polynomial: {}", s.minimal_polynomial);
        let _ = writeln!(out, "invariant factors: [{}]", s.invariant_factors.join(", "));
        let eds: Vec<String> = s
            .elementary_divisors
            .iter()
            .map(|e| {
                let base = if e.exponent == 1 || !e.base.contains(' ') {
                    e.base.clone()
                } else {
                    format!("({})", e.base)
                };
                let power = if e.exponent == 1 { base } else { format!("{base}^{}", e.exponent) };
                if e.multiplicity == 1 {
                    power
                } else {
                    format!("{power} x{}", e.multiplicity)
                }
            })
            .collect();
        let _ = writeln!(out, "elementary divisors: {}", eds.join(", "));
        let _ = writeln!(out, "maximal divisors:");
        for b in &s.maximal_divisors {
            let _ = writeln!(
                out,
                "  {}  P = {:?}  H = {:?}  J = {:?}",
                b.maximal_divisor, b.power_index_set, b.h_multiset, b.j_set
            );
        }
        let _ = writeln!(out, "centralizer dimension: {}", s.frobenius_dimension);
        let _ = writeln!(out, "full polynomial centralizer: {}", s.full_polynomial_centralizer);
        let h = &self.homological;
        let _ = writeln!(out, "representation-finite: {}", h.rep_finite);
        let _ = writeln!(out, "dominant dimension: {}", h.dominant_dimension);
        let _ = writeln!(out, "finitistic dimension finite: {}", h.findim_finite);
        let _ = writeln!(out, "symmetric Nakayama: {}", h.symmetric_nakayama);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDto {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refutation: Option<String>,
}

impl From<&Relation> for RelationDto {
    fn from(r: &Relation) -> Self {
        RelationDto {
            holds: r.holds,
            witness: r.witness.clone(),
            refutation: r.refutation.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDto {
    pub morita: RelationDto,
    pub derived: RelationDto,
    pub almost_nu_stable_derived: RelationDto,
}

impl From<&EquivalenceVerdict> for VerdictDto {
    fn from(v: &EquivalenceVerdict) -> Self {
        VerdictDto {
            morita: (&v.morita).into(),
            derived: (&v.derived).into(),
            almost_nu_stable_derived: (&v.almost_nu_stable).into(),
        }
    }
}

impl From<&ClosureVerdict> for VerdictDto {
    fn from(v: &ClosureVerdict) -> Self {
        VerdictDto {
            morita: (&v.morita).into(),
            derived: (&v.derived).into(),
            almost_nu_stable_derived: (&v.almost_nu_stable).into(),
        }
    }
}

impl VerdictDto {
    fn summary(&self) -> String {
        format!(
            "morita {}, derived {}, almost nu-stable derived {}",
            self.morita.holds, self.derived.holds, self.almost_nu_stable_derived.holds
        )
    }
}

/// Verdict of `compare`. Witness pairs index `maximal_divisors_a` and `maximal_divisors_b`
/// in field mode, and the expanded closure points in closure mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareDocument {
    pub provenance: Provenance,
    pub mode: String,
    pub maximal_divisors_a: Vec<String>,
    pub maximal_divisors_b: Vec<String>,
    #[serde(flatten)]
    pub verdict: VerdictDto,
}

impl CompareDocument {
    pub fn to_text(&self) -> String {
        let mut out = format!("mode: {} over {}\n", self.mode, self.provenance.field);
        let _ = writeln!(out, "a: {}", self.maximal_divisors_a.join(", "));
        let _ = writeln!(out, "b: {}", self.maximal_divisors_b.join(", "));
        for (name, r) in [
            ("morita", &self.verdict.morita),
            ("derived", &self.verdict.derived),
            ("almost nu-stable derived", &self.verdict.almost_nu_stable_derived),
        ] {
            let _ = write!(out, "{name}: {}", r.holds);
            if let Some(w) = &r.witness {
                let _ = write!(out, "  witness {w:?}");
            }
            if let Some(why) = &r.refutation {
                let _ = write!(out, "  ({why})");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosurePointDto {
    pub order: u64,
    pub count: u64,
    pub exponent_set: Vec<u64>,
}

impl From<&ClosurePoint> for ClosurePointDto {
    fn from(p: &ClosurePoint) -> Self {
        ClosurePointDto {
            order: p.order,
            count: p.count,
            exponent_set: p.exponent_set.clone(),
        }
    }
}

pub fn closure_point_labels(points: &[ClosurePoint]) -> Vec<String> {
    points
        .iter()
        .map(|p| format!("order {} x{} P = {:?}", p.order, p.count, p.exponent_set))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureCensus {
    pub cycle_type: String,
    pub maximal_divisors: u64,
    pub points: Vec<ClosurePointDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartsDto {
    pub cycle_type: String,
    pub regular: String,
    pub singular: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartsVerdicts {
    pub regular_parts: VerdictDto,
    pub singular_parts: VerdictDto,
    pub full: VerdictDto,
}

/// Output of `perm`; the populated fields depend on the subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermDocument {
    pub provenance: Provenance,
    pub subcommand: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDocument>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartsDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime_field: Option<PartsVerdicts>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<PartsVerdicts>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extended: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension_morita_equivalent: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub census: Vec<ClosureCensus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure_verdict: Option<VerdictDto>,
}

impl PermDocument {
    pub fn new(provenance: Provenance, subcommand: &str) -> Self {
        PermDocument {
            provenance,
            subcommand: subcommand.into(),
            report: None,
            parts: Vec::new(),
            prime_field: None,
            closure: None,
            extended: None,
            extension_morita_equivalent: None,
            census: Vec::new(),
            closure_verdict: None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(r) = &self.report {
            out.push_str(&r.to_text());
        }
        for p in &self.parts {
            let _ = writeln!(out, "{}: regular part {}, singular part {}", p.cycle_type, p.regular, p.singular);
        }
        for (label, v) in [("over the prime field", &self.prime_field), ("over the closure", &self.closure)] {
            if let Some(v) = v {
                let _ = writeln!(out, "{label}:");
                let _ = writeln!(out, "  regular parts: {}", v.regular_parts.summary());
                let _ = writeln!(out, "  singular parts: {}", v.singular_parts.summary());
                let _ = writeln!(out, "  full types: {}", v.full.summary());
            }
        }
        if let (Some(e), Some(eq)) = (&self.extended, self.extension_morita_equivalent) {
            let _ = writeln!(out, "adding a fixed point gives {e}; Morita class preserved: {eq}");
        }
        for c in &self.census {
            let _ = writeln!(out, "{}: {} maximal divisors over the closure", c.cycle_type, c.maximal_divisors);
            for p in &c.points {
                let _ = writeln!(out, "  order {} x{}  P = {:?}", p.order, p.count, p.exponent_set);
            }
        }
        if let Some(v) = &self.closure_verdict {
            let _ = writeln!(out, "closure verdict: {}", v.summary());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub kind: String,
    pub main_path: String,
    pub oracle: String,
    pub agree: bool,
}

impl From<&OracleReport> for OracleCheck {
    fn from(r: &OracleReport) -> Self {
        OracleCheck {
            kind: r.kind.clone(),
            main_path: r.expected.clone(),
            oracle: r.observed.clone(),
            agree: r.agree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub provenance: Provenance,
    pub checks: Vec<OracleCheck>,
    pub all_agree: bool,
}

impl OracleDocument {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.agree { "agree" } else { "DISAGREE" };
            let _ = writeln!(out, "{}: {status} (main path {}, oracle {})", c.kind, c.main_path, c.oracle);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::de::DeserializeOwned;
    use std::path::Path;

    fn round_trips<T: Serialize + DeserializeOwned>(text: &str) {
        let doc: T = serde_json::from_str(text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", text);
    }

    #[test]
    fn golden_documents_round_trip_byte_identically() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
        let mut seen = 0;
        for entry in std::fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            if !name.ends_with(".json") {
                continue;
            }
            let text = std::fs::read_to_string(&path).unwrap();
            match name.split('_').next().unwrap() {
                "analyze" => round_trips::<ReportDocument>(&text),
                "compare" => round_trips::<CompareDocument>(&text),
                "perm" => round_trips::<PermDocument>(&text),
                "oracle" => round_trips::<OracleDocument>(&text),
                other => panic!("unexpected golden file prefix {other}"),
            }
            seen += 1;
        }
        assert!(seen >= 10);
    }

    #[test]
    fn generated_reports_round_trip() {
        use centralizer_core::perm::{partitions, permutation_structure_report};
        use centralizer_core::{Config, FieldSpec};
        for p in [0, 2, 3] {
            let field = FieldSpec::from_characteristic(p).unwrap();
            for lambda in partitions(6) {
                let r = permutation_structure_report(&lambda, field, &Config::default()).unwrap();
                let doc = ReportDocument::new(&r, 0, Some(&lambda));
                round_trips::<ReportDocument>(&(serde_json::to_string_pretty(&doc).unwrap() + "\n"));
            }
        }
    }
}
