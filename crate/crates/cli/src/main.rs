//! `centralizer`: elementary-divisor structure and equivalence verdicts for centralizer algebras.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use centralizer_core::equivalence::verdict_from_reports;
use centralizer_core::perm::{
    closure_block_count, closure_structure, closure_verdict, fixed_point_extension_equivalent,
    permutation_structure_report, regular_singular_parts,
};
use centralizer_core::structure::structure_report_with;
use centralizer_core::{oracle, Config, CycleType, Error, FieldSpec, StructureReport};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use input::{read_document, Input, InputError};
use output::*;

#[derive(Parser)]
#[command(name = "centralizer", version, about = "Divisor structure and equivalence of centralizer matrix algebras")]
struct Cli {
    /// Seed for the randomized factoring steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Structure and homological report for one matrix document.
    Analyze { file: PathBuf },
    /// Morita, derived and almost nu-stable derived verdicts for two documents.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// Decide over the algebraic closure (permutation documents only).
        #[arg(long)]
        closure: bool,
    },
    /// Permutation tools on a cycle type such as "15,4" or "(3,2,1^15)".
    Perm {
        cycle_type: String,
        /// Characteristic: 0 or a prime.
        #[arg(long = "char")]
        characteristic: u64,
        #[arg(value_enum)]
        action: PermAction,
        second: Option<String>,
    },
    /// Cross-check the main path against brute-force oracles.
    Oracle { file: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PermAction {
    Analyze,
    Parts,
    Extend,
    Closure,
}

enum Failure {
    Disagreement(String),
    Input(String),
    Ceiling(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DegreeCeiling { .. } => Failure::Ceiling(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn emit<T: Serialize>(doc: &T, text: impl FnOnce() -> String, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(doc).expect("documents serialize")),
        Format::Text => print!("{}", text()),
    }
}

fn load(path: &PathBuf) -> Result<Input, Failure> {
    Ok(read_document(path)?.into_input()?)
}

/// Uses the permutation fast path when the cycle type is known.
fn report_for(input: &Input, config: &Config) -> Result<StructureReport, Failure> {
    Ok(match &input.cycle_type {
        Some(lambda) => permutation_structure_report(lambda, input.matrix.field(), config)?,
        None => structure_report_with(&input.matrix, config)?,
    })
}

fn block_labels(r: &StructureReport) -> Vec<String> {
    r.blocks
        .iter()
        .map(|b| b.irreducible_base.power_string(b.exponent))
        .collect()
}

fn analyze(file: &PathBuf, cli: &Cli, config: &Config) -> Result<(), Failure> {
    let input = load(file)?;
    let report = report_for(&input, config)?;
    let doc = ReportDocument::new(&report, cli.seed, input.cycle_type.as_ref());
    emit(&doc, || doc.to_text(), cli.format);
    Ok(())
}

fn compare(a: &PathBuf, b: &PathBuf, closure: bool, cli: &Cli, config: &Config) -> Result<(), Failure> {
    let (ia, ib) = (load(a)?, load(b)?);
    let field = ia.matrix.field();
    if field != ib.matrix.field() {
        return Err(Failure::Input(format!(
            "field mismatch: {} is over {field}, {} is over {}",
            a.display(),
            b.display(),
            ib.matrix.field()
        )));
    }
    let provenance = Provenance::new(cli.seed, field);
    let doc = if closure {
        let (Some(la), Some(lb)) = (&ia.cycle_type, &ib.cycle_type) else {
            return Err(Failure::Input("--closure needs permutation shorthand in both documents".into()));
        };
        let p = field.characteristic();
        CompareDocument {
            provenance,
            mode: "closure".into(),
            maximal_divisors_a: closure_point_labels(&closure_structure(la, p)),
            maximal_divisors_b: closure_point_labels(&closure_structure(lb, p)),
            verdict: (&closure_verdict(la, lb, p)).into(),
        }
    } else {
        let (ra, rb) = (report_for(&ia, config)?, report_for(&ib, config)?);
        CompareDocument {
            provenance,
            mode: "field".into(),
            maximal_divisors_a: block_labels(&ra),
            maximal_divisors_b: block_labels(&rb),
            verdict: (&verdict_from_reports(&ra, &rb, config)?).into(),
        }
    };
    emit(&doc, || doc.to_text(), cli.format);
    Ok(())
}

fn parse_type(s: &str) -> Result<CycleType, Failure> {
    CycleType::parse(s).map_err(|e| Failure::Input(e.to_string()))
}

fn perm(
    cycle_type: &str,
    p: u64,
    action: PermAction,
    second: Option<&str>,
    cli: &Cli,
    config: &Config,
) -> Result<(), Failure> {
    let field = FieldSpec::from_characteristic(p)?;
    let first = parse_type(cycle_type)?;
    let second = second.map(parse_type).transpose()?;
    let name = match action {
        PermAction::Analyze => "analyze",
        PermAction::Parts => "parts",
        PermAction::Extend => "extend",
        PermAction::Closure => "closure",
    };
    let mut doc = PermDocument::new(Provenance::new(cli.seed, field), name);
    match action {
        PermAction::Analyze | PermAction::Extend if second.is_some() => {
            return Err(Failure::Input(format!("perm {name} takes a single cycle type")));
        }
        PermAction::Analyze => {
            let report = permutation_structure_report(&first, field, config)?;
            doc.report = Some(ReportDocument::new(&report, cli.seed, Some(&first)));
        }
        PermAction::Parts => {
            let Some(second) = second else {
                return Err(Failure::Input("perm parts needs a second cycle type".into()));
            };
            let (ra, sa) = regular_singular_parts(&first, p);
            let (rb, sb) = regular_singular_parts(&second, p);
            for (lambda, r, s) in [(&first, &ra, &sa), (&second, &rb, &sb)] {
                doc.parts.push(PartsDto {
                    cycle_type: lambda.to_string(),
                    regular: r.to_string(),
                    singular: s.to_string(),
                });
            }
            let over_field = |x: &CycleType, y: &CycleType| -> Result<VerdictDto, Failure> {
                let rx = permutation_structure_report(x, field, config)?;
                let ry = permutation_structure_report(y, field, config)?;
                Ok((&verdict_from_reports(&rx, &ry, config)?).into())
            };
            doc.prime_field = Some(PartsVerdicts {
                regular_parts: over_field(&ra, &rb)?,
                singular_parts: over_field(&sa, &sb)?,
                full: over_field(&first, &second)?,
            });
            doc.closure = Some(PartsVerdicts {
                regular_parts: (&closure_verdict(&ra, &rb, p)).into(),
                singular_parts: (&closure_verdict(&sa, &sb, p)).into(),
                full: (&closure_verdict(&first, &second, p)).into(),
            });
        }
        PermAction::Extend => {
            doc.extended = Some(first.with_fixed_point().to_string());
            doc.extension_morita_equivalent = Some(fixed_point_extension_equivalent(&first, p));
        }
        PermAction::Closure => {
            for lambda in std::iter::once(&first).chain(second.as_ref()) {
                let points = closure_structure(lambda, p);
                doc.census.push(ClosureCensus {
                    cycle_type: lambda.to_string(),
                    maximal_divisors: closure_block_count(&points),
                    points: points.iter().map(Into::into).collect(),
                });
            }
            if let Some(second) = &second {
                doc.closure_verdict = Some((&closure_verdict(&first, second, p)).into());
            }
        }
    }
    emit(&doc, || doc.to_text(), cli.format);
    Ok(())
}

fn run_oracle(file: &PathBuf, cli: &Cli, config: &Config) -> Result<(), Failure> {
    let input = load(file)?;
    let reports = oracle::run_oracles(&input.matrix, config)?;
    let checks: Vec<OracleCheck> = reports.iter().map(Into::into).collect();
    let all_agree = checks.iter().all(|c| c.agree);
    let doc = OracleDocument {
        provenance: Provenance::new(cli.seed, input.matrix.field()),
        checks,
        all_agree,
    };
    emit(&doc, || doc.to_text(), cli.format);
    if all_agree {
        Ok(())
    } else {
        let bad: Vec<String> = doc
            .checks
            .iter()
            .filter(|c| !c.agree)
            .map(|c| format!("{}: main path {} vs oracle {}", c.kind, c.main_path, c.oracle))
            .collect();
        Err(Failure::Disagreement(bad.join("; ")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = Config::with_seed(cli.seed);
    let result = match &cli.command {
        Command::Analyze { file } => analyze(file, &cli, &config),
        Command::Compare { a, b, closure } => compare(a, b, *closure, &cli, &config),
        Command::Perm {
            cycle_type,
            characteristic,
            action,
            second,
        } => perm(cycle_type, *characteristic, *action, second.as_deref(), &cli, &config),
        Command::Oracle { file } => run_oracle(file, &cli, &config),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement(msg)) => {
            eprintln!("oracle disagreement: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Ceiling(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
