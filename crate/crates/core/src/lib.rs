//! Exact analysis of centralizer matrix algebras: elementary divisors over `Q`
//! and `F_p`, block structure, homological invariants, and decisions of Morita,
//! derived and almost nu-stable derived equivalence between two centralizers.

pub mod equivalence;
pub mod error;
pub mod factor;
pub mod field;
pub mod homological;
pub mod matrix;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod smith;
pub mod structure;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use equivalence::{EquivalenceKind, EquivalenceVerdict, IsoClassProbe, ProbeMethod, Relation};
pub use error::{Error, Result};
pub use factor::Factorization;
pub use field::{FieldElement, FieldKind, FieldSpec, Value};
pub use homological::{CartanBlockMatrix, DominantDimension, HomologicalReport};
pub use matrix::{ExactMatrix, PolyMatrix};
pub use oracle::OracleReport;
pub use perm::{ClosurePoint, ClosureVerdict, CycleType};
pub use poly::Polynomial;
pub use smith::{ElementaryDivisor, ElementaryDivisorData, InvariantFactorList};
pub use structure::{HJData, MaximalDivisorRecord, StructureReport};

/// Run-wide settings. The seed drives every randomized step, so equal
/// configurations give identical output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Config { seed }
    }

    pub(crate) fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}
