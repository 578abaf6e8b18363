use thiserror::Error;

/// Errors raised anywhere in the analyzer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields ({0} and {1})")]
    MixedFields(String, String),
    #[error("{0} is not a prime; only Q and prime fields F_p are supported")]
    NotPrime(u64),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("the zero polynomial has no square-free decomposition")]
    ZeroPolynomial,
    #[error("expected a polynomial of positive degree")]
    DegreeZeroInput,
    #[error("factorization over Q is limited to degree {limit}, got degree {degree}")]
    DegreeCeiling { degree: usize, limit: usize },
    #[error("x^m - 1 needs m >= 1")]
    NonPositiveM,
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NonSquareInput { rows: usize, cols: usize },
    #[error("polynomial matrix is singular, invariant factors are not all nonzero")]
    SingularPolyMatrix,
    #[error("the index set is empty")]
    EmptySet,
    #[error("the invariant factor list is empty")]
    EmptyList,
    #[error("polynomial {0} is reducible")]
    ReducibleInput(String),
    #[error("no squarefree norm found for shifts 0..={0}")]
    ShiftSearchExhausted(usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("sequence is not strictly decreasing: {0:?}")]
    NotStrictlyDecreasing(Vec<u64>),
    #[error("sequences have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("sequences start with different entries ({0} and {1})")]
    FirstEntryMismatch(u64, u64),
    #[error("sequence needs at least two entries")]
    SequenceTooShort,
    #[error("dimension {n} exceeds the oracle limit {limit}")]
    DimensionTooLarge { n: usize, limit: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix sizes differ ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("invalid cycle type: {0}")]
    InvalidPartition(String),
    #[error("cannot parse {0:?} as an element of {1}")]
    Parse(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
