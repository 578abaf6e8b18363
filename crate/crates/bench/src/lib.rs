//! Deterministic inputs shared by the benchmarks.

use centralizer_core::{ExactMatrix, FieldSpec, Polynomial, Value};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A Jordan-type matrix conjugated by a unimodular matrix, so its characteristic
/// matrix is dense but its invariant factors are nontrivial.
pub fn hidden_jordan(field: FieldSpec, blocks: &[(i64, usize)], seed: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b: Vec<(Value, usize)> = blocks.iter().map(|&(e, s)| (field.from_i64(e), s)).collect();
    let j = ExactMatrix::jordan(field, &b);
    let n = j.n();
    let mut g = ExactMatrix::identity(field, n);
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let k = (i + rng.gen_range(1..n)) % n;
        let mut e = ExactMatrix::identity(field, n);
        e.set(i, k, field.from_i64(rng.gen_range(-1..=1)));
        g = e.mul(&g).expect("same size");
    }
    j.conjugate(&g).expect("unimodular")
}

/// Dense matrix with entries in `-3..=3`.
pub fn dense(field: FieldSpec, n: usize, seed: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..n)
        .map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect())
        .collect();
    ExactMatrix::from_rows(field, rows).expect("square")
}

/// Product of small irreducibles over `Q` with a repeated factor, degree 14.
pub fn rational_product() -> Polynomial {
    let q = FieldSpec::rationals();
    [
        &[1, 0, -10, 0, 1][..],
        &[-2, 0, 0, 1],
        &[1, 1, 1],
        &[1, 1, 1],
        &[-5, 1],
        &[3, 0, 1],
    ]
    .iter()
    .fold(Polynomial::one(q), |acc, c| &acc * &Polynomial::from_ints(q, c))
}

/// Random monic polynomial of the given degree over `F_p`.
pub fn random_monic(p: u64, degree: usize, seed: u64) -> Polynomial {
    let field = FieldSpec::prime(p).expect("prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c: Vec<i64> = (0..degree).map(|_| rng.gen_range(0..p as i64)).collect();
    c.push(1);
    Polynomial::from_ints(field, &c)
}
