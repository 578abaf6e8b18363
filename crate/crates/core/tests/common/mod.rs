#![allow(dead_code)]

use centralizer_core::{ExactMatrix, FieldSpec, Value};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

pub fn all_fields() -> Vec<FieldSpec> {
    vec![fp(2), fp(3), fp(5), q()]
}

pub fn jordan(field: FieldSpec, blocks: &[(i64, usize)]) -> ExactMatrix {
    let b: Vec<(Value, usize)> = blocks.iter().map(|&(e, s)| (field.from_i64(e), s)).collect();
    ExactMatrix::jordan(field, &b)
}

pub fn nilpotent(sizes: &[usize]) -> ExactMatrix {
    let blocks: Vec<(i64, usize)> = sizes.iter().map(|&s| (0, s)).collect();
    jordan(q(), &blocks)
}

/// Dense matrix with small entries.
pub fn dense(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(-2..=2))).collect())
        .collect();
    ExactMatrix::from_rows(field, rows).unwrap()
}

/// Unimodular matrix built from a few elementary row operations.
pub fn invertible(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut g = ExactMatrix::identity(field, n);
    if n < 2 {
        return g;
    }
    for _ in 0..n + 2 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let k = field.from_i64(rng.gen_range(-1..=1));
        let mut e = ExactMatrix::identity(field, n);
        e.set(i, j, k);
        g = e.mul(&g).unwrap();
    }
    g
}

/// Jordan-type matrix with repeated eigenvalues, conjugated to hide the structure.
pub fn structured(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let eigen = [0i64, 1, -1, 2];
    let mut blocks = Vec::new();
    let mut left = n;
    while left > 0 {
        let size = rng.gen_range(1..=left.min(3));
        blocks.push((*eigen.choose(rng).unwrap(), size));
        left -= size;
    }
    let j = jordan(field, &blocks);
    // occasionally splice in a companion block with an irreducible quadratic
    let j = if n >= 2 && rng.gen_bool(0.25) {
        let quad = centralizer_core::Polynomial::from_ints(field, &[1, 1, 1]);
        let mut parts = vec![ExactMatrix::companion(&quad)];
        let rest: Vec<(i64, usize)> = vec![(0, n - 2)];
        if n > 2 {
            parts.push(jordan(field, &rest));
        }
        ExactMatrix::block_diag(field, &parts)
    } else {
        j
    };
    j.conjugate(&invertible(field, n, rng)).unwrap()
}

/// Mix of dense and structured matrices of size at most `max_n`.
pub fn sample(field: FieldSpec, max_n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let n = rng.gen_range(1..=max_n);
    if rng.gen_bool(0.5) {
        dense(field, n, rng)
    } else {
        structured(field, n, rng)
    }
}
