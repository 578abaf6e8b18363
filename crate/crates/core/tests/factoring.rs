mod common;

use centralizer_core::factor::{
    cyclotomic, factor, factor_x_pow_m_minus_1, is_irreducible, squarefree_decomposition,
};
use centralizer_core::{Error, FieldSpec, Polynomial};
use common::*;
use proptest::prelude::*;

/// Every monic polynomial of exactly degree `d` over a small prime field.
fn monic_of_degree(field: FieldSpec, d: usize) -> Vec<Polynomial> {
    let p = field.characteristic() as i64;
    let mut out = Vec::new();
    for code in 0..p.pow(d as u32) {
        let mut coeffs: Vec<i64> = (0..d).map(|i| (code / p.pow(i as u32)) % p).collect();
        coeffs.push(1);
        out.push(Polynomial::from_ints(field, &coeffs));
    }
    out
}

/// Trial division by every monic polynomial up to half the degree.
fn irreducible_by_search(f: &Polynomial) -> bool {
    let n = f.degree().unwrap();
    (1..=n / 2).all(|d| monic_of_degree(f.field(), d).iter().all(|g| !g.divides(f)))
}

fn small_field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![2u64, 3, 5]).prop_map(fp)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_field_factors_reconstruct_and_are_irreducible(
        field in small_field(),
        coeffs in prop::collection::vec(-4i64..=4, 2..=8),
    ) {
        let f = Polynomial::from_ints(field, &coeffs);
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let fac = factor(&f).unwrap();
        prop_assert_eq!(fac.reconstruct(), f);
        for (g, e) in &fac.factors {
            prop_assert!(*e >= 1 && g.is_monic());
            prop_assert!(irreducible_by_search(g), "{} is reducible", g);
        }
        for w in fac.factors.windows(2) {
            prop_assert!(w[0].0 != w[1].0);
        }
    }

    #[test]
    fn rational_products_of_known_irreducibles(picks in prop::collection::vec((0usize..7, 1u64..=2), 1..=4)) {
        let q = q();
        let known = [
            Polynomial::from_ints(q, &[-1, 1]),
            Polynomial::from_ints(q, &[3, 1]),
            Polynomial::from_ints(q, &[1, 0, 1]),
            Polynomial::from_ints(q, &[-2, 0, 1]),
            Polynomial::from_ints(q, &[1, 1, 1]),
            Polynomial::from_ints(q, &[-2, 0, 0, 1]),
            Polynomial::from_ints(q, &[1, 0, -10, 0, 1]),
        ];
        let mut expected = vec![0u64; known.len()];
        let mut f = Polynomial::one(q);
        for (i, e) in picks {
            expected[i] += e;
            f = &f * &known[i].pow(e);
        }
        let scaled = f.scale(&q.from_i64(-3));
        let fac = factor(&scaled).unwrap();
        prop_assert_eq!(fac.reconstruct(), scaled);
        for (g, e) in known.iter().zip(&expected) {
            prop_assert_eq!(fac.multiplicity_of(g), *e);
        }
        prop_assert_eq!(fac.factors.len(), expected.iter().filter(|&&e| e > 0).count());
    }

    #[test]
    fn squarefree_parts_are_squarefree_and_coprime(
        field in prop::sample::select(vec![fp(2), fp(3), q()]),
        coeffs in prop::collection::vec(-3i64..=3, 2..=5),
        extra in 1u64..=3,
    ) {
        let g = Polynomial::from_ints(field, &coeffs);
        prop_assume!(g.degree().unwrap_or(0) >= 1);
        let f = &g.pow(extra) * &g.derivative().pow(2);
        prop_assume!(!f.is_zero());
        let parts = squarefree_decomposition(&f).unwrap();
        let mut product = Polynomial::one(field);
        for (i, (h, e)) in parts.iter().enumerate() {
            prop_assert!(h.is_squarefree());
            product = &product * &h.pow(*e);
            for (k, _) in &parts[i + 1..] {
                prop_assert!(h.gcd(k).unwrap().is_one());
            }
        }
        prop_assert_eq!(product, f.monic());
    }
}

#[test]
fn cyclotomic_degrees_and_products() {
    let phi = |m: u64| -> u64 {
        (1..=m).filter(|k| num_gcd(*k, m) == 1).count() as u64
    };
    for m in 1..=30u64 {
        let c = cyclotomic(m, q()).unwrap();
        assert_eq!(c.degree().unwrap() as u64, phi(m), "Phi_{m}");
        assert!(is_irreducible(&c).unwrap());
        let product = (1..=m)
            .filter(|d| m % d == 0)
            .fold(Polynomial::one(q()), |acc, d| &acc * &cyclotomic(d, q()).unwrap());
        assert_eq!(product, Polynomial::x_pow_minus_one(q(), m as usize));
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn x_pow_m_minus_one_over_prime_fields() {
    for p in [2u64, 3, 5, 7] {
        let field = fp(p);
        for m in 1..=24usize {
            let fac = factor_x_pow_m_minus_1(m as u64, field).unwrap();
            assert_eq!(fac.reconstruct(), Polynomial::x_pow_minus_one(field, m));
            assert_eq!(fac, factor(&Polynomial::x_pow_minus_one(field, m)).unwrap(), "m={m} p={p}");
        }
    }
    assert_eq!(factor_x_pow_m_minus_1(0, q()), Err(Error::NonPositiveM));
}

#[test]
fn input_errors() {
    assert_eq!(factor(&Polynomial::from_ints(q(), &[4])), Err(Error::DegreeZeroInput));
    let big = Polynomial::x_pow_minus_one(q(), 65);
    assert!(matches!(factor(&big), Err(Error::DegreeCeiling { degree: 65, limit: 64 })));
    assert!(factor(&Polynomial::x_pow_minus_one(fp(2), 65)).is_ok());
    assert_eq!(squarefree_decomposition(&Polynomial::zero(q())), Err(Error::ZeroPolynomial));
}
