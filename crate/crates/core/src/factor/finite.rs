//! Factorization over prime fields: distinct-degree factorization followed by
//! Cantor-Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::field::Value;
use crate::poly::Polynomial;

/// Splits a monic squarefree polynomial over `F_p` into its monic irreducible factors.
pub(crate) fn factor_squarefree(f: &Polynomial, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        if g.deg() == d {
            out.push(g);
        } else {
            equal_degree(&g, d, rng, &mut out);
        }
    }
    out
}

/// Groups the irreducible factors of a monic squarefree `f` by degree.
pub(crate) fn distinct_degree(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let field = f.field();
    let p = BigUint::from(field.characteristic());
    let x = Polynomial::x(field);
    let mut rest = f.clone();
    let mut h = x.rem(&rest).expect("nonzero");
    let mut out = Vec::new();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&p, &rest);
        let g = (&h - &x).gcd(&rest).expect("rest is nonzero");
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn random_poly(f: &Polynomial, rng: &mut ChaCha8Rng) -> Polynomial {
    let field = f.field();
    let p = field.characteristic();
    let coeffs = (0..f.deg()).map(|_| Value::Residue(rng.gen_range(0..p))).collect();
    Polynomial::new(field, coeffs)
}

/// Splits `f`, a product of irreducibles all of degree `d`, appending the factors to `out`.
pub(crate) fn equal_degree(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Polynomial>) {
    if f.deg() == d {
        out.push(f.clone());
        return;
    }
    let field = f.field();
    let p = field.characteristic();
    let half_exp = if p == 2 {
        None
    } else {
        Some((BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1)
    };
    loop {
        let a = random_poly(f, rng);
        if a.is_constant() {
            continue;
        }
        let g = a.gcd(f).expect("f is nonzero");
        if !g.is_one() && g.deg() < f.deg() {
            let h = f.div_exact(&g);
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
        let b = match &half_exp {
            Some(e) => &a.pow_mod(e, f) - &Polynomial::one(field),
            None => {
                // absolute trace a + a^2 + ... + a^(2^(d-1))
                let mut term = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    term = term.mul_mod(&term, f);
                    acc = &acc + &term;
                }
                acc
            }
        };
        if b.is_zero() {
            continue;
        }
        let g = b.gcd(f).expect("f is nonzero");
        if !g.is_one() && g.deg() < f.deg() {
            let h = f.div_exact(&g);
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use rand::SeedableRng;

    #[test]
    fn ddf_groups_by_degree() {
        let f5 = FieldSpec::prime(5).unwrap();
        // (x - 1)(x + 1)(x^2 + 2): x^2 + 2 has no root mod 5
        let f = &Polynomial::from_ints(f5, &[-1, 0, 1]) * &Polynomial::from_ints(f5, &[2, 0, 1]);
        let groups = distinct_degree(&f);
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].1, 1);
        assert_eq!(groups[0].0.deg(), 2);
        assert_eq!(groups[1], (Polynomial::from_ints(f5, &[2, 0, 1]), 2));
    }

    #[test]
    fn splitting_in_characteristic_two() {
        let f2 = FieldSpec::prime(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // x^15 - 1 over F_2: x + 1, x^2 + x + 1, and three quartics
        let f = Polynomial::x_pow_minus_one(f2, 15);
        let mut factors = factor_squarefree(&f, &mut rng);
        factors.sort();
        let degs: Vec<usize> = factors.iter().map(|g| g.deg()).collect();
        assert_eq!(degs, vec![1, 2, 4, 4, 4]);
        let prod = factors.iter().fold(Polynomial::one(f2), |acc, g| &acc * g);
        assert_eq!(prod, f);
    }
}
