//! Factorization over `Q`: reduce to monic squarefree integer polynomials, factor
//! modulo a good prime, Hensel-lift past the Landau-Mignotte bound, and
//! recombine lifted factors (Zassenhaus).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;

use crate::factor::finite;
use crate::field::{is_prime_u64, FieldSpec, Value};
use crate::poly::Polynomial;

/// Integer polynomial, lowest degree first, no trailing zeros.
type ZPoly = Vec<BigInt>;

const CANDIDATE_PRIMES: usize = 6;

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zsym(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Exact quotient `a / b` for monic `b`, or `None` if `b` does not divide `a` over Z.
fn zdiv_monic(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    // cheap rejection on constant terms
    if !a[0].is_zero() && (b[0].is_zero() || !a[0].is_multiple_of(&b[0])) {
        return None;
    }
    let mut rem: ZPoly = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(trim(quot))
    } else {
        None
    }
}

fn to_fp(a: &[BigInt], field: FieldSpec) -> Polynomial {
    Polynomial::new(field, a.iter().map(|c| field.from_bigint(c)).collect())
}

fn from_fp(p: &Polynomial) -> ZPoly {
    p.coeffs()
        .iter()
        .map(|c| match c {
            Value::Residue(r) => BigInt::from(*r),
            Value::Rational(_) => unreachable!("expected a prime-field polynomial"),
        })
        .collect()
}

/// Factors a monic squarefree integer polynomial into monic irreducibles over Z.
fn factor_monic_squarefree(f: &[BigInt], rng: &mut ChaCha8Rng) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }

    // Pick the good prime with the fewest modular factors among a few candidates.
    let mut best: Option<(u64, Vec<Polynomial>)> = None;
    let mut found = 0;
    let mut ell = 2u64;
    while found < CANDIDATE_PRIMES {
        ell += 1;
        if !is_prime_u64(ell) {
            continue;
        }
        let field = FieldSpec::prime(ell).expect("prime");
        let fl = to_fp(f, field);
        if !fl.is_squarefree() {
            continue;
        }
        found += 1;
        let factors = finite::factor_squarefree(&fl, rng);
        if factors.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((ell, factors));
        }
    }
    let (ell, modular) = best.expect("a good prime exists");

    // Coefficients of any monic factor are bounded by 2^n * ||f||_2.
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (norm_sq.sqrt() + 1u32) << n;
    let ell_big = BigInt::from(ell);
    let mut k = 1u32;
    let mut modulus = ell_big.clone();
    while modulus <= &bound * 2u32 {
        modulus *= &ell_big;
        k += 1;
    }

    let lifted = hensel_lift(f, &modular, ell, k);
    recombine(f.to_vec(), lifted, &modulus)
}

/// Lifts `f = prod(factors) mod ell` to a factorization modulo `ell^k`.
fn hensel_lift(f: &[BigInt], factors: &[Polynomial], ell: u64, k: u32) -> Vec<ZPoly> {
    let field = factors[0].field();
    // a_i with sum_i a_i * prod_{j != i} u_j = 1 (mod ell)
    let cofactors: Vec<Polynomial> = (0..factors.len())
        .map(|i| {
            let others = factors
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Polynomial::one(field), |acc, (_, u)| &acc * u);
            let reduced = others.rem(&factors[i]).expect("nonzero");
            let (g, s, _) = reduced.ext_gcd(&factors[i]).expect("coprime factors");
            debug_assert!(g.is_one());
            s
        })
        .collect();

    let ell_big = BigInt::from(ell);
    let mut lifts: Vec<ZPoly> = factors.iter().map(from_fp).collect();
    let mut modulus = ell_big.clone();
    for _ in 1..k {
        let next = &modulus * &ell_big;
        let prod = lifts
            .iter()
            .fold(vec![BigInt::one()], |acc, u| zmod(&zmul(&acc, u), &next));
        let len = f.len().max(prod.len());
        let err: ZPoly = (0..len)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next) / &modulus
            })
            .collect();
        let err = to_fp(&trim(err), field);
        if !err.is_zero() {
            for (i, lift) in lifts.iter_mut().enumerate() {
                let delta = (&err * &cofactors[i]).rem(&factors[i]).expect("nonzero");
                for (j, c) in from_fp(&delta).into_iter().enumerate() {
                    lift[j] += &modulus * c;
                }
            }
        }
        modulus = next;
    }
    lifts
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let candidate = subset
                .iter()
                .fold(vec![BigInt::one()], |acc, &i| zmod(&zmul(&acc, &lifted[i]), modulus));
            let candidate = zsym(&candidate, modulus);
            if let Some(q) = zdiv_monic(&f, &candidate) {
                out.push(candidate);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            if !next_combination(&mut subset, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

/// Advances `idx` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Factors a monic squarefree polynomial over `Q` of degree >= 2.
pub(crate) fn factor_squarefree(g: &Polynomial, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let field = g.field();
    let n = g.deg();
    let coeffs: Vec<BigRational> = g
        .coeffs()
        .iter()
        .map(|c| match c {
            Value::Rational(r) => r.clone(),
            Value::Residue(_) => unreachable!("expected a rational polynomial"),
        })
        .collect();
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    // G(x) = den^n g(x / den) is monic with integer coefficients.
    let scaled: ZPoly = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let s = c * BigRational::from_integer(num_traits::pow(den.clone(), n - i));
            debug_assert!(s.is_integer());
            s.to_integer()
        })
        .collect();
    factor_monic_squarefree(&scaled, rng)
        .into_iter()
        .map(|h| {
            let d = h.len() - 1;
            let back: Vec<Value> = h
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let denom = num_traits::pow(den.clone(), d - i);
                    Value::Rational(BigRational::new(c.clone(), denom))
                })
                .collect();
            Polynomial::new(field, back)
        })
        .collect()
}

/// Numerator and denominator as big integers; helper for callers that need integral data.
pub(crate) fn rational_parts(v: &Value) -> (BigInt, BigInt) {
    match v {
        Value::Rational(r) => (r.numer().clone(), r.denom().clone()),
        Value::Residue(r) => (BigInt::from(*r), BigInt::one()),
    }
}

/// Whether a rational is the square of a rational.
pub(crate) fn is_rational_square(v: &BigRational) -> bool {
    if v.is_negative() {
        return false;
    }
    let is_sq = |n: &BigInt| {
        let r = n.sqrt();
        &(&r * &r) == n
    };
    is_sq(v.numer()) && is_sq(v.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn z(c: &[i64]) -> ZPoly {
        c.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn zassenhaus_splits_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // (x^2 - 2)(x^2 + 1)(x + 3)
        let f = zmul(&zmul(&z(&[-2, 0, 1]), &z(&[1, 0, 1])), &z(&[3, 1]));
        let mut parts = factor_monic_squarefree(&f, &mut rng);
        parts.sort_by_key(|p| p.len());
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], z(&[3, 1]));
    }

    #[test]
    fn swinnerton_dyer_is_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible over Q
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_monic_squarefree(&f, &mut rng).len(), 1);
    }

    #[test]
    fn combinations_enumerate() {
        let mut idx = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut idx, 4) {
            count += 1;
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn rational_squares() {
        assert!(is_rational_square(&BigRational::new(4.into(), 9.into())));
        assert!(!is_rational_square(&BigRational::new(2.into(), 1.into())));
        assert!(!is_rational_square(&BigRational::new((-4).into(), 1.into())));
    }
}
