//! Factorization into monic irreducibles over `F_p` and `Q`.

mod finite;
pub(crate) mod rational;

use std::collections::BTreeMap;
use std::fmt;

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Polynomial;
use crate::Config;

/// Largest degree accepted by the factorizer over `Q`.
pub const RATIONAL_DEGREE_LIMIT: usize = 64;

/// `unit * prod(factor^multiplicity)`, factors monic, irreducible, distinct and
/// sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(Polynomial, u64)>,
}

impl Factorization {
    fn from_map(unit: FieldElement, map: BTreeMap<Polynomial, u64>) -> Self {
        let mut factors: Vec<(Polynomial, u64)> = map.into_iter().collect();
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        Factorization { unit, factors }
    }

    pub fn field(&self) -> FieldSpec {
        self.unit.field()
    }

    /// Multiplies everything back together.
    pub fn reconstruct(&self) -> Polynomial {
        let field = self.field();
        self.factors.iter().fold(
            Polynomial::constant(field, self.unit.value().clone()),
            |acc, (g, e)| &acc * &g.pow(*e),
        )
    }

    pub fn multiplicity_of(&self, g: &Polynomial) -> u64 {
        self.factors
            .iter()
            .find(|(h, _)| h == g)
            .map_or(0, |(_, e)| *e)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(g, e)| {
                if *e == 1 && self.factors.len() > 1 {
                    g.to_base_string()
                } else {
                    g.power_string(*e)
                }
            })
            .collect();
        let field = self.field();
        if field.is_one(self.unit.value()) {
            write!(f, "{}", parts.join(" * "))
        } else {
            write!(f, "{} * {}", self.unit, parts.join(" * "))
        }
    }
}

/// Coefficient-wise p-th root of a polynomial in `x^p` over `F_p`.
fn pth_root(f: &Polynomial) -> Polynomial {
    let p = f.field().characteristic() as usize;
    let coeffs = f.coeffs().iter().step_by(p).cloned().collect();
    Polynomial::new(f.field(), coeffs)
}

fn yun(f: &Polynomial) -> Vec<(Polynomial, u64)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a = f.gcd(&df).expect("f is nonzero");
    let mut b = f.div_exact(&a);
    let mut d = &df.div_exact(&a) - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d).expect("b is nonconstant");
        let c = d.div_exact(&a);
        b = b.div_exact(&a);
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Squarefree pieces in characteristic p; the same base may show up twice
/// with different multiplicities.
fn musser(f: &Polynomial) -> Vec<(Polynomial, u64)> {
    let p = f.field().characteristic();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    if df.is_zero() {
        return musser(&pth_root(f))
            .into_iter()
            .map(|(g, e)| (g, e * p))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&df).expect("f is nonzero");
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c).expect("w is nonconstant");
        let z = w.div_exact(&y);
        if !z.is_constant() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_constant() {
        out.extend(musser(&pth_root(&c)).into_iter().map(|(g, e)| (g, e * p)));
    }
    out
}

/// Makes squarefree pieces pairwise coprime, adding multiplicities of shared factors.
fn coprime_refine(mut pieces: Vec<(Polynomial, u64)>) -> Vec<(Polynomial, u64)> {
    'restart: loop {
        for i in 0..pieces.len() {
            for j in i + 1..pieces.len() {
                let h = pieces[i].0.gcd(&pieces[j].0).expect("nonzero");
                if h.is_constant() {
                    continue;
                }
                let (ei, ej) = (pieces[i].1, pieces[j].1);
                pieces[i].0 = pieces[i].0.div_exact(&h);
                pieces[j].0 = pieces[j].0.div_exact(&h);
                pieces.push((h, ei + ej));
                pieces.retain(|(g, _)| !g.is_constant());
                continue 'restart;
            }
        }
        return pieces;
    }
}

/// Squarefree, pairwise coprime monic parts with their multiplicities, listed
/// by increasing multiplicity.
pub fn squarefree_decomposition(f: &Polynomial) -> Result<Vec<(Polynomial, u64)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic();
    let pieces = if f.field().is_rationals() {
        yun(&f)
    } else {
        coprime_refine(musser(&f))
    };
    let mut by_mult: BTreeMap<u64, Polynomial> = BTreeMap::new();
    for (g, e) in pieces {
        let slot = by_mult
            .entry(e)
            .or_insert_with(|| Polynomial::one(f.field()));
        *slot = &*slot * &g;
    }
    Ok(by_mult.into_iter().map(|(e, g)| (g.monic(), e)).collect())
}

fn factor_squarefree(g: &Polynomial, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    if g.deg() <= 1 {
        return vec![g.clone()];
    }
    if g.field().is_rationals() {
        rational::factor_squarefree(g, rng)
    } else {
        finite::factor_squarefree(g, rng)
    }
}

/// Complete factorization with the default seed.
pub fn factor(f: &Polynomial) -> Result<Factorization> {
    factor_with(f, &Config::default())
}

pub fn factor_with(f: &Polynomial, config: &Config) -> Result<Factorization> {
    let degree = f.degree().ok_or(Error::DegreeZeroInput)?;
    if degree == 0 {
        return Err(Error::DegreeZeroInput);
    }
    let field = f.field();
    if field.is_rationals() && degree > RATIONAL_DEGREE_LIMIT {
        return Err(Error::DegreeCeiling {
            degree,
            limit: RATIONAL_DEGREE_LIMIT,
        });
    }
    let unit = field.element(f.leading().expect("nonzero").clone());
    let mut rng = config.rng();
    let mut map = BTreeMap::new();
    for (g, e) in squarefree_decomposition(f)? {
        for h in factor_squarefree(&g, &mut rng) {
            *map.entry(h.monic()).or_insert(0) += e;
        }
    }
    Ok(Factorization::from_map(unit, map))
}

pub fn is_irreducible(f: &Polynomial) -> Result<bool> {
    let degree = f.degree().ok_or(Error::DegreeZeroInput)?;
    if degree == 0 {
        return Err(Error::DegreeZeroInput);
    }
    if degree == 1 {
        return Ok(true);
    }
    let fac = factor(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `Phi_d` for every divisor `d` of `m`, from `x^d - 1 = prod_{e | d} Phi_e`.
pub fn cyclotomic_family(m: u64, field: FieldSpec) -> Result<BTreeMap<u64, Polynomial>> {
    if m == 0 {
        return Err(Error::NonPositiveM);
    }
    let mut family: BTreeMap<u64, Polynomial> = BTreeMap::new();
    for d in divisors(m) {
        let mut phi = Polynomial::x_pow_minus_one(field, d as usize);
        for e in divisors(d) {
            if e < d {
                phi = phi.div_exact(&family[&e]);
            }
        }
        family.insert(d, phi);
    }
    Ok(family)
}

/// The m-th cyclotomic polynomial over `field`.
pub fn cyclotomic(m: u64, field: FieldSpec) -> Result<Polynomial> {
    let mut family = cyclotomic_family(m, field)?;
    Ok(family.remove(&m).expect("m divides itself"))
}

/// Multiplicative order of `p` modulo `d`, for coprime `p` and `d`.
pub(crate) fn multiplicative_order(p: u64, d: u64) -> u64 {
    if d == 1 {
        return 1;
    }
    let p = p % d;
    let mut acc = p;
    let mut k = 1;
    while acc != 1 {
        acc = ((acc as u128 * p as u128) % d as u128) as u64;
        k += 1;
    }
    k
}

/// Splits `m` as `p^v * m'` with `p` not dividing `m'`; `p = 0` gives `(0, m)`.
pub(crate) fn split_p_part(m: u64, p: u64) -> (u32, u64) {
    if p == 0 {
        return (0, m);
    }
    let mut v = 0;
    let mut rest = m;
    while rest % p == 0 {
        rest /= p;
        v += 1;
    }
    (v, rest)
}

/// Factorization of `x^m - 1` with the default seed.
pub fn factor_x_pow_m_minus_1(m: u64, field: FieldSpec) -> Result<Factorization> {
    factor_x_pow_m_minus_1_with(m, field, &Config::default())
}

/// Over `Q` this is the product of `Phi_d` over `d | m`. Over `F_p`, with
/// `m = p^v m'`, each `Phi_d` for `d | m'` splits into factors of degree
/// `ord_d(p)`, all carrying multiplicity `p^v`.
pub fn factor_x_pow_m_minus_1_with(
    m: u64,
    field: FieldSpec,
    config: &Config,
) -> Result<Factorization> {
    if m == 0 {
        return Err(Error::NonPositiveM);
    }
    let p = field.characteristic();
    let (v, m_prime) = split_p_part(m, p);
    let mult = if p == 0 { 1 } else { p.pow(v) };
    let family = cyclotomic_family(m_prime, field)?;
    let mut rng = config.rng();
    let mut map = BTreeMap::new();
    for (d, phi) in family {
        if p == 0 {
            map.insert(phi, mult);
            continue;
        }
        let degree = multiplicative_order(p, d) as usize;
        let mut parts = Vec::new();
        finite::equal_degree(&phi, degree, &mut rng, &mut parts);
        for g in parts {
            map.insert(g, mult);
        }
    }
    Ok(Factorization::from_map(field.int(1), map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(FieldSpec::rationals(), c)
    }

    fn fp(p: u64, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(FieldSpec::prime(p).unwrap(), c)
    }

    #[test]
    fn squarefree_over_q() {
        // (x - 1)^2 (x + 2)
        let f = &q(&[-1, 1]).pow(2) * &q(&[2, 1]);
        let parts = squarefree_decomposition(&f).unwrap();
        assert_eq!(parts, vec![(q(&[2, 1]), 1), (q(&[-1, 1]), 2)]);
        assert_eq!(
            squarefree_decomposition(&q(&[-1, 0, 0, 0, 1])).unwrap(),
            vec![(q(&[-1, 0, 0, 0, 1]), 1)]
        );
    }

    #[test]
    fn squarefree_in_characteristic_two() {
        let parts = squarefree_decomposition(&fp(2, &[1, 0, 1])).unwrap();
        assert_eq!(parts, vec![(fp(2, &[1, 1]), 2)]);
    }

    #[test]
    fn squarefree_mixed_multiplicity_mod_three() {
        // (x + 1)^4 (x + 2)^3 (x^2 + 1) over F_3: 4 = 3 + 1 splits across the recursion
        let f = &(&fp(3, &[1, 1]).pow(4) * &fp(3, &[2, 1]).pow(3)) * &fp(3, &[1, 0, 1]);
        let parts = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            parts,
            vec![
                (fp(3, &[1, 0, 1]), 1),
                (fp(3, &[2, 1]), 3),
                (fp(3, &[1, 1]), 4)
            ]
        );
    }

    #[test]
    fn zero_has_no_decomposition() {
        assert_eq!(
            squarefree_decomposition(&q(&[])),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn factor_small_examples() {
        let fac = factor(&q(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            fac.factors,
            vec![(q(&[-1, 1]), 1), (q(&[1, 1]), 1), (q(&[1, 0, 1]), 1)]
        );
        let fac = factor(&fp(5, &[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(fp(5, &[-1, 1]), 5), (fp(5, &[1, 1, 1]), 5)]);
        assert_eq!(factor(&q(&[-2, 0, 1])).unwrap().factors, vec![(q(&[-2, 0, 1]), 1)]);
        assert_eq!(factor(&q(&[5])), Err(Error::DegreeZeroInput));
    }

    #[test]
    fn factor_keeps_the_unit() {
        // 3x^2 - 3/4 = 3 (x - 1/2)(x + 1/2)
        let f = Polynomial::new(
            FieldSpec::rationals(),
            vec![
                FieldSpec::rationals().parse("-3/4").unwrap(),
                FieldSpec::rationals().zero(),
                FieldSpec::rationals().from_i64(3),
            ],
        );
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.reconstruct(), f);
    }

    #[test]
    fn degree_ceiling() {
        let mut c = vec![0; 66];
        c[0] = 1;
        c[65] = 1;
        assert_eq!(
            factor(&q(&c)),
            Err(Error::DegreeCeiling {
                degree: 65,
                limit: 64
            })
        );
    }

    #[test]
    fn irreducibility() {
        assert!(!is_irreducible(&fp(5, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&q(&[1, 0, 1])).unwrap());
        assert!(is_irreducible(&q(&[0, 1])).unwrap());
        assert!(is_irreducible(&fp(7, &[0, 1])).unwrap());
    }

    #[test]
    fn x_pow_m_minus_one() {
        let fac = factor_x_pow_m_minus_1(6, FieldSpec::rationals()).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (q(&[-1, 1]), 1),
                (q(&[1, 1]), 1),
                (q(&[1, -1, 1]), 1),
                (q(&[1, 1, 1]), 1)
            ]
        );
        let fac = factor_x_pow_m_minus_1(4, FieldSpec::prime(2).unwrap()).unwrap();
        assert_eq!(fac.factors, vec![(fp(2, &[1, 1]), 4)]);
        let fac = factor_x_pow_m_minus_1(15, FieldSpec::prime(5).unwrap()).unwrap();
        assert_eq!(fac.factors, vec![(fp(5, &[-1, 1]), 5), (fp(5, &[1, 1, 1]), 5)]);
        assert_eq!(
            factor_x_pow_m_minus_1(0, FieldSpec::rationals()),
            Err(Error::NonPositiveM)
        );
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(12, FieldSpec::rationals()).unwrap(), q(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(1, FieldSpec::rationals()).unwrap(), q(&[-1, 1]));
        assert_eq!(multiplicative_order(2, 7), 3);
        assert_eq!(split_p_part(40, 2), (3, 5));
    }
}
