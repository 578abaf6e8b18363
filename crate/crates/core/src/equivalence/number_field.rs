//! Isomorphism of the residue fields `R[x]/(p)` and `R[x]/(q)` for irreducible `p`, `q`.
//!
//! Over `F_p` equal degree suffices. Over `Q` the test is whether `q` has a root
//! in `K = Q[a]/(p)`, found by factoring a squarefree Trager norm.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{self, rational};
use crate::field::{is_prime_u64, FieldSpec, Value};
use crate::poly::Polynomial;
use crate::Config;

/// How a base-field comparison was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProbeMethod {
    /// Over `F_p`: fields of equal order are isomorphic.
    FiniteFieldDegree,
    /// Degrees differ, so the fields differ.
    DegreeMismatch,
    /// The two polynomials coincide.
    Identical,
    /// Both are cyclotomic; `Q(z_a) = Q(z_b)` iff `a = b` or `{a, b} = {m, 2m}` with `m` odd.
    CyclotomicIndex,
    /// Refuted by the discriminant ratio or by factorization patterns modulo small primes.
    LocalObstruction,
    /// Decided by searching for a root of `q` in `Q[x]/(p)`.
    RationalRootInExtension,
}

/// Outcome of comparing `R[x]/(p)` with `R[x]/(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClassProbe {
    pub base_c: Polynomial,
    pub base_d: Polynomial,
    pub verdict: bool,
    pub method: ProbeMethod,
}

/// `Res(a, b)` over a field by the Euclidean recurrence.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Value {
    let field = a.field();
    if a.is_zero() || b.is_zero() {
        return field.zero();
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = field.one();
    loop {
        let m = a.degree().expect("nonzero") as u64;
        let n = b.degree().expect("nonzero") as u64;
        let lb = b.leading().expect("nonzero").clone();
        if n == 0 {
            return field.mul(&acc, &field.pow(&lb, m));
        }
        let r = a.rem(&b).expect("nonzero");
        if r.is_zero() {
            return field.zero();
        }
        let dr = r.degree().expect("nonzero") as u64;
        if (m * n) % 2 == 1 {
            acc = field.neg(&acc);
        }
        acc = field.mul(&acc, &field.pow(&lb, m - dr));
        a = b;
        b = r;
    }
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &Polynomial) -> Value {
    let field = f.field();
    let n = f.degree().unwrap_or(0) as u64;
    let r = resultant(f, &f.derivative());
    let r = if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        field.neg(&r)
    } else {
        r
    };
    field
        .div(&r, f.leading().expect("nonzero"))
        .expect("nonzero leading coefficient")
}

fn rational(v: &Value) -> BigRational {
    match v {
        Value::Rational(r) => r.clone(),
        Value::Residue(r) => BigRational::from_integer(BigInt::from(*r)),
    }
}

/// Elements of `Q[a]/(p)` are polynomials reduced modulo `p`.
struct NumberField {
    modulus: Polynomial,
}

type KPoly = Vec<Polynomial>;

impl NumberField {
    fn reduce(&self, a: &Polynomial) -> Polynomial {
        a.rem(&self.modulus).expect("nonzero modulus")
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.mul_mod(b, &self.modulus)
    }

    fn inv(&self, a: &Polynomial) -> Polynomial {
        let (g, s, _) = a.ext_gcd(&self.modulus).expect("nonzero");
        debug_assert!(g.is_one(), "element is invertible in a field");
        self.reduce(&s)
    }

    fn trim(&self, mut f: KPoly) -> KPoly {
        while f.last().is_some_and(|c| c.is_zero()) {
            f.pop();
        }
        f
    }

    fn rem(&self, a: &[Polynomial], b: &[Polynomial]) -> KPoly {
        let db = b.len() - 1;
        let lead_inv = self.inv(&b[db]);
        let mut r: KPoly = a.to_vec();
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c = self.mul(&r[r.len() - 1], &lead_inv);
            for (j, bj) in b.iter().enumerate() {
                let t = self.mul(&c, bj);
                r[k + j] = &r[k + j] - &t;
            }
            r = self.trim(r);
        }
        r
    }

    /// Degree of the gcd of two nonzero polynomials over the field.
    fn gcd_degree(&self, a: KPoly, b: KPoly) -> usize {
        let (mut a, mut b) = (self.trim(a), self.trim(b));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        a.len() - 1
    }

    /// `h(x + s*a)` as a polynomial over the field.
    fn shift(&self, h: &Polynomial, s: i64) -> KPoly {
        let field = h.field();
        let sa = self.reduce(&Polynomial::monomial(field, field.from_i64(s), 1));
        let mut acc: KPoly = Vec::new();
        for c in h.coeffs().iter().rev() {
            // acc * (x + s a) + c
            let mut next: KPoly = vec![Polynomial::zero(field); acc.len() + 1];
            for (i, ai) in acc.iter().enumerate() {
                next[i + 1] = &next[i + 1] + ai;
                let t = self.mul(ai, &sa);
                next[i] = &next[i] + &t;
            }
            next[0] = &next[0] + &Polynomial::constant(field, c.clone());
            acc = self.trim(next);
        }
        acc
    }
}

/// Newton interpolation through `(x_i, y_i)` over `Q`.
fn interpolate(field: FieldSpec, xs: &[Value], ys: &[Value]) -> Polynomial {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = field.sub(&coef[i], &coef[i - 1]);
            let den = field.sub(&xs[i], &xs[i - j]);
            coef[i] = field.div(&num, &den).expect("distinct nodes");
        }
    }
    let mut acc = Polynomial::constant(field, coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        acc = &(&acc * &Polynomial::linear(field, &xs[i])) + &Polynomial::constant(field, coef[i].clone());
    }
    acc
}

/// `N_s(x) = Res_y(p(y), q(x - s y))`.
fn trager_norm(p: &Polynomial, q: &Polynomial, s: i64) -> Polynomial {
    let field = p.field();
    let points = p.deg() * q.deg() + 1;
    let mut xs = Vec::with_capacity(points);
    let mut ys = Vec::with_capacity(points);
    for i in 0..points {
        let x0 = field.from_i64(i as i64);
        // x0 - s y
        let inner = Polynomial::new(field, vec![x0.clone(), field.from_i64(-s)]);
        ys.push(resultant(p, &q.compose(&inner)));
        xs.push(x0);
    }
    interpolate(field, &xs, &ys)
}

/// Whether `q` has a root in `Q[x]/(p)`; both monic irreducible of equal degree.
fn has_root_in_extension(p: &Polynomial, q: &Polynomial, config: &Config) -> Result<bool> {
    let n = p.deg();
    let limit = 4 * p.deg() * q.deg();
    let k = NumberField { modulus: p.clone() };
    let q_k: KPoly = q
        .coeffs()
        .iter()
        .map(|c| Polynomial::constant(p.field(), c.clone()))
        .collect();
    for s in 0..=limit {
        let norm = trager_norm(p, q, s as i64);
        if !norm.is_squarefree() {
            continue;
        }
        let mut rng = config.rng();
        let monic = norm.monic();
        let factors = if monic.deg() <= 1 {
            vec![monic]
        } else {
            rational::factor_squarefree(&monic, &mut rng)
        };
        for h in factors.iter().filter(|h| h.deg() == n) {
            if k.gcd_degree(q_k.clone(), k.shift(h, s as i64)) == 1 {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    Err(Error::ShiftSearchExhausted(limit))
}

fn totient(mut m: u64) -> u64 {
    let mut out = m;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// The `m` with `f = Phi_m`, if `f` is monic irreducible and cyclotomic.
pub(crate) fn cyclotomic_index(f: &Polynomial) -> Option<u64> {
    let n = f.deg() as u64;
    let field = f.field();
    if !f.is_monic() || !f.coeffs().iter().all(|c| rational(c).is_integer()) {
        return None;
    }
    let c0 = rational(&f.coeff(0));
    if !(c0.is_one() || c0 == -BigRational::one()) {
        return None;
    }
    // phi(m) >= sqrt(m / 2)
    let x = Polynomial::x(field);
    let one = Polynomial::one(field);
    (1..=2 * n * n + 2)
        .filter(|&m| totient(m) == n)
        .find(|&m| x.pow_mod(&BigUint::from(m), f) == one)
}

fn cyclotomic_fields_isomorphic(a: u64, b: u64) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    lo == hi || (lo % 2 == 1 && hi == 2 * lo)
}

fn integral_data(f: &Polynomial) -> (BigInt, BigRational) {
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&rational::rational_parts(c).1));
    (den, rational(&discriminant(f)))
}

fn divides(d: &BigInt, ell: u64) -> bool {
    (d % BigInt::from(ell)).is_zero()
}

fn degree_pattern(f: &Polynomial, ell: u64, config: &Config) -> Vec<usize> {
    let field = FieldSpec::prime(ell).expect("prime");
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = rational(c);
            field
                .from_rational(&r)
                .expect("denominator is a unit modulo ell")
        })
        .collect();
    let reduced = Polynomial::new(field, coeffs);
    let mut degs: Vec<usize> = factor::factor_with(&reduced, config)
        .expect("positive degree")
        .factors
        .iter()
        .map(|(g, _)| g.deg())
        .collect();
    degs.sort_unstable();
    degs
}

/// Necessary conditions for `Q[x]/(p) = Q[x]/(q)`: discriminants agree up to a
/// rational square, and unramified small primes split the same way.
fn local_obstruction(p: &Polynomial, q: &Polynomial, config: &Config) -> bool {
    let (den_p, disc_p) = integral_data(p);
    let (den_q, disc_q) = integral_data(q);
    if !rational::is_rational_square(&(&disc_p / &disc_q)) {
        return true;
    }
    let bad = |ell: u64| {
        [&den_p, &den_q, disc_p.numer(), disc_p.denom(), disc_q.numer(), disc_q.denom()]
            .into_iter()
            .any(|d| divides(d, ell))
    };
    let mut tested = 0;
    let mut ell = 1;
    while tested < 8 && ell < 1000 {
        ell += 1;
        if !is_prime_u64(ell) || bad(ell) {
            continue;
        }
        tested += 1;
        if degree_pattern(p, ell, config) != degree_pattern(q, ell, config) {
            return true;
        }
    }
    false
}

/// Compares `R[x]/(p)` and `R[x]/(q)` for monic irreducible `p`, `q` over the same field.
pub(crate) fn probe_base_fields(
    p: &Polynomial,
    q: &Polynomial,
    config: &Config,
) -> Result<IsoClassProbe> {
    p.field().check_same(&q.field())?;
    let probe = |verdict, method| IsoClassProbe {
        base_c: p.clone(),
        base_d: q.clone(),
        verdict,
        method,
    };
    if p.deg() != q.deg() {
        return Ok(probe(false, ProbeMethod::DegreeMismatch));
    }
    if !p.field().is_rationals() {
        return Ok(probe(true, ProbeMethod::FiniteFieldDegree));
    }
    if p == q || p.deg() == 1 {
        return Ok(probe(true, ProbeMethod::Identical));
    }
    if let (Some(a), Some(b)) = (cyclotomic_index(p), cyclotomic_index(q)) {
        return Ok(probe(
            cyclotomic_fields_isomorphic(a, b),
            ProbeMethod::CyclotomicIndex,
        ));
    }
    if local_obstruction(p, q, config) {
        return Ok(probe(false, ProbeMethod::LocalObstruction));
    }
    let verdict = has_root_in_extension(p, q, config)?;
    Ok(probe(verdict, ProbeMethod::RationalRootInExtension))
}

/// Whether `R[x]/(p^a)` and `R[x]/(q^b)` are isomorphic algebras.
pub fn quotient_algebras_isomorphic(
    p: &Polynomial,
    a: u64,
    q: &Polynomial,
    b: u64,
) -> Result<bool> {
    quotient_algebras_isomorphic_with(p, a, q, b, &Config::default())
}

pub fn quotient_algebras_isomorphic_with(
    p: &Polynomial,
    a: u64,
    q: &Polynomial,
    b: u64,
    config: &Config,
) -> Result<bool> {
    p.field().check_same(&q.field())?;
    for f in [p, q] {
        if !factor::is_irreducible(f)? {
            return Err(Error::ReducibleInput(f.to_string()));
        }
    }
    if a != b {
        return Ok(false);
    }
    Ok(probe_base_fields(&p.monic(), &q.monic(), config)?.verdict)
}
