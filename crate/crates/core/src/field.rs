//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! A [`FieldSpec`] names the field, a [`Value`] is a bare element in canonical
//! form, and a [`FieldElement`] pairs the two for checked public arithmetic.
//! Internal code stores bare values next to a single `FieldSpec` and calls the
//! arithmetic methods on the spec directly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field: `Q` (characteristic 0) or `F_p` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// A field element in canonical form.
///
/// Rationals are kept reduced with a positive denominator (guaranteed by
/// `BigRational`), residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Rational(BigRational),
    Residue(u64),
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Rational(a), Value::Rational(b)) => a.cmp(b),
            (Value::Residue(a), Value::Residue(b)) => a.cmp(b),
            (Value::Rational(_), Value::Residue(_)) => Ordering::Less,
            (Value::Residue(_), Value::Rational(_)) => Ordering::Greater,
        }
    }
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    /// `F_p`; fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec { characteristic: p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// `Q` for 0, `F_p` otherwise.
    pub fn from_characteristic(p: u64) -> Result<Self> {
        if p == 0 {
            Ok(Self::RATIONALS)
        } else {
            Self::prime(p)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn kind(&self) -> FieldKind {
        if self.characteristic == 0 {
            FieldKind::Rationals
        } else {
            FieldKind::PrimeField
        }
    }

    pub fn is_rationals(&self) -> bool {
        self.characteristic == 0
    }

    pub(crate) fn check_same(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MixedFields(self.to_string(), other.to_string()))
        }
    }

    pub fn zero(&self) -> Value {
        if self.is_rationals() {
            Value::Rational(BigRational::zero())
        } else {
            Value::Residue(0)
        }
    }

    pub fn one(&self) -> Value {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Value {
        if self.is_rationals() {
            Value::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = self.characteristic as i128;
            Value::Residue((v as i128).rem_euclid(p) as u64)
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Value {
        if self.is_rationals() {
            Value::Rational(BigRational::from_integer(v.clone()))
        } else {
            let p = BigInt::from(self.characteristic);
            Value::Residue(v.mod_floor(&p).to_u64().expect("residue fits in u64"))
        }
    }

    /// Maps a rational into this field (fails over `F_p` when the denominator vanishes).
    pub fn from_rational(&self, v: &BigRational) -> Result<Value> {
        if self.is_rationals() {
            Ok(Value::Rational(v.clone()))
        } else {
            let num = self.from_bigint(v.numer());
            let den = self.from_bigint(v.denom());
            self.div(&num, &den)
        }
    }

    pub fn is_zero(&self, v: &Value) -> bool {
        match v {
            Value::Rational(r) => r.is_zero(),
            Value::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self, v: &Value) -> bool {
        match v {
            Value::Rational(r) => r.is_one(),
            Value::Residue(r) => *r == 1,
        }
    }

    /// Whether `v` is a canonical element of this field.
    pub fn contains(&self, v: &Value) -> bool {
        match v {
            Value::Rational(_) => self.is_rationals(),
            Value::Residue(r) => !self.is_rationals() && *r < self.characteristic,
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Rational(x), Value::Rational(y)) => Value::Rational(x + y),
            (Value::Residue(x), Value::Residue(y)) => {
                let p = self.characteristic;
                Value::Residue(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            _ => panic!("value does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Value) -> Value {
        match a {
            Value::Rational(x) => Value::Rational(-x),
            Value::Residue(x) => {
                Value::Residue(if *x == 0 { 0 } else { self.characteristic - x })
            }
        }
    }

    pub fn sub(&self, a: &Value, b: &Value) -> Value {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Rational(x), Value::Rational(y)) => Value::Rational(x * y),
            (Value::Residue(x), Value::Residue(y)) => {
                Value::Residue(mul_mod(*x, *y, self.characteristic))
            }
            _ => panic!("value does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Value) -> Result<Value> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            Value::Rational(x) => Value::Rational(x.recip()),
            Value::Residue(x) => {
                let p = self.characteristic;
                Value::Residue(pow_mod_u64(*x, p - 2, p))
            }
        })
    }

    pub fn div(&self, a: &Value, b: &Value) -> Result<Value> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Value, mut e: u64) -> Value {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Parses an integer, or `a/b` over `Q`. Integers are reduced mod `p` over `F_p`.
    pub fn parse(&self, s: &str) -> Result<Value> {
        let t = s.trim();
        let bad = || Error::Parse(s.to_string(), self.to_string());
        if let Some((n, d)) = t.split_once('/') {
            if !self.is_rationals() {
                return Err(bad());
            }
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Value::Rational(BigRational::new(n, d)));
        }
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(self.from_bigint(&n))
    }

    pub fn format(&self, v: &Value) -> String {
        match v {
            Value::Rational(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Value::Residue(r) => r.to_string(),
        }
    }

    /// Negative values print with a leading minus sign; used by the polynomial renderer.
    pub(crate) fn is_negative(&self, v: &Value) -> bool {
        matches!(v, Value::Rational(r) if r.is_negative())
    }

    pub fn element(&self, v: Value) -> FieldElement {
        debug_assert!(self.contains(&v));
        FieldElement { field: *self, value: v }
    }

    pub fn int(&self, v: i64) -> FieldElement {
        self.element(self.from_i64(v))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            write!(f, "Q")
        } else {
            write!(f, "F_{}", self.characteristic)
        }
    }
}

/// An element tagged with its field; arithmetic is checked for field agreement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldSpec,
    value: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn new(field: FieldSpec, value: Value) -> Result<Self> {
        if field.contains(&value) {
            Ok(FieldElement { field, value })
        } else {
            Err(Error::Parse(format!("{value:?}"), field.to_string()))
        }
    }

    pub fn parse(field: FieldSpec, s: &str) -> Result<Self> {
        Ok(FieldElement { field, value: field.parse(s)? })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    pub fn apply(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        self.field.check_same(&other.field)?;
        let f = self.field;
        let value = match op {
            ArithOp::Add => f.add(&self.value, &other.value),
            ArithOp::Sub => f.sub(&self.value, &other.value),
            ArithOp::Mul => f.mul(&self.value, &other.value),
            ArithOp::Div => f.div(&self.value, &other.value)?,
        };
        Ok(FieldElement { field: f, value })
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.apply(other, ArithOp::Add)
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.apply(other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.apply(other, ArithOp::Mul)
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.apply(other, ArithOp::Div)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(&self.value))
    }
}

/// Exact `a op b`.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    a.apply(b, op)
}
