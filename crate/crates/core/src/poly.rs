//! Dense univariate polynomials over a [`FieldSpec`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, Value};

/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Value>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_elements(field: FieldSpec, coeffs: Vec<FieldElement>) -> Result<Self> {
        let mut values = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            field.check_same(&c.field())?;
            values.push(c.into_value());
        }
        Ok(Self::new(field, values))
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: FieldSpec, c: Value) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: FieldSpec) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: FieldSpec, c: Value, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    /// `x - a`.
    pub fn linear(field: FieldSpec, root: &Value) -> Self {
        Self::new(field, vec![field.neg(root), field.one()])
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(field: FieldSpec, m: usize) -> Self {
        let mut coeffs = vec![field.zero(); m + 1];
        coeffs[0] = field.from_i64(-1);
        coeffs[m] = field.add(&coeffs[m], &field.one());
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Value] {
        &self.coeffs
    }

    pub fn coefficients(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|c| self.field.element(c.clone())).collect()
    }

    pub fn coeff(&self, i: usize) -> Value {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for callers that ruled zero out.
    pub(crate) fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn leading(&self) -> Option<&Value> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Value) -> Polynomial {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    fn zip_with(&self, other: &Polynomial, op: impl Fn(&Value, &Value) -> Value) -> Polynomial {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = f.zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                op(a, b)
            })
            .collect();
        Self::new(f, coeffs)
    }

    fn add_impl(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    fn sub_impl(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.field.check_same(&other.field)?;
        Ok(self.add_impl(other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.field.check_same(&other.field)?;
        Ok(self.sub_impl(other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.field.check_same(&other.field)?;
        Ok(self.mul_impl(other))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.field.check_same(&divisor.field)?;
        let f = self.field;
        let Some(dl) = divisor.leading() else {
            return Err(Error::DivisionByZero);
        };
        let dd = divisor.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let inv = f.inv(dl)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); self.deg() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient of an exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.divrem(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.field.check_same(&other.field)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        self.field.check_same(&other.field)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = f.inv(r0.leading().expect("nonzero gcd"))?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &Polynomial) -> Result<Polynomial> {
        let g = self.gcd(other)?;
        Ok((&self.div_exact(&g) * other).monic())
    }

    pub fn derivative(&self) -> Polynomial {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        Self::new(f, coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &Value) -> Value {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, a), c))
    }

    pub fn eval_element(&self, a: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(&a.field())?;
        Ok(self.field.element(self.eval(a.value())))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let f = self.field;
        self.coeffs.iter().rev().fold(Self::zero(f), |acc, c| {
            &(&acc * inner) + &Self::constant(f, c.clone())
        })
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_mod(&self, other: &Polynomial, modulus: &Polynomial) -> Polynomial {
        (self * other).rem(modulus).expect("nonzero modulus")
    }

    /// `self^e mod modulus` for an arbitrary-precision exponent.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Polynomial) -> Polynomial {
        let mut acc = Self::one(self.field).rem(modulus).expect("nonzero modulus");
        if e.is_zero() {
            return acc;
        }
        let base = self.rem(modulus).expect("nonzero modulus");
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, modulus);
            if e.bit(i) {
                acc = acc.mul_mod(&base, modulus);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_ok_and(|g| g.is_one())
    }

    /// Ordering used for canonical reports: degree first, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Rendering suitable as a power base: parenthesized unless a bare `x`-monomial.
    pub fn to_base_string(&self) -> String {
        let s = self.to_string();
        if self.coeffs.len() <= 1 || s == "x" {
            s
        } else {
            format!("({s})")
        }
    }

    /// `base^exp` rendering, e.g. `(x - 1)^4` or `x^3`.
    pub fn power_string(&self, exp: u64) -> String {
        if exp == 1 {
            self.to_string()
        } else {
            format!("{}^{}", self.to_base_string(), exp)
        }
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.canonical_cmp(other))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.add_impl(rhs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.sub_impl(rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.mul_impl(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = self.field;
        Polynomial::new(f, self.coeffs.iter().map(|c| f.neg(c)).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = self.field;
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let negative = f.is_negative(c);
            let mag = if negative { f.neg(c) } else { c.clone() };
            if first {
                if negative {
                    write!(out, "-")?;
                }
            } else {
                write!(out, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = f.is_one(&mag);
            match i {
                0 => write!(out, "{}", f.format(&mag))?,
                _ => {
                    if !unit {
                        write!(out, "{}*", f.format(&mag))?;
                    }
                    if i == 1 {
                        write!(out, "x")?;
                    } else {
                        write!(out, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact ring operation on two polynomials over the same field.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    match op {
        PolyOp::Add => f.checked_add(g),
        PolyOp::Sub => f.checked_sub(g),
        PolyOp::Mul => f.checked_mul(g),
    }
}
