//! The cyclotomic field Q(ε) = Q[x]/Φ_n.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{int, Rational, Scalar};

type Poly = Vec<Rational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Poly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = rem.last().unwrap() / lead;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// The n-th cyclotomic polynomial, from x^n − 1 divided by Φ_d for all proper divisors d of n.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Poly> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p: Poly = vec![Rational::zero(); n as usize + 1];
    p[0] = int(-1);
    p[n as usize] = int(1);
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly_divmod(&p, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    let p = Arc::new(p);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// An element of Q(ε), ε a primitive n-th root of unity, stored as a
/// residue modulo Φ_n.
///
/// Rational constants are compatible with every order, so `zero()` and
/// `one()` need no context.
#[derive(Clone, Debug)]
pub struct CycloNumber {
    order: u32,
    coeffs: Poly,
}

impl CycloNumber {
    pub fn from_rational_in(order: u32, q: Rational) -> Self {
        let mut coeffs = vec![q];
        trim(&mut coeffs);
        CycloNumber { order, coeffs }
    }

    /// Reduce an arbitrary polynomial in ε modulo Φ_order.
    pub fn from_poly(order: u32, poly: Vec<Rational>) -> Self {
        let (_, rem) = poly_divmod(&poly, &cyclotomic_polynomial(order));
        CycloNumber { order, coeffs: rem }
    }

    /// The generator ε of Q(ε) with ε of the given order.
    pub fn epsilon(order: u32) -> Self {
        Self::from_poly(order, vec![Rational::zero(), Rational::one()])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_rational_in(self.order, Rational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    fn common_order(&self, other: &Self) -> u32 {
        if self.is_rational() {
            other.order
        } else if other.is_rational() || self.order == other.order {
            self.order
        } else {
            panic!("mixing cyclotomic numbers of orders {} and {}", self.order, other.order)
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.coeffs.is_empty() {
            return None;
        }
        let modulus = cyclotomic_polynomial(self.order);
        // Extended Euclid: track s with s·self ≡ r (mod Φ).
        let (mut r0, mut r1): (Poly, Poly) = (modulus.to_vec(), self.coeffs.clone());
        let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant since Φ is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let s: Poly = s0.into_iter().map(|x| x / &c).collect();
        Some(Self::from_poly(self.order, s))
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.order == other.order || self.is_rational())
    }
}

impl Eq for CycloNumber {}

impl Hash for CycloNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})e")?,
                _ => write!(f, "({c})e^{i}")?,
            }
        }
        write!(f, " [e^{}=1]", self.order)
    }
}

impl Zero for CycloNumber {
    fn zero() -> Self {
        CycloNumber { order: 1, coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for CycloNumber {
    fn one() -> Self {
        Self::from_rational_in(1, Rational::one())
    }
}

impl Add for CycloNumber {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let order = self.common_order(&rhs);
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] += c;
        }
        trim(&mut long);
        CycloNumber { order, coeffs: long }
    }
}

impl AddAssign for CycloNumber {
    fn add_assign(&mut self, rhs: Self) {
        let lhs = std::mem::take(self);
        *self = lhs + rhs;
    }
}

impl Default for CycloNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl Neg for CycloNumber {
    type Output = Self;

    fn neg(self) -> Self {
        CycloNumber { order: self.order, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sub for CycloNumber {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for CycloNumber {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let order = self.common_order(&rhs);
        if self.is_rational() || rhs.is_rational() {
            let coeffs = poly_mul(&self.coeffs, &rhs.coeffs);
            return CycloNumber { order, coeffs };
        }
        Self::from_poly(order, poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Div for CycloNumber {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inverse().expect("division by zero in Q(ε)");
        self * inv
    }
}

impl Scalar for CycloNumber {
    fn from_rational(q: &Rational) -> Self {
        Self::from_rational_in(1, q.clone())
    }

    fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad cyclotomic coefficient {v}"));
        let order = v.get("order").and_then(Value::as_u64).ok_or_else(bad)? as u32;
        if order == 0 {
            return Err(bad());
        }
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(Rational::from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_poly(order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn poly(xs: &[i64]) -> Poly {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), poly(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), poly(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(3), poly(&[1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), poly(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), poly(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn epsilon_has_exact_order() {
        for n in 1..=12u32 {
            let e = CycloNumber::epsilon(n);
            assert!(e.pow(n as u64).is_one(), "ε^{n} = 1");
            for k in 1..n {
                assert!(!e.pow(k as u64).is_one(), "ε^{k} ≠ 1 for order {n}");
            }
        }
        assert_eq!(CycloNumber::epsilon(2).as_rational(), Some(int(-1)));
    }

    #[test]
    fn powers_of_epsilon_sum_to_zero() {
        for n in 2..=9u32 {
            let e = CycloNumber::epsilon(n);
            let mut s = CycloNumber::zero();
            for k in 0..n {
                s += e.pow(k as u64);
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn inverses() {
        let e = CycloNumber::epsilon(5);
        let x = e.clone() * e.clone() + CycloNumber::from_rational(&rat(3, 2)) - e;
        let y = x.inverse().unwrap();
        assert!((x * y).is_one());
        assert!(CycloNumber::zero().inverse().is_none());
    }

    #[test]
    fn constants_mix_with_any_order() {
        let e = CycloNumber::epsilon(7);
        let two = CycloNumber::from_i64(2);
        assert_eq!((e.clone() * two.clone()) / two, e);
    }

    #[test]
    fn json_round_trip() {
        let e = CycloNumber::epsilon(5).pow(3) + CycloNumber::from_rational(&rat(-1, 2));
        assert_eq!(CycloNumber::from_json(&e.to_json()).unwrap(), e);
    }
}
