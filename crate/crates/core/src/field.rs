//! Exact arithmetic in the prime field `F_p`.
//!
//! [`PrimeModulus`] is a validated prime and doubles as the arithmetic
//! context for raw `u32` residues; [`PrimeFieldElement`] is the checked
//! element type used at API boundaries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime `p` with `2 <= p < 2^31`, validated by trial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduces any signed integer into `0..p`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Result<u32> {
        let a = a % self.0;
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let (mut r0, mut r1) = (self.0 as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(t0))
    }

    /// `a^e` by square-and-multiply; negative exponents invert first.
    pub fn pow(self, a: u32, e: i64) -> Result<u32> {
        let mut base = if e < 0 { self.inv(a)? } else { a % self.0 };
        let mut e = e.unsigned_abs();
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn element(self, x: i64) -> PrimeFieldElement {
        PrimeFieldElement {
            value: self.reduce(x),
            modulus: self,
        }
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(self) -> PrimeFieldElement {
        let p = self.0 as u64;
        if p == 2 {
            return self.element(1);
        }
        let factors = prime_factors(p - 1);
        let g = (2..p)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&q| self.pow(g as u32, ((p - 1) / q) as i64).unwrap() != 1)
            })
            .expect("every prime field has a primitive element");
        self.element(g as i64)
    }

    /// `|PGL(2, F_p)| = p^3 - p`.
    pub fn pgl_order(self) -> u64 {
        let p = self.0 as u64;
        p * p * p - p
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0 as u64
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A residue modulo a prime, always kept in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u32,
    modulus: PrimeModulus,
}

impl PrimeFieldElement {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        modulus.element(value)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Self> {
        Ok(PrimeFieldElement {
            value: self.modulus.inv(self.value)?,
            modulus: self.modulus,
        })
    }

    pub fn pow(self, e: i64) -> Result<Self> {
        Ok(PrimeFieldElement {
            value: self.modulus.pow(self.value, e)?,
            modulus: self.modulus,
        })
    }

    /// Multiplicative order, or `None` for zero.
    pub fn multiplicative_order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let p = self.modulus.get() as u64;
        let mut n = p - 1;
        for q in prime_factors(p - 1) {
            while n.is_multiple_of(q) && self.modulus.pow(self.value, (n / q) as i64).unwrap() == 1 {
                n /= q;
            }
        }
        Some(n)
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in field arithmetic"
        );
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        PrimeFieldElement {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        PrimeFieldElement {
            value: self.modulus.sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        PrimeFieldElement {
            value: self.modulus.mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeFieldElement {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    /// Inverse by exhaustive search, independent of the Euclid path.
    fn inv_oracle(a: u32, p: u32) -> u32 {
        (1..p).find(|b| (a as u64 * *b as u64) % p as u64 == 1).unwrap()
    }

    /// Naive repeated multiplication.
    fn pow_oracle(a: u32, e: u32, p: u32) -> u32 {
        (0..e).fold(1u64, |acc, _| acc * a as u64 % p as u64) as u32
    }

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert_eq!(PrimeModulus::new(1), Err(Error::ModulusOutOfRange(1)));
        assert_eq!(PrimeModulus::new(15), Err(Error::NotPrime(15)));
        assert_eq!(PrimeModulus::new(1 << 31), Err(Error::ModulusOutOfRange(1 << 31)));
        assert!(PrimeModulus::new(2_147_483_647).is_ok());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(fp(11).inv(1), Ok(1));
        assert_eq!(inv_oracle(2, 23), 12);
        assert_eq!(fp(23).inv(2), Ok(12));
        assert_eq!(inv_oracle(3, 23), 8);
        assert_eq!(fp(23).inv(3), Ok(8));
        assert_eq!(fp(23).inv(0), Err(Error::ZeroInverse));
        assert_eq!(fp(23).element(0).inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn inverse_matches_oracle_everywhere() {
        for p in [2u64, 3, 5, 7, 11, 13, 23, 59] {
            let m = fp(p);
            for a in 1..p as u32 {
                let b = m.inv(a).unwrap();
                assert_eq!(b, inv_oracle(a, p as u32));
                assert_eq!(m.inv(b).unwrap(), a);
            }
        }
    }

    #[test]
    fn power_examples() {
        let m = fp(23);
        assert_eq!(m.pow(7, 0), Ok(1));
        assert_eq!(pow_oracle(5, 7, 23), 17);
        assert_eq!(m.pow(5, 7), Ok(17));
        assert_eq!(pow_oracle(2, 10, 11), 1);
        assert_eq!(fp(11).pow(2, 10), Ok(1));
        assert_eq!(m.pow(0, -1), Err(Error::ZeroInverse));
        assert_eq!(m.pow(5, -7), m.inv(17));
        assert_eq!(m.pow(0, 0), Ok(1));
    }

    #[test]
    fn fermat_holds_for_small_primes() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59] {
            let m = fp(p);
            for a in 1..p as u32 {
                assert_eq!(m.pow(a, p as i64 - 1), Ok(1));
                assert_eq!(m.pow(a, 13), Ok(pow_oracle(a, 13, p as u32)));
            }
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(fp(11).primitive_element().value(), 2);
        assert_eq!(fp(23).primitive_element().value(), 5);
        assert_eq!(fp(59).primitive_element().value(), 2);
        assert_eq!(fp(7).primitive_element().value(), 3);
        assert_eq!(fp(2).primitive_element().value(), 1);
        for p in [3u64, 5, 7, 11, 13, 23, 41, 59] {
            let m = fp(p);
            let g = m.primitive_element();
            let mut seen = vec![false; p as usize];
            for k in 1..p as i64 {
                let v = g.pow(k).unwrap().value() as usize;
                assert!(!seen[v]);
                seen[v] = true;
            }
            assert_eq!(g.multiplicative_order(), Some(p - 1));
        }
    }

    #[test]
    fn element_ops() {
        let m = fp(11);
        let a = m.element(-3);
        assert_eq!(a.value(), 8);
        let b = PrimeFieldElement::new(5, m);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 3);
        assert_eq!((b - a).value(), 8);
        assert_eq!((a * b).value(), 7);
        assert_eq!((-a).value(), 3);
        assert_eq!((a * a.inv().unwrap()).value(), 1);
        assert_eq!(m.element(0).multiplicative_order(), None);
        assert_eq!(m.element(10).multiplicative_order(), Some(2));
    }
}
