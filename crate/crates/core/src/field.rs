//! Arithmetic in the prime field F_p.

use crate::error::{Error, Result};
use std::fmt;

/// A prime field F_p with 2 <= p < 2^16. Elements are `u16` values reduced mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u16,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    /// Checks primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 16).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(PrimeField { p: p as u16 })
    }

    pub const fn binary() -> Self {
        PrimeField { p: 2 }
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    pub fn is_binary(&self) -> bool {
        self.p == 2
    }

    /// Reduces an arbitrary signed value into [0, p).
    pub fn reduce(&self, v: i64) -> u16 {
        v.rem_euclid(self.p as i64) as u16
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        let s = a as u32 + b as u32;
        let p = self.p as u32;
        (if s >= p { s - p } else { s }) as u16
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u16) -> u16 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        ((a as u32 * b as u32) % self.p as u32) as u16
    }

    /// Multiplicative inverse of a nonzero element, by the extended Euclidean
    /// algorithm.
    pub fn inv(&self, a: u16) -> Result<u16> {
        if a == 0 {
            return Err(Error::NonInvertible);
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, gcd must be 1");
        Ok(self.reduce(t0))
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let mut base = a % self.p;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}
