//! Polynomials over F_p and the modular ring `F_p[x]/(x^l - 1)`.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use std::fmt;

/// Cap on exponents accepted by the text parser; block lengths live far
/// below this and it keeps typos from allocating huge coefficient vectors.
const MAX_PARSED_EXPONENT: usize = 1 << 20;

/// A polynomial over a prime field, lowest-degree coefficient first, no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// its degree is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u16>,
}

impl FpPoly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u16>) -> Self {
        for c in &mut coeffs {
            *c %= field.p() as u16;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        FpPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        FpPoly::new(field, vec![1])
    }

    /// The monomial x.
    pub fn x(field: PrimeField) -> Self {
        FpPoly::new(field, vec![0, 1])
    }

    /// x^l - 1, the modulus of the cyclic quotient ring.
    pub fn x_pow_minus_one(field: PrimeField, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::NonPositiveLength);
        }
        let mut coeffs = vec![0u16; l + 1];
        coeffs[0] = field.neg(1);
        coeffs[l] = 1;
        Ok(FpPoly::new(field, coeffs))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` as the sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u16 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn leading(&self) -> u16 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u16; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.field.add(self.coeff(i), other.coeff(i));
        }
        FpPoly::new(self.field, out)
    }

    pub fn scaled(&self, c: u16) -> FpPoly {
        let out = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        FpPoly::new(self.field, out)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.field);
        }
        let mut out = vec![0u16; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(out[i + j], self.field.mul(a, b));
            }
        }
        FpPoly::new(self.field, out)
    }

    /// Product reduced mod x^l - 1 by exponent folding. Inputs must already
    /// have degree < l.
    pub fn mul_mod(&self, other: &FpPoly, l: usize) -> Result<FpPoly> {
        if l == 0 {
            return Err(Error::NonPositiveLength);
        }
        for p in [self, other] {
            if p.degree().is_some_and(|d| d >= l) {
                return Err(Error::InvalidInput(format!(
                    "polynomial degree {} not below modulus length {l}",
                    p.degree().unwrap()
                )));
            }
        }
        let mut out = vec![0u16; l];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let e = (i + j) % l;
                out[e] = self.field.add(out[e], self.field.mul(a, b));
            }
        }
        Ok(FpPoly::new(self.field, out))
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> FpPoly {
        if self.is_zero() || self.leading() == 1 {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("leading coefficient is nonzero");
        self.scaled(inv)
    }

    /// Division with remainder. Panics on a zero divisor.
    pub fn divmod(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        assert_eq!(self.field, divisor.field, "polynomials over different fields");
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let f = self.field;
        let dd = divisor.degree().unwrap();
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (FpPoly::zero(f), self.clone());
        }
        let mut quot = vec![0u16; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, dc));
            }
        }
        (FpPoly::new(f, quot), FpPoly::new(f, rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &FpPoly) -> Result<FpPoly> {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Parses text like `1+x+3*x^4`: terms joined by `+`, each term
    /// `c*x^e` with `c` omitted when 1 and `^e` omitted when e is 0 or 1.
    /// Whitespace is ignored.
    pub fn parse(field: PrimeField, text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let mut coeffs: Vec<u16> = Vec::new();
        let add_term = |field: PrimeField, coeffs: &mut Vec<u16>, c: u64, e: usize| {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = field.add(coeffs[e], field.reduce(c as i64));
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(Error::parse(pos, "empty polynomial"));
        }
        loop {
            skip_ws(&mut pos);
            // coefficient (optional)
            let mut coeff: Option<u64> = None;
            if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let v: u64 = text[start..pos]
                    .parse()
                    .map_err(|_| Error::parse(start, "coefficient too large"))?;
                coeff = Some(v);
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                    skip_ws(&mut pos);
                } else {
                    // bare constant term
                    add_term(field, &mut coeffs, v, 0);
                    skip_ws(&mut pos);
                    if pos == bytes.len() {
                        break;
                    }
                    if bytes[pos] != b'+' {
                        return Err(Error::parse(pos, "expected '+' between terms"));
                    }
                    pos += 1;
                    continue;
                }
            }
            // variable
            if pos >= bytes.len() || bytes[pos] != b'x' {
                return Err(Error::parse(pos, "expected 'x' or a coefficient"));
            }
            pos += 1;
            let mut exp = 1usize;
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(Error::parse(start, "expected exponent digits after '^'"));
                }
                exp = text[start..pos]
                    .parse()
                    .map_err(|_| Error::parse(start, "exponent too large"))?;
                if exp > MAX_PARSED_EXPONENT {
                    return Err(Error::parse(start, "exponent too large"));
                }
            }
            add_term(field, &mut coeffs, coeff.unwrap_or(1), exp);
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'+' {
                return Err(Error::parse(pos, "expected '+' between terms"));
            }
            pos += 1;
        }
        Ok(FpPoly::new(field, coeffs))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (c, e) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{e}")?,
                (_, 1) => write!(f, "{c}*x")?,
                (_, _) => write!(f, "{c}*x^{e}")?,
            }
        }
        Ok(())
    }
}
