//! Arithmetic in the prime field `F_p`.
//!
//! Elements are plain residues wrapped in [`Fp`]; every operation goes
//! through the [`FieldPrime`] that owns the modulus.

use std::fmt;

use crate::error::{Error, Result};

/// Default characteristic for all computations.
pub const DEFAULT_PRIME: u32 = 32003;

/// A prime modulus `p` with `3 <= p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldPrime(u32);

/// Canonical residue in `[0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(u32);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn from_raw(v: u32) -> Fp {
        Fp(v)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
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

impl FieldPrime {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldPrime(p as u32))
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn element(self, v: u64) -> Fp {
        Fp((v % self.0 as u64) as u32)
    }

    pub fn from_i64(self, v: i64) -> Fp {
        Fp(v.rem_euclid(self.0 as i64) as u32)
    }

    #[inline]
    pub fn add(self, a: Fp, b: Fp) -> Fp {
        let s = a.0 + b.0;
        Fp(if s >= self.0 { s - self.0 } else { s })
    }

    #[inline]
    pub fn sub(self, a: Fp, b: Fp) -> Fp {
        Fp(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.0 - b.0 })
    }

    #[inline]
    pub fn neg(self, a: Fp) -> Fp {
        Fp(if a.0 == 0 { 0 } else { self.0 - a.0 })
    }

    #[inline]
    pub fn mul(self, a: Fp, b: Fp) -> Fp {
        Fp(((a.0 as u64 * b.0 as u64) % self.0 as u64) as u32)
    }

    pub fn pow(self, a: Fp, mut e: u64) -> Fp {
        let mut base = a;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: Fp) -> Result<Fp> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero(self.0));
        }
        let (mut r0, mut r1) = (self.0 as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.from_i64(t0))
    }

    pub fn div(self, a: Fp, b: Fp) -> Result<Fp> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    pub fn symmetric(self, a: Fp) -> i64 {
        let v = a.0 as i64;
        if v > self.0 as i64 / 2 {
            v - self.0 as i64
        } else {
            v
        }
    }
}

impl Default for FieldPrime {
    fn default() -> Self {
        FieldPrime(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
