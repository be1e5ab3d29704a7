//! The Chow ring of projective space, `A_*(P^n) = Z[H]/(H^{n+1})`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Σ_j c_j H^j` with `j` the codimension; always exactly `n + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    pub fn new(n: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != n + 1 {
            return Err(Error::Invariant(format!("class in P^{n} needs {} coefficients, got {}", n + 1, coeffs.len())));
        }
        Ok(ChowClass { n, coeffs })
    }

    /// Coefficients past `H^n` are dropped, missing ones are zero.
    pub fn truncated(n: usize, coeffs: &[BigInt]) -> Self {
        let mut c: Vec<BigInt> = coeffs.iter().take(n + 1).cloned().collect();
        c.resize(n + 1, BigInt::zero());
        ChowClass { n, coeffs: c }
    }

    pub fn from_i64(n: usize, coeffs: &[i64]) -> Self {
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        ChowClass::truncated(n, &big)
    }

    pub fn zero(n: usize) -> Self {
        ChowClass { n, coeffs: vec![BigInt::zero(); n + 1] }
    }

    pub fn one(n: usize) -> Self {
        ChowClass::hyperplane_power(n, 0)
    }

    /// `H^j` (zero when `j > n`).
    pub fn hyperplane_power(n: usize, j: usize) -> Self {
        let mut c = ChowClass::zero(n);
        if j <= n {
            c.coeffs[j] = BigInt::one();
        }
        c
    }

    /// `(1 + dH)^e`, with negative `e` expanded as a power series.
    pub fn one_plus_dh_pow(n: usize, d: i64, e: i64) -> Self {
        let base = if e >= 0 {
            ChowClass::from_i64(n, &[1, d])
        } else {
            // (1 + dH)^{-1} = Σ (-d)^j H^j
            let mut c = ChowClass::zero(n);
            let mut p = BigInt::one();
            for j in 0..=n {
                c.coeffs[j] = p.clone();
                p *= -d;
            }
            c
        };
        let mut acc = ChowClass::one(n);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_unchecked(&base);
        }
        acc
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &ChowClass) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Invariant(format!("classes in P^{} and P^{}", self.n, other.n)));
        }
        Ok(())
    }

    fn mul_unchecked(&self, other: &ChowClass) -> ChowClass {
        let mut out = ChowClass::zero(self.n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.n + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(ChowClass { n: self.n, coeffs })
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(ChowClass { n: self.n, coeffs })
    }

    pub fn scale(&self, k: &BigInt) -> ChowClass {
        ChowClass { n: self.n, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// `Σ (-1)^j c_j H^j`.
    pub fn dual(&self) -> ChowClass {
        let coeffs = self.coeffs.iter().enumerate().map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() }).collect();
        ChowClass { n: self.n, coeffs }
    }

    /// `Σ c_j H^j (1 + dH)^{-j}`.
    pub fn tensor_line(&self, d: i64) -> ChowClass {
        let inv = ChowClass::one_plus_dh_pow(self.n, d, -1);
        let mut out = ChowClass::zero(self.n);
        let mut twist = ChowClass::one(self.n);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                for (i, t) in twist.coeffs.iter().enumerate().take(self.n + 1 - j) {
                    out.coeffs[i + j] += c * t;
                }
            }
            twist = twist.mul_unchecked(&inv);
        }
        out
    }

    /// Degrees `[a_k, ..., a_0]` of the dimension-`p` parts, `a_p = c_{n-p}`.
    pub fn degrees(&self, k: usize) -> Vec<BigInt> {
        (0..=k.min(self.n)).rev().map(|p| self.coeffs[self.n - p].clone()).collect()
    }

    /// Inverse of [`ChowClass::degrees`].
    pub fn from_degrees(n: usize, degrees: &[BigInt]) -> Result<ChowClass> {
        if degrees.len() > n + 1 {
            return Err(Error::Invariant(format!("{} degrees for P^{n}", degrees.len())));
        }
        let k = degrees.len() as i64 - 1;
        let mut c = ChowClass::zero(n);
        for (i, a) in degrees.iter().enumerate() {
            let p = (k - i as i64) as usize;
            c.coeffs[n - p] = a.clone();
        }
        Ok(c)
    }

    /// Parse the output of `Display`, e.g. `"3*H^2 + 2*H^3"`.
    pub fn parse(n: usize, text: &str) -> Result<ChowClass> {
        let bad = |m: &str| Error::Parse { column: 1, message: m.to_string() };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut c = ChowClass::zero(n);
        if compact == "0" {
            return Ok(c);
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for t in terms {
            let (neg, body) = match t.as_bytes().first() {
                Some(b'-') => (true, &t[1..]),
                Some(b'+') => (false, &t[1..]),
                _ => (false, t),
            };
            let (coef, power) = match body.find('H') {
                None => (body, 0usize),
                Some(pos) => {
                    let coef = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').and_then(|e| e.parse().ok()).ok_or_else(|| bad("bad exponent"))?
                    };
                    (if coef.is_empty() { "1" } else { coef }, power)
                }
            };
            let mut v: BigInt = coef.parse().map_err(|_| bad("bad coefficient"))?;
            if neg {
                v = -v;
            }
            if power > n {
                return Err(bad("power exceeds the ambient dimension"));
            }
            c.coeffs[power] += v;
        }
        Ok(c)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match j {
                0 => {}
                1 => write!(f, "H")?,
                _ => write!(f, "H^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `{a_k, ..., a_0}`.
pub fn format_degree_list(degrees: &[BigInt]) -> String {
    let parts: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn parse_degree_list(text: &str) -> Result<Vec<BigInt>> {
    let bad = || Error::Parse { column: 1, message: "expected {a, b, ...}".into() };
    let inner = text.trim().strip_prefix('{').and_then(|s| s.strip_suffix('}')).ok_or_else(bad)?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect()
}
