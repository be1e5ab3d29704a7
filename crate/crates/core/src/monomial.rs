//! Exponent vectors and the two monomial orders used by the engine.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Hard limit on the number of ring variables, auxiliary ones included.
pub const MAX_VARS: usize = 16;

/// A monomial `x_0^{e_0} ... x_{v-1}^{e_{v-1}}` stored inline.
///
/// Slots past `nvars` are always zero, so equality and hashing can look at
/// the whole array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], deg: 0, nvars: nvars as u8 }
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("at most {MAX_VARS} variables are supported")));
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).map_err(|_| Error::InvalidRing(format!("exponent {e} too large")))?;
            m.deg += e;
        }
        Ok(m)
    }

    /// `x_i` in a ring with `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    /// Total degree (unweighted).
    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn weighted_degree(&self, weights: Option<&[u32]>) -> u32 {
        match weights {
            None => self.deg,
            Some(w) => self.exponents().iter().zip(w).map(|(&e, &w)| e as u32 * w).sum(),
        }
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..self.nvars as usize {
            r.exps[i] = r.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        r.deg += other.deg;
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut r = *self;
        for i in 0..self.nvars as usize {
            r.exps[i] -= other.exps[i];
        }
        r.deg -= other.deg;
        Some(r)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        r.deg = 0;
        for i in 0..self.nvars as usize {
            r.exps[i] = r.exps[i].max(other.exps[i]);
            r.deg += r.exps[i] as u32;
        }
        r
    }

    /// `self / gcd(self, other)`, the monomial colon `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        r.deg = 0;
        for i in 0..self.nvars as usize {
            r.exps[i] = r.exps[i].saturating_sub(other.exps[i]);
            r.deg += r.exps[i] as u32;
        }
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Bit `i` set iff `x_i` occurs; a cheap necessary test for divisibility.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0;
        for i in 0..self.nvars as usize {
            if self.exps[i] != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn set_exponent(&mut self, i: usize, e: u32) {
        let e = u16::try_from(e).expect("exponent overflow");
        self.deg = self.deg - self.exps[i] as u32 + e as u32;
        self.exps[i] = e;
    }

    /// Reinterpret in a ring with `nvars` variables, sending `x_i` to `x_{map[i]}`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut r = Monomial::one(nvars);
        for (i, &j) in map.iter().enumerate() {
            r.exps[j] += self.exps[i];
        }
        r.deg = self.deg;
        r
    }

    /// All monomials of total degree `d` in `nvars` variables, in no particular order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(out: &mut Vec<Monomial>, cur: &mut Monomial, i: usize, left: u32) {
            let n = cur.nvars as usize;
            if i + 1 == n {
                cur.set_exponent(i, left);
                out.push(*cur);
                cur.set_exponent(i, 0);
                return;
            }
            for e in (0..=left).rev() {
                cur.set_exponent(i, e);
                rec(out, cur, i + 1, left - e);
            }
            cur.set_exponent(i, 0);
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(&mut out, &mut Monomial::one(nvars), 0, d);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Monomial orders. Variables are ordered `x_0 > x_1 > ...` by declaration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    DegRevLex,
    /// Eliminates the first `block` variables: compare degrevlex on the block
    /// first, then degrevlex on the remaining variables.
    BlockElim { block: usize },
}

#[inline]
fn revlex_tail(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn range_degree(m: &Monomial, lo: usize, hi: usize, weights: Option<&[u32]>) -> u32 {
    match weights {
        None => m.exps[lo..hi].iter().map(|&e| e as u32).sum(),
        Some(w) => (lo..hi).map(|i| m.exps[i] as u32 * w[i]).sum(),
    }
}

impl MonomialOrder {
    /// Compare two monomials of the same ring. `weights` grades the variables
    /// (all ones when `None`).
    #[inline]
    pub fn cmp_weighted(&self, a: &Monomial, b: &Monomial, weights: Option<&[u32]>) -> Ordering {
        let n = a.nvars as usize;
        match *self {
            MonomialOrder::DegRevLex => {
                let (da, db) = match weights {
                    None => (a.deg, b.deg),
                    Some(_) => (a.weighted_degree(weights), b.weighted_degree(weights)),
                };
                da.cmp(&db).then_with(|| revlex_tail(a, b, 0, n))
            }
            MonomialOrder::BlockElim { block } => {
                let block = block.min(n);
                range_degree(a, 0, block, weights)
                    .cmp(&range_degree(b, 0, block, weights))
                    .then_with(|| revlex_tail(a, b, 0, block))
                    .then_with(|| range_degree(a, block, n, weights).cmp(&range_degree(b, block, n, weights)))
                    .then_with(|| revlex_tail(a, b, block, n))
            }
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_weighted(a, b, None)
    }
}

/// Checked comparison of two monomials under `order`.
pub fn monomial_compare(order: MonomialOrder, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    if m1.nvars != m2.nvars {
        return Err(Error::RingMismatch(format!("monomials with {} and {} variables", m1.nvars, m2.nvars)));
    }
    Ok(order.cmp(m1, m2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x > y > z > w
        assert_eq!(monomial_compare(o, &m(&[2, 0, 0, 0]), &m(&[1, 1, 0, 0])).unwrap(), Ordering::Greater);
        assert_eq!(monomial_compare(o, &m(&[0, 1, 1, 0]), &m(&[1, 0, 0, 1])).unwrap(), Ordering::Greater);
        assert_eq!(monomial_compare(o, &m(&[1, 0, 0, 0]), &m(&[1, 0, 0, 0])).unwrap(), Ordering::Equal);
        assert!(monomial_compare(o, &m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    #[test]
    fn block_elim_puts_t_first() {
        let o = MonomialOrder::BlockElim { block: 1 };
        // t*w is larger than any power of x not involving t
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[0, 9, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0, 0]), &m(&[0, 1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn weighted_degree_dominates() {
        let o = MonomialOrder::DegRevLex;
        let w = [1, 1, 3];
        assert_eq!(o.cmp_weighted(&m(&[0, 0, 1]), &m(&[2, 0, 0]), Some(&w)), Ordering::Greater);
        assert_eq!(o.cmp_weighted(&m(&[0, 0, 1]), &m(&[3, 0, 0]), Some(&w)), Ordering::Less);
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(3, 0).len(), 1);
        assert!(Monomial::all_of_degree(2, 5).iter().all(|m| m.degree() == 5));
    }

    #[test]
    fn lcm_colon_divides() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        let l = a.lcm(&b);
        assert_eq!(l, m(&[2, 3, 1]));
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.colon(&b), m(&[1, 0, 0]));
        assert_eq!(l.div(&a), Some(m(&[0, 2, 1])));
        assert_eq!(a.div(&b), None);
    }
}
