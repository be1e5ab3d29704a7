//! Hilbert series numerators of monomial ideals and the projective dimension
//! and degree they encode.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;

/// Integer polynomial in `t`, dense, lowest degree first.
pub type IntPoly = Vec<BigInt>;

/// Hilbert data of `R/I` for `R` with `v` standard-graded variables:
/// `HS(t) = numerator(t) / (1-t)^v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: IntPoly,
    pub nvars: usize,
    /// Dimension of `Proj(R/I)`; `-1` when it is empty.
    pub proj_dim: i64,
    /// Degree of the top-dimensional part; `None` when empty.
    pub degree: Option<BigInt>,
}

impl HilbertData {
    pub fn from_numerator(numerator: IntPoly, nvars: usize) -> Self {
        let numerator = trim(numerator);
        if numerator.is_empty() {
            return HilbertData { numerator, nvars, proj_dim: -1, degree: None };
        }
        let mut reduced = numerator.clone();
        let mut c = 0usize;
        while eval_at_one(&reduced).is_zero() {
            reduced = divide_by_one_minus_t(&reduced);
            c += 1;
        }
        let krull = nvars as i64 - c as i64;
        if krull <= 0 {
            return HilbertData { numerator, nvars, proj_dim: -1, degree: None };
        }
        HilbertData { numerator, nvars, proj_dim: krull - 1, degree: Some(eval_at_one(&reduced)) }
    }

    /// Convert a numerator over `prod_i (1 - t^{w_i})` into the standard one.
    pub fn from_weighted_numerator(numerator: IntPoly, weights: &[u32]) -> Self {
        let mut n = trim(numerator);
        for &w in weights {
            if w > 1 && !n.is_empty() {
                let q: IntPoly = vec![BigInt::one(); w as usize];
                n = divide_exact(&n, &q).expect("weighted numerator divisible by the weight factors");
            }
        }
        HilbertData::from_numerator(n, weights.len())
    }

    pub fn is_empty(&self) -> bool {
        self.proj_dim < 0
    }

    /// `dim_F (R/I)_k`, read off the series.
    pub fn hilbert_function(&self, k: usize) -> BigInt {
        let v = self.nvars;
        let mut acc = BigInt::zero();
        for (j, c) in self.numerator.iter().enumerate() {
            if j > k {
                break;
            }
            if v == 0 {
                if j == k {
                    acc += c;
                }
                continue;
            }
            acc += c * binomial((k - j + v - 1) as u64, (v - 1) as u64);
        }
        acc
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn eval_at_one(p: &IntPoly) -> BigInt {
    p.iter().sum()
}

/// Quotient by `1 - t`; caller guarantees `p(1) = 0`.
fn divide_by_one_minus_t(p: &IntPoly) -> IntPoly {
    // p = (1 - t) q  =>  q_k = sum_{j <= k} p_j
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut run = BigInt::zero();
    for c in &p[..p.len() - 1] {
        run += c;
        q.push(run.clone());
    }
    trim(q)
}

/// Exact division by a polynomial with constant term one.
fn divide_exact(p: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    debug_assert!(d[0].is_one());
    if p.len() < d.len() {
        return if p.is_empty() { Some(vec![]) } else { None };
    }
    let mut rem = p.clone();
    let qlen = p.len() - d.len() + 1;
    let mut q = vec![BigInt::zero(); qlen];
    for k in 0..qlen {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in d.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trim(q))
}

fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn add_shifted(acc: &mut IntPoly, p: &IntPoly, shift: usize, sign: i32) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (j, c) in p.iter().enumerate() {
        if sign > 0 {
            acc[j + shift] += c;
        } else {
            acc[j + shift] -= c;
        }
    }
}

fn one_minus_t_pow(e: u32) -> IntPoly {
    let mut p = vec![BigInt::zero(); e as usize + 1];
    p[0] += 1;
    p[e as usize] -= 1;
    trim(p)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn wdeg(m: &Monomial, weights: Option<&[u32]>) -> u32 {
    m.weighted_degree(weights)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize, weights: Option<&[u32]>) -> IntPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![];
    }
    // pairwise coprime: a regular sequence of monomials
    let mut seen = 0u32;
    let mut coprime = true;
    for g in &gens {
        let m = g.support_mask();
        if seen & m != 0 {
            coprime = false;
            break;
        }
        seen |= m;
    }
    if coprime {
        return gens.iter().fold(vec![BigInt::one()], |acc, g| poly_mul(&acc, &one_minus_t_pow(wdeg(g, weights))));
    }
    // pivot on a power of the most frequent variable
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let x = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("nonempty");
    let mut exps: Vec<u32> =
        gens.iter().filter(|g| g.exponent(x) > 0 && g.degree() > g.exponent(x)).map(|g| g.exponent(x)).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pivot = Monomial::one(nvars);
    pivot.set_exponent(x, e);

    // N(M) = N(M + (p)) + t^{deg p} N(M : p)
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&pivot)).collect();
    let mut acc = numerator_rec(with_pivot, nvars, weights);
    let inner = numerator_rec(colon, nvars, weights);
    add_shifted(&mut acc, &inner, wdeg(&pivot, weights) as usize, 1);
    trim(acc)
}

/// Numerator `N(t)` of the Hilbert series of `R / (leading_terms)` where `R`
/// has `nvars` standard-graded variables: `HS(t) = N(t) / (1-t)^nvars`.
pub fn hilbert_numerator(leading_terms: &[Monomial], nvars: usize) -> IntPoly {
    numerator_rec(leading_terms.to_vec(), nvars, None)
}

/// As [`hilbert_numerator`] with variable `i` of degree `weights[i]`; the
/// denominator is then `prod_i (1 - t^{weights[i]})`.
pub fn hilbert_numerator_weighted(leading_terms: &[Monomial], weights: &[u32]) -> IntPoly {
    numerator_rec(leading_terms.to_vec(), weights.len(), Some(weights))
}

/// Render an integer polynomial in `t` (for diagnostics and tests).
pub fn format_int_poly(p: &IntPoly) -> String {
    let mut s = String::new();
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        match (k, a.is_one()) {
            (0, _) => s.push_str(&a.to_string()),
            (_, true) => {}
            (_, false) => s.push_str(&format!("{a}*")),
        }
        match k {
            0 => {}
            1 => s.push('t'),
            _ => s.push_str(&format!("t^{k}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn principal_and_irrelevant() {
        assert_eq!(hilbert_numerator(&[m(&[2, 0])], 2), ints(&[1, 0, -1]));
        assert_eq!(hilbert_numerator(&[m(&[1, 0]), m(&[0, 1])], 2), ints(&[1, -2, 1]));
    }

    #[test]
    fn two_monomials_with_common_factor() {
        // (x^2, xy): 1 - 2t^2 + t^3
        assert_eq!(hilbert_numerator(&[m(&[2, 0]), m(&[1, 1])], 2), ints(&[1, 0, -2, 1]));
    }

    #[test]
    fn degree_and_dimension() {
        // twisted cubic leading terms in degrevlex: y^2, yz, z^2
        let lt = [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])];
        let h = HilbertData::from_numerator(hilbert_numerator(&lt, 4), 4);
        assert_eq!(h.proj_dim, 1);
        assert_eq!(h.degree, Some(BigInt::from(3)));
        assert_eq!(h.hilbert_function(2), BigInt::from(7));

        let empty =
            HilbertData::from_numerator(hilbert_numerator(&[m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])], 3), 3);
        assert!(empty.is_empty());
        let unit = HilbertData::from_numerator(hilbert_numerator(&[m(&[0, 0])], 2), 2);
        assert!(unit.is_empty());
        assert!(unit.numerator.is_empty());
        let whole = HilbertData::from_numerator(hilbert_numerator(&[], 3), 3);
        assert_eq!((whole.proj_dim, whole.degree), (2, Some(BigInt::one())));
    }

    #[test]
    fn weighted_numerator_converts() {
        // in(I) = (x*y, z) with z of weight 3, as for I = (x*y, z - g(x, y))
        let w = [1, 1, 3];
        let n = hilbert_numerator_weighted(&[m(&[1, 1, 0]), m(&[0, 0, 1])], &w);
        assert_eq!(n, ints(&[1, 0, -1, -1, 0, 1]));
        let h = HilbertData::from_weighted_numerator(n, &w);
        assert_eq!((h.proj_dim, h.degree), (0, Some(BigInt::from(2))));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(7, 0), BigInt::one());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_int_poly(&ints(&[1, 0, -2, 1])), "1 - 2*t^2 + t^3");
        assert_eq!(format_int_poly(&vec![]), "0");
    }
}
