//! Hilbert functions by plain linear algebra on graded pieces.

use std::collections::HashMap;
use std::sync::Arc;

use charclass::{Monomial, Polynomial, Ring};
use num_bigint::BigInt;

pub const P: u64 = 32003;

pub fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], P - 2);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % P;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + P - f * y % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// `dim (R/I)_t` as the number of degree-`t` monomials minus the rank of
/// all products `m * f` landing in degree `t`.
pub fn brute_force_hf(ring: &Arc<Ring>, gens: &[Polynomial], t: u32) -> BigInt {
    let n = ring.nvars();
    let basis = Monomial::all_of_degree(n, t);
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for f in gens {
        let df = f.degree().unwrap();
        if df > t {
            continue;
        }
        for m in Monomial::all_of_degree(n, t - df) {
            let mut row = vec![0u64; basis.len()];
            for (tm, c) in f.terms() {
                row[index[&tm.mul(&m)]] = c.value() as u64;
            }
            rows.push(row);
        }
    }
    BigInt::from(basis.len() - rank_mod_p(rows))
}
