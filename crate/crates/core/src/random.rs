//! Seeded randomness for hypersurface choices.
//!
//! All draws come from ChaCha8 streams. Independent tasks never share a
//! stream: each derives its own seed from the master seed and a task label,
//! so results do not depend on scheduling.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldPrime, Fp};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng { inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform element of `F_p`, zero included.
    pub fn element(&mut self, field: FieldPrime) -> Fp {
        Fp::from_raw(self.inner.random_range(0..field.modulus()))
    }

    pub fn nonzero_element(&mut self, field: FieldPrime) -> Fp {
        Fp::from_raw(self.inner.random_range(1..field.modulus()))
    }
}

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for sub-task `label` of a computation seeded with `seed`.
pub fn derive_seed(seed: u64, label: u64) -> u64 {
    seed ^ mix(label ^ mix(seed))
}

/// Monomials of degree `d` sorted descending in the ring's order.
pub fn monomial_basis(ring: &Ring, d: u32) -> Vec<Monomial> {
    let mut ms = Monomial::all_of_degree(ring.nvars(), d);
    ms.sort_by(|a, b| ring.cmp(b, a));
    ms
}

/// Dense random form of degree `degree`: every monomial gets an independent
/// uniform coefficient (in descending monomial order). Redrawn if all are zero;
/// a degree-0 form is a nonzero constant.
pub fn random_form(degree: u32, ring: &Arc<Ring>, rng: &mut SeededRng) -> Polynomial {
    let basis = monomial_basis(ring, degree);
    let field = ring.field();
    loop {
        let terms: Vec<_> = basis
            .iter()
            .filter_map(|&m| {
                let c = rng.element(field);
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        if !terms.is_empty() {
            return Polynomial::from_sorted(ring, terms);
        }
    }
}
