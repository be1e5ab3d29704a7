//! Reduced Gröbner bases by critical-pair completion, pruning pairs
//! with the chain and product criteria.
//!
//! Reductions use a heap-based division: the
//! polynomial being reduced is never materialized; instead every multiple
//! `c * m * g` that enters the computation is a lazily advanced stream of
//! terms, merged through a binary heap keyed on the monomial order. Pairs are
//! selected by the normal strategy with sugar degrees, which coincides with
//! the plain lcm-degree rule on homogeneous input.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// A reduced Gröbner basis: monic, auto-reduced, sorted by ascending
/// leading monomial. Unique for a given ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Wrap elements already known to form a reduced basis in ascending order.
    pub(crate) fn from_reduced_parts(ring: &Arc<Ring>, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring: ring.clone(), elements }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *g.leading_monomial().expect("nonzero")).collect()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    /// Remainder of `f` on division by the basis; no term of the result is
    /// divisible by a leading monomial of the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(f.ring())?;
        let reducers: Vec<Reducer> = self.elements.iter().map(Reducer::new).collect();
        let (terms, _) = reduce(&self.ring, vec![Stream::whole(f)], &reducers);
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Equality of the generated ideals, by comparing reduced bases.
    pub fn same_ideal(&self, other: &GroebnerBasis) -> Result<bool> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch("Gröbner bases over different rings or orders".into()));
        }
        Ok(self.elements == other.elements)
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators` in `ring`
/// (whose order is used). Zero generators are ignored; generators from a ring
/// differing only in its order are re-sorted.
pub fn buchberger_reduced_gb(ring: &Arc<Ring>, generators: &[Polynomial]) -> Result<GroebnerBasis> {
    let mut gens = Vec::with_capacity(generators.len());
    for g in generators {
        let r = g.ring();
        if r.var_names() != ring.var_names() || r.field() != ring.field() || r.weights() != ring.weights() {
            return Err(Error::RingMismatch(format!("generator in {r}, expected {ring}")));
        }
        if g.is_zero() {
            continue;
        }
        gens.push(if r.order() == ring.order() { g.clone() } else { g.reorder(ring) });
    }
    let mut engine = Engine { ring: ring.clone(), basis: Vec::new(), pairs: Vec::new(), generators: gens };
    Ok(engine.run())
}

#[derive(Clone)]
struct Reducer {
    poly: Polynomial,
    lm: Monomial,
    mask: u32,
    sugar: u32,
    redundant: bool,
}

impl Reducer {
    fn new(p: &Polynomial) -> Reducer {
        let lm = *p.leading_monomial().expect("nonzero reducer");
        let sugar = p.terms().iter().map(|t| p.ring().degree_of(&t.0)).max().unwrap_or(0);
        Reducer { poly: p.monic(), lm, mask: lm.support_mask(), sugar, redundant: false }
    }
}

struct Stream<'a> {
    terms: &'a [Term],
    pos: usize,
    mult: Monomial,
    coeff: Fp,
    sugar: u32,
}

impl<'a> Stream<'a> {
    fn whole(p: &'a Polynomial) -> Self {
        let sugar = p.degree().unwrap_or(0);
        Stream { terms: p.terms(), pos: 0, mult: p.ring().one(), coeff: Fp::ONE, sugar }
    }
}

/// Max-heap of `(monomial, stream index)` under the ring's order.
struct TermHeap<'r> {
    ring: &'r Ring,
    data: Vec<(Monomial, u32)>,
}

impl<'r> TermHeap<'r> {
    #[inline]
    fn greater(&self, a: usize, b: usize) -> bool {
        self.ring.cmp(&self.data[a].0, &self.data[b].0) == Ordering::Greater
    }

    fn push(&mut self, m: Monomial, s: u32) {
        self.data.push((m, s));
        let mut i = self.data.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.greater(i, parent) {
                self.data.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn pop(&mut self) -> Option<(Monomial, u32)> {
        let n = self.data.len();
        if n == 0 {
            return None;
        }
        self.data.swap(0, n - 1);
        let top = self.data.pop();
        let n = n - 1;
        let mut i = 0;
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut best = i;
            if l < n && self.greater(l, best) {
                best = l;
            }
            if r < n && self.greater(r, best) {
                best = r;
            }
            if best == i {
                break;
            }
            self.data.swap(i, best);
            i = best;
        }
        top
    }

    #[inline]
    fn peek(&self) -> Option<&Monomial> {
        self.data.first().map(|e| &e.0)
    }
}

fn find_reducer(reducers: &[Reducer], m: &Monomial) -> Option<usize> {
    let mask = m.support_mask();
    reducers.iter().position(|r| !r.redundant && r.mask & !mask == 0 && r.lm.divides(m))
}

/// Fully reduce the sum of the given streams by `reducers` (all monic).
/// Returns the remainder's terms in descending order and its sugar degree.
fn reduce<'a>(ring: &Ring, initial: Vec<Stream<'a>>, reducers: &'a [Reducer]) -> (Vec<Term>, u32) {
    let field = ring.field();
    let mut streams = initial;
    let mut heap = TermHeap { ring, data: Vec::with_capacity(64) };
    let mut sugar = 0;
    for (i, s) in streams.iter().enumerate() {
        sugar = sugar.max(s.sugar);
        if s.pos < s.terms.len() {
            heap.push(s.terms[s.pos].0.mul(&s.mult), i as u32);
        }
    }
    let mut out = Vec::new();
    while let Some(&m) = heap.peek() {
        let mut c = Fp::ZERO;
        while heap.peek() == Some(&m) {
            let (_, si) = heap.pop().expect("peeked");
            let s = &mut streams[si as usize];
            c = field.add(c, field.mul(s.coeff, s.terms[s.pos].1));
            s.pos += 1;
            if s.pos < s.terms.len() {
                let next = s.terms[s.pos].0.mul(&s.mult);
                heap.push(next, si);
            }
        }
        if c.is_zero() {
            continue;
        }
        match find_reducer(reducers, &m) {
            Some(j) => {
                let g = &reducers[j];
                let q = m.div(&g.lm).expect("divisible");
                sugar = sugar.max(ring.degree_of(&q) + g.sugar);
                if g.poly.len() > 1 {
                    let idx = streams.len() as u32;
                    streams.push(Stream { terms: g.poly.terms(), pos: 1, mult: q, coeff: field.neg(c), sugar: 0 });
                    heap.push(g.poly.terms()[1].0.mul(&q), idx);
                }
            }
            None => out.push((m, c)),
        }
    }
    (out, sugar)
}

#[derive(Clone, Debug)]
enum PairKind {
    Input(usize),
    Critical(usize, usize),
}

#[derive(Clone, Debug)]
struct Pair {
    kind: PairKind,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    ring: Arc<Ring>,
    basis: Vec<Reducer>,
    pairs: Vec<Pair>,
    generators: Vec<Polynomial>,
}

impl Engine {
    fn run(&mut self) -> GroebnerBasis {
        for (i, g) in self.generators.iter().enumerate() {
            let sugar = g.degree().unwrap_or(0);
            self.pairs.push(Pair { kind: PairKind::Input(i), lcm: *g.leading_monomial().expect("nonzero"), sugar });
        }
        while let Some(pair) = self.select() {
            let (terms, sugar) = {
                let ring = &self.ring;
                let field = ring.field();
                let streams = match pair.kind {
                    PairKind::Input(i) => vec![Stream::whole(&self.generators[i])],
                    PairKind::Critical(i, j) => {
                        let (a, b) = (&self.basis[i], &self.basis[j]);
                        let ua = pair.lcm.div(&a.lm).expect("lcm");
                        let ub = pair.lcm.div(&b.lm).expect("lcm");
                        vec![
                            Stream { terms: a.poly.terms(), pos: 1, mult: ua, coeff: Fp::ONE, sugar: pair.sugar },
                            Stream {
                                terms: b.poly.terms(),
                                pos: 1,
                                mult: ub,
                                coeff: field.neg(Fp::ONE),
                                sugar: pair.sugar,
                            },
                        ]
                    }
                };
                reduce(ring, streams, &self.basis)
            };
            if terms.is_empty() {
                continue;
            }
            let h = Polynomial::from_sorted(&self.ring, terms).monic();
            if h.is_constant() {
                return GroebnerBasis { ring: self.ring.clone(), elements: vec![Polynomial::one(&self.ring)] };
            }
            let mut r = Reducer::new(&h);
            r.sugar = r.sugar.max(sugar);
            self.insert(r);
        }
        self.finish()
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = &self.ring;
        let mut best = 0;
        for i in 1..self.pairs.len() {
            let (p, q) = (&self.pairs[i], &self.pairs[best]);
            let better = match p.sugar.cmp(&q.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => ring.cmp(&p.lcm, &q.lcm) == Ordering::Less,
            };
            if better {
                best = i;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    /// Add a basis element, pruning pairs by the chain and product criteria.
    fn insert(&mut self, h: Reducer) {
        let hi = self.basis.len();
        let lm_h = h.lm;

        // candidate pairs (g, h), with their lcm and coprimality flag
        let mut cands: Vec<(usize, Monomial, bool)> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.redundant)
            .map(|(i, g)| (i, g.lm.lcm(&lm_h), g.lm.is_coprime(&lm_h)))
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::with_capacity(cands.len());
        while let Some((i, l, coprime)) = cands.pop() {
            let dominated = !coprime
                && (cands.iter().any(|(_, l2, _)| l2.divides(&l)) || kept.iter().any(|(_, l2, _)| l2.divides(&l)));
            if !dominated {
                kept.push((i, l, coprime));
            }
        }

        // chain criterion on old pairs
        let basis = &self.basis;
        self.pairs.retain(|p| match p.kind {
            PairKind::Input(_) => true,
            PairKind::Critical(a, b) => {
                !(lm_h.divides(&p.lcm) && basis[a].lm.lcm(&lm_h) != p.lcm && basis[b].lm.lcm(&lm_h) != p.lcm)
            }
        });

        // product criterion
        for (i, l, coprime) in kept {
            if coprime {
                continue;
            }
            let g = &self.basis[i];
            let sugar = (g.sugar + self.ring.degree_of(&l.div(&g.lm).expect("lcm")))
                .max(h.sugar + self.ring.degree_of(&l.div(&lm_h).expect("lcm")));
            self.pairs.push(Pair { kind: PairKind::Critical(i, hi), lcm: l, sugar });
        }

        for g in self.basis.iter_mut() {
            if !g.redundant && lm_h.divides(&g.lm) {
                g.redundant = true;
            }
        }
        self.basis.push(h);
    }

    fn finish(&mut self) -> GroebnerBasis {
        let minimal: Vec<Reducer> = self.basis.iter().filter(|g| !g.redundant).cloned().collect();
        let mut elements = Vec::with_capacity(minimal.len());
        for g in &minimal {
            let mut terms = vec![g.poly.terms()[0]];
            let tail = Stream { terms: g.poly.terms(), pos: 1, mult: self.ring.one(), coeff: Fp::ONE, sugar: 0 };
            let (rest, _) = reduce(&self.ring, vec![tail], &minimal);
            terms.extend(rest);
            elements.push(Polynomial::from_sorted(&self.ring, terms));
        }
        let ring = self.ring.clone();
        elements.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        GroebnerBasis { ring, elements }
    }
}
