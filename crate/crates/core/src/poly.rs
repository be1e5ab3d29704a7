//! Sparse multivariate polynomials over `F_p`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::ring::Ring;

pub type Term = (Monomial, Fp);

/// A polynomial in canonical form: terms strictly descending in the ring's
/// order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Fp) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push((ring.one(), c));
        }
        p
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, Fp::ONE)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Result<Self> {
        if i >= ring.nvars() {
            return Err(Error::VariableOutOfRange { index: i, nvars: ring.nvars() });
        }
        Ok(Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), i), Fp::ONE)] })
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Fp) -> Self {
        Polynomial::from_sorted(ring, if c.is_zero() { vec![] } else { vec![(m, c)] })
    }

    /// Canonicalize an arbitrary term list: sort, merge duplicates, drop zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<Term>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|t| t.1.is_zero()) {
                out.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<Fp> {
        self.terms.first().map(|t| t.1)
    }

    /// Largest degree of a term in the ring's grading; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| self.ring.degree_of(&t.0)).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// All terms share one degree. The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| self.ring.degree_of(&t.0));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.add_scaled(other, Fp::ONE))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.add_scaled(other, self.ring.field().neg(Fp::ONE)))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field().neg(Fp::ONE))
    }

    /// `self + c * other` by merging; assumes a common ring.
    fn add_scaled(&self, other: &Polynomial, c: Fp) -> Polynomial {
        let field = self.ring.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let v = field.mul(c, b[j].1);
                    if !v.is_zero() {
                        out.push((b[j].0, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = field.add(a[i].1, field.mul(c, b[j].1));
                    if !v.is_zero() {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let v = field.mul(c, t.1);
            if !v.is_zero() {
                out.push((t.0, v));
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: Fp) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|&(m, a)| (m, field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`. Multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: Fp) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|&(t, a)| (t.mul(m), field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if other.len() == 1 {
            let (m, c) = other.terms[0];
            return Ok(self.mul_term(&m, c));
        }
        if self.len() == 1 {
            let (m, c) = self.terms[0];
            return Ok(other.mul_term(&m, c));
        }
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, Fp> = HashMap::with_capacity(self.len() * other.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(&mb)).or_insert(Fp::ZERO);
                *e = field.add(*e, field.mul(ca, cb));
            }
        }
        let terms = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c == Fp::ONE => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c).expect("nonzero")),
        }
    }

    /// Formal partial derivative with respect to `x_var`.
    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.ring.nvars() {
            return Err(Error::VariableOutOfRange { index: var, nvars: self.ring.nvars() });
        }
        let field = self.ring.field();
        let mut terms = Vec::new();
        for &(m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let v = field.mul(c, field.element(e as u64));
            if v.is_zero() {
                continue;
            }
            let mut dm = m;
            dm.set_exponent(var, e - 1);
            terms.push((dm, v));
        }
        // derivative of a sorted list need not stay sorted
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Move into `target`, sending `x_i` to `x_{map[i]}`.
    pub fn embed(&self, target: &Arc<Ring>, map: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|&(m, c)| (m.remap(target.nvars(), map), c)).collect();
        Polynomial::from_terms(target, terms)
    }

    /// Re-sort under another ring with the same variables (e.g. another order).
    pub fn reorder(&self, target: &Arc<Ring>) -> Polynomial {
        assert_eq!(target.nvars(), self.ring.nvars());
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Substitute `x_i := images[i]` for every variable.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.nvars());
        let maxdeg: Vec<u32> =
            (0..self.ring.nvars()).map(|i| self.terms.iter().map(|t| t.0.exponent(i)).max().unwrap_or(0)).collect();
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(images.len());
        for (img, &md) in images.iter().zip(&maxdeg) {
            target.check_same(img.ring())?;
            let mut pw = vec![Polynomial::one(target)];
            for k in 1..=md as usize {
                let next = pw[k - 1].mul(img)?;
                pw.push(next);
            }
            powers.push(pw);
        }
        let field = target.field();
        let mut acc: HashMap<Monomial, Fp> = HashMap::new();
        for &(m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c);
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    prod = prod.mul(&pw[e])?;
                }
            }
            for &(tm, tc) in prod.terms() {
                let slot = acc.entry(tm).or_insert(Fp::ZERO);
                *slot = field.add(*slot, tc);
            }
        }
        Ok(Polynomial::from_terms(target, acc.into_iter().collect()))
    }

    /// Exact quotient `self / divisor`; errors when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&divisor.ring)?;
        let (lm, lc) = *divisor.leading_term().ok_or(Error::ZeroInput("divisor"))?;
        let field = self.ring.field();
        let lc_inv = field.inv(lc)?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(&(m, c)) = rest.leading_term() {
            let q = m.div(&lm).ok_or(Error::InexactDivision)?;
            let qc = field.mul(c, lc_inv);
            quotient.push((q, qc));
            rest = rest.add_scaled(&divisor.mul_term(&q, qc), field.neg(Fp::ONE));
        }
        Ok(Polynomial::from_sorted(&self.ring, quotient))
    }

    /// Evaluate at a point of `F_p^v`.
    pub fn evaluate(&self, point: &[Fp]) -> Fp {
        let field = self.ring.field();
        let mut acc = Fp::ZERO;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = field.mul(v, field.pow(x, e as u64));
                }
            }
            acc = field.add(acc, v);
        }
        acc
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", names[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let names = self.ring.var_names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let v = field.symmetric(*c);
            let (neg, a) = (v < 0, v.unsigned_abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, names, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
