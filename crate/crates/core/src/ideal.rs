//! Homogeneous ideals and the operations the residual computations need.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_reduced_gb, GroebnerBasis};
use crate::hilbert::{hilbert_numerator, hilbert_numerator_weighted, HilbertData};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::random::{random_form, SeededRng};
use crate::ring::Ring;

/// A homogeneous ideal given by generators, with its degrevlex Gröbner
/// basis and Hilbert data computed on first use.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    hilbert: OnceLock<HilbertData>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        let hilbert = OnceLock::new();
        if let Some(h) = self.hilbert.get() {
            let _ = hilbert.set(h.clone());
        }
        Ideal { ring: self.ring.clone(), generators: self.generators.clone(), gb, hilbert }
    }
}

impl Ideal {
    /// Ideal of `ring` generated by `generators`. Every generator must be
    /// homogeneous; zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Ideal> {
        if ring.order() != MonomialOrder::DegRevLex || ring.weights().is_some() {
            return Err(Error::RingMismatch("ideals live in standard-graded degrevlex rings".into()));
        }
        let mut gens = Vec::with_capacity(generators.len());
        for (k, g) in generators.into_iter().enumerate() {
            ring.check_same(g.ring())?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous { index: k + 1 });
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal::from_parts(ring, gens, None))
    }

    fn from_parts(ring: &Arc<Ring>, generators: Vec<Polynomial>, gb: Option<GroebnerBasis>) -> Ideal {
        let cell = OnceLock::new();
        if let Some(g) = gb {
            let _ = cell.set(g);
        }
        Ideal { ring: ring.clone(), generators, gb: cell, hilbert: OnceLock::new() }
    }

    /// Parse a comma-separated generator list (`"0"` for the zero ideal).
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Ideal> {
        Ideal::new(ring, crate::parse::parse_generators(text, ring)?)
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::from_parts(ring, Vec::new(), None)
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::from_parts(ring, vec![Polynomial::one(ring)], None)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.generators.iter().filter_map(|g| g.degree()).max()
    }

    /// Reject a characteristic dividing a positive generator degree.
    pub fn check_characteristic(&self) -> Result<()> {
        let p = self.ring.field().modulus();
        for (k, g) in self.generators.iter().enumerate() {
            let d = g.degree().unwrap_or(0);
            if d > 0 && d % p == 0 {
                return Err(Error::CharacteristicHazard { prime: p, degree: d, index: k + 1 });
            }
        }
        Ok(())
    }

    /// Reduced degrevlex Gröbner basis, computed once.
    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger_reduced_gb(&self.ring, &self.generators).expect("generators share the ring"))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner_basis().contains(f)
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        self.groebner_basis().same_ideal(other.groebner_basis())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Ideal::from_parts(&self.ring, gens, None))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.mul(g)?);
            }
        }
        Ok(Ideal::from_parts(&self.ring, gens, None))
    }

    /// Hilbert numerator, projective dimension and degree of `R/I`.
    pub fn hilbert(&self) -> &HilbertData {
        self.hilbert.get_or_init(|| {
            let lt = self.groebner_basis().leading_monomials();
            HilbertData::from_numerator(hilbert_numerator(&lt, self.ring.nvars()), self.ring.nvars())
        })
    }

    pub fn proj_dim_and_degree(&self) -> &HilbertData {
        self.hilbert()
    }

    pub fn proj_dim(&self) -> i64 {
        self.hilbert().proj_dim
    }

    pub fn is_projectively_empty(&self) -> bool {
        self.hilbert().is_empty()
    }

    /// `I ∩ J`, by eliminating `t` from `t·I + (1-t)·J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let mut names = vec![self.ring.fresh_name("t")];
        names.extend(self.ring.var_names().iter().cloned());
        let elim = Ring::raw(names, self.ring.field(), MonomialOrder::BlockElim { block: 1 }, None);
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&elim, 0)?;
        let one_minus_t = Polynomial::one(&elim).sub(&t)?;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(f.embed(&elim, &shift).mul(&t)?);
        }
        for g in &other.generators {
            gens.push(g.embed(&elim, &shift).mul(&one_minus_t)?);
        }
        let gb = buchberger_reduced_gb(&elim, &gens)?;
        let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
        let mut kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|p| p.terms().iter().all(|t| t.0.exponent(0) == 0))
            .map(|p| unshift(p, &self.ring, &back))
            .collect();
        kept.sort_by(|a, b| self.ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let reduced = GroebnerBasis::from_reduced_parts(&self.ring, kept.clone());
        Ok(Ideal::from_parts(&self.ring, kept, Some(reduced)))
    }

    /// `(I : f) = (1/f)·(I ∩ (f))`.
    pub fn quotient_by_poly(&self, f: &Polynomial) -> Result<Ideal> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Err(Error::ZeroInput("quotient by the zero polynomial"));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersection(&principal)?;
        let gens = meet.generators.iter().map(|g| g.div_exact(f)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::from_parts(&self.ring, gens, None))
    }

    /// `(I : J) = ∩_{g ∈ gens J} (I : g)`.
    pub fn quotient_by_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        if other.is_zero_ideal() {
            return Err(Error::ZeroInput("quotient by the zero ideal"));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let q = self.quotient_by_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.expect("nonempty generator list"))
    }

    /// `(I : f^∞)`, iterating quotients until the ideal stabilizes.
    pub fn saturation_by_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroInput("saturation by the zero polynomial"));
        }
        let mut current = self.clone();
        loop {
            let next = current.quotient_by_poly(f)?;
            if next.same_ideal(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `(self : other^∞) = ∩_{f ∈ gens other} (self : f^∞)`.
    pub fn saturation_by_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        if other.is_zero_ideal() {
            return Err(Error::ZeroInput("saturation by the zero ideal"));
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.generators {
            let s = self.saturation_by_poly(f)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersection(&s)?,
            });
        }
        Ok(acc.expect("nonempty generator list"))
    }

    /// `Σ u_i f_i` with each `u_i` a dense random form of degree `d - deg f_i`,
    /// redrawn until nonzero. Homogeneous of degree exactly `d`.
    pub fn random_element(&self, d: u32, rng: &mut SeededRng) -> Result<Polynomial> {
        if self.generators.is_empty() {
            return Err(Error::ZeroInput("random element of the zero ideal"));
        }
        let degs: Vec<u32> = self.generators.iter().map(|g| g.degree().unwrap_or(0)).collect();
        if let Some(&top) = degs.iter().find(|&&e| e > d) {
            return Err(Error::DegreeTooSmall { requested: d, generator: top });
        }
        loop {
            let mut acc = Polynomial::zero(&self.ring);
            for (g, &e) in self.generators.iter().zip(&degs) {
                let u = random_form(d - e, &self.ring, rng);
                acc = acc.add(&u.mul(g)?)?;
            }
            if !acc.is_zero() {
                return Ok(acc);
            }
        }
    }
}

fn unshift(p: &Polynomial, target: &Arc<Ring>, back: &[usize]) -> Polynomial {
    let n = target.nvars();
    let terms = p
        .terms()
        .iter()
        .map(|&(m, c)| {
            let mut out = Monomial::one(n);
            for (i, &j) in back.iter().enumerate() {
                if j != usize::MAX {
                    out.set_exponent(j, m.exponent(i));
                }
            }
            (out, c)
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// `(f, ∂f/∂x_0, ..., ∂f/∂x_n)`; cuts out the singular locus of `V(f)`.
pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroInput("Jacobian ideal of the zero polynomial"));
    }
    let ring = f.ring();
    let mut gens = vec![f.clone()];
    for i in 0..ring.nvars() {
        gens.push(f.partial_derivative(i)?);
    }
    Ideal::new(ring, gens)
}

/// Hilbert data of `R / (J : g^∞)` for homogeneous `J` and `g`.
///
/// Adjoins `z` of degree `deg g` as the last variable, computes a weighted
/// degrevlex basis of `J + (z - g)` and divides every element by its largest
/// power of `z`. The quotient ring by the resulting ideal is isomorphic (as a
/// graded ring) to `R / (J : g^∞)` under `z ↦ g`.
pub fn saturation_hilbert(ring: &Arc<Ring>, j: &[Polynomial], g: &Polynomial) -> Result<HilbertData> {
    let d = g.degree().ok_or(Error::ZeroInput("saturation by the zero polynomial"))?;
    if d == 0 {
        // g is a unit, saturation is the unit ideal
        return Ok(HilbertData::from_numerator(vec![], ring.nvars()));
    }
    let n = ring.nvars();
    let mut names = ring.var_names().to_vec();
    names.push(ring.fresh_name("z"));
    let mut weights = vec![1u32; n];
    weights.push(d);
    let ext = Ring::raw(names, ring.field(), MonomialOrder::DegRevLex, Some(weights.clone()));
    let map: Vec<usize> = (0..n).collect();
    let z = Polynomial::var(&ext, n)?;
    let mut gens: Vec<Polynomial> = j.iter().map(|p| p.embed(&ext, &map)).collect();
    gens.push(z.sub(&g.embed(&ext, &map))?);
    let gb = buchberger_reduced_gb(&ext, &gens)?;
    let leads: Vec<Monomial> = gb
        .elements()
        .iter()
        .map(|p| {
            let zmin = p.terms().iter().map(|t| t.0.exponent(n)).min().unwrap_or(0);
            let mut lm = *p.leading_monomial().expect("nonzero");
            lm.set_exponent(n, lm.exponent(n) - zmin);
            lm
        })
        .collect();
    Ok(HilbertData::from_weighted_numerator(hilbert_numerator_weighted(&leads, &weights), &weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldPrime;
    use crate::parse::parse_polynomial;
    use num_bigint::BigInt;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names, FieldPrime::default()).unwrap()
    }

    fn id(r: &Arc<Ring>, s: &str) -> Ideal {
        Ideal::parse(r, s).unwrap()
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        a.same_ideal(b).unwrap()
    }

    const TWISTED: &str = "y^2 - x*z, y*z - x*w, z^2 - y*w";

    #[test]
    fn rejects_inhomogeneous() {
        let r = ring(&["x", "y"]);
        let err = Ideal::parse(&r, "x, x + 1").unwrap_err();
        assert_eq!(err, Error::NotHomogeneous { index: 2 });
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y", "z"]);
        assert!(same(&id(&r, "x").intersection(&id(&r, "y")).unwrap(), &id(&r, "x*y")));
        assert!(same(&id(&r, "x").intersection(&id(&r, "x")).unwrap(), &id(&r, "x")));
        assert!(same(&id(&r, "x^2, y").intersection(&id(&r, "x")).unwrap(), &id(&r, "x^2, x*y")));
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y", "z"]);
        let x = parse_polynomial("x", &r).unwrap();
        assert!(same(&id(&r, "x*y").quotient_by_poly(&x).unwrap(), &id(&r, "y")));
        assert!(same(&id(&r, "x^2").quotient_by_poly(&x).unwrap(), &id(&r, "x")));
        assert!(same(&id(&r, "x^2, x*y").quotient_by_poly(&x).unwrap(), &id(&r, "x, y")));
        assert!(id(&r, "x").quotient_by_poly(&Polynomial::zero(&r)).is_err());

        assert!(same(&id(&r, "x*y").quotient_by_ideal(&id(&r, "x, y")).unwrap(), &id(&r, "x*y")));
        assert!(id(&r, "x").quotient_by_ideal(&id(&r, "x")).unwrap().is_unit());
        assert!(same(&id(&r, "x^2").quotient_by_ideal(&id(&r, "x, y")).unwrap(), &id(&r, "x^2")));
        assert!(id(&r, "x").quotient_by_ideal(&Ideal::zero(&r)).is_err());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y", "z"]);
        let x = parse_polynomial("x", &r).unwrap();
        let y = parse_polynomial("y", &r).unwrap();
        assert!(id(&r, "x^2").saturation_by_poly(&x).unwrap().is_unit());
        assert!(same(&id(&r, "x*y").saturation_by_poly(&y).unwrap(), &id(&r, "x")));
        assert!(same(&id(&r, "x^2, x*y").saturation_by_poly(&y).unwrap(), &id(&r, "x")));

        assert!(same(&id(&r, "x*y").saturation_by_ideal(&id(&r, "x")).unwrap(), &id(&r, "y")));
        assert!(id(&r, "x").saturation_by_ideal(&id(&r, "x")).unwrap().is_unit());
    }

    #[test]
    fn twisted_cubic_residual_line() {
        let r = ring(&["x", "y", "z", "w"]);
        let j = id(&r, "y^2 - x*z, y*z - x*w");
        let sat = j.saturation_by_ideal(&id(&r, TWISTED)).unwrap();
        assert!(same(&sat, &id(&r, "x, y")));
        let h = sat.hilbert();
        assert_eq!((h.proj_dim, h.degree.clone()), (1, Some(BigInt::from(1))));
    }

    #[test]
    fn generic_element_saturation_agrees() {
        let r = ring(&["x", "y", "z", "w"]);
        let j = id(&r, "y^2 - x*z, y*z - x*w");
        let mut rng = SeededRng::new(3);
        let g = id(&r, TWISTED).random_element(2, &mut rng).unwrap();
        let h = saturation_hilbert(&r, j.generators(), &g).unwrap();
        assert_eq!(h.proj_dim, 1);
        assert_eq!(h.degree, Some(BigInt::from(1)));
        assert_eq!(h.hilbert_function(3), id(&r, "x, y").hilbert().hilbert_function(3));
    }

    #[test]
    fn dimension_and_degree() {
        let r = ring(&["x", "y", "z", "w"]);
        let tc = id(&r, TWISTED).hilbert().clone();
        assert_eq!((tc.proj_dim, tc.degree), (1, Some(BigInt::from(3))));
        let plane = id(&r, "x").hilbert().clone();
        assert_eq!((plane.proj_dim, plane.degree), (2, Some(BigInt::from(1))));
        let r3 = ring(&["x", "y", "z"]);
        let lines = id(&r3, "x*y").hilbert().clone();
        assert_eq!((lines.proj_dim, lines.degree), (1, Some(BigInt::from(2))));
        let all = Ideal::zero(&r).hilbert().clone();
        assert_eq!((all.proj_dim, all.degree), (3, Some(BigInt::from(1))));
        assert_eq!(Ideal::unit(&r).proj_dim(), -1);
    }

    #[test]
    fn emptiness() {
        let r = ring(&["x", "y", "z", "w"]);
        assert!(id(&r, "x, y, z, w").is_projectively_empty());
        assert!(id(&r, "x^2, y^2, z^2, w^2").is_projectively_empty());
        assert!(!id(&r, TWISTED).is_projectively_empty());
    }

    #[test]
    fn jacobians() {
        let r = ring(&["x", "y", "z", "w"]);
        let f = parse_polynomial("x^2*w - y^2*z", &r).unwrap();
        let jac = jacobian_ideal(&f).unwrap();
        assert!(same(&jac, &id(&r, "x^2*w - y^2*z, x*w, y*z, y^2, x^2")));
        let lin = jacobian_ideal(&parse_polynomial("x", &r).unwrap()).unwrap();
        assert!(lin.is_unit());
        let r3 = ring(&["x", "y", "z"]);
        let dbl = jacobian_ideal(&parse_polynomial("x^2", &r3).unwrap()).unwrap();
        assert!(same(&dbl, &id(&r3, "x")));
        assert!(jacobian_ideal(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn random_elements() {
        let r = ring(&["x", "y", "z", "w"]);
        let tc = id(&r, TWISTED);
        let mut a = SeededRng::new(11);
        let g = tc.random_element(2, &mut a).unwrap();
        assert_eq!(g.degree(), Some(2));
        assert!(tc.contains(&g).unwrap());
        // complementary degree 0: the next three nonzero scalar draws
        let mut b = SeededRng::new(11);
        let lambdas: Vec<_> = (0..3).map(|_| random_form(0, &r, &mut b)).collect();
        let mut expected = Polynomial::zero(&r);
        for (l, f) in lambdas.iter().zip(tc.generators()) {
            expected = expected.add(&l.mul(f).unwrap()).unwrap();
        }
        assert_eq!(g, expected);

        let whitney = jacobian_ideal(&parse_polynomial("x^2*w - y^2*z", &r).unwrap()).unwrap();
        let h = whitney.random_element(3, &mut a).unwrap();
        assert_eq!(h.degree(), Some(3));
        assert!(whitney.contains(&h).unwrap());
        assert!(whitney.random_element(2, &mut a).is_err());

        let mut c = SeededRng::new(11);
        assert_eq!(tc.random_element(2, &mut c).unwrap(), g);
    }

    #[test]
    fn products_and_sums() {
        let r = ring(&["x", "y", "z"]);
        let p = id(&r, "x").product(&id(&r, "x, y")).unwrap();
        assert!(same(&p, &id(&r, "x^2, x*y")));
        assert!(same(&id(&r, "x").sum(&id(&r, "y")).unwrap(), &id(&r, "y, x")));
    }
}
