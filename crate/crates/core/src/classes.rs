//! Segre, Chern(-Fulton) and Chern–Schwartz–MacPherson classes of projective
//! schemes from degrees of residual intersections.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::hilbert::binomial;
use crate::ideal::{jacobian_ideal, saturation_hilbert, Ideal};
use crate::poly::Polynomial;
use crate::random::{derive_seed, SeededRng};
use crate::ring::Ring;

const SUBSET_LABEL: u64 = 1 << 32;
const VERIFY_LABEL: u64 = u64::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomPolicy {
    pub seed: u64,
    pub max_retries: usize,
    /// Recompute with an independent seed and require identical degrees.
    pub verify: bool,
}

impl RandomPolicy {
    pub fn new(seed: u64) -> Self {
        RandomPolicy { seed, max_retries: 5, verify: false }
    }

    fn derived(&self, label: u64) -> Self {
        RandomPolicy { seed: derive_seed(self.seed, label), ..*self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Segre,
    Chern,
    Csm,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Segre => "segre",
            ClassKind::Chern => "chern",
            ClassKind::Csm => "csm",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub kind: ClassKind,
    pub n: usize,
    /// Dimension of the scheme, `-1` when it is empty.
    pub k: i64,
    /// Working hypersurface degree (segre and chern, when residuals were used).
    pub d: Option<u32>,
    /// `[a_k, ..., a_0]`, indexed by descending dimension.
    pub degrees: Vec<BigInt>,
    pub chow: ChowClass,
    pub seed: u64,
    /// Coefficient of `H^n` (csm only).
    pub euler: Option<BigInt>,
    /// Draws rejected for lack of genericity.
    pub retries: usize,
}

impl ClassReport {
    fn build(kind: ClassKind, k: i64, d: Option<u32>, chow: ChowClass, seed: u64, retries: usize) -> Self {
        let degrees = if k < 0 { Vec::new() } else { chow.degrees(k as usize) };
        let euler = (kind == ClassKind::Csm).then(|| chow.coeff(chow.n()).clone());
        ClassReport { kind, n: chow.n(), k, d, degrees, chow, seed, euler, retries }
    }
}

/// Degree of the residual to `V(I)` in the intersection of `e` random
/// degree-`d` hypersurfaces containing it, with the number of rejected draws.
///
/// The residual has expected dimension `p = n - e`. It is sliced by a random
/// linear space of codimension `p` and its ideal `(J : I^∞)` is replaced by
/// `(J : g^∞)` for one more random element `g` of `I_d`, whose zero set
/// contains `V(I)` but, generically, none of the finitely many residual
/// points.
pub fn residual_degree_with_retries(ideal: &Ideal, d: u32, e: usize, policy: &RandomPolicy) -> Result<(BigInt, usize)> {
    let ring = ideal.ring();
    let n = ring.nvars() - 1;
    let k = ideal.proj_dim();
    let lo = (n as i64 - k).max(0) as usize;
    if k < 0 || e < lo || e > n {
        return Err(Error::ResidualRange { e, lo, hi: n });
    }
    if let Some(top) = ideal.max_degree().filter(|&m| m > d) {
        return Err(Error::DegreeTooSmall { requested: d, generator: top });
    }
    let p = n - e;
    let sliced = if p == 0 { ring.clone() } else { Ring::new(&ring.var_names()[..=e], ring.field())? };
    let mut rng = SeededRng::new(derive_seed(policy.seed, e as u64));
    for attempt in 0..=policy.max_retries {
        let mut j = Vec::with_capacity(e);
        for _ in 0..e {
            j.push(ideal.random_element(d, &mut rng)?);
        }
        let g = ideal.random_element(d, &mut rng)?;
        if p > 0 {
            let mut images: Vec<Polynomial> = (0..=e).map(|i| Polynomial::var(&sliced, i)).collect::<Result<_>>()?;
            for _ in 0..p {
                let terms = (0..=e)
                    .map(|i| (crate::monomial::Monomial::var(e + 1, i), rng.element(ring.field())))
                    .filter(|t| !t.1.is_zero())
                    .collect();
                images.push(Polynomial::from_terms(&sliced, terms));
            }
            for h in j.iter_mut() {
                *h = h.substitute(&sliced, &images)?;
            }
            let gs = g.substitute(&sliced, &images)?;
            if gs.is_zero() {
                log::debug!("residual e={e}: saturator vanishes on the slice, redrawing");
                continue;
            }
            if let Some(deg) = residual_from_hilbert(&saturation_hilbert(&sliced, &j, &gs)?) {
                return Ok((deg, attempt));
            }
        } else if let Some(deg) = residual_from_hilbert(&saturation_hilbert(&sliced, &j, &g)?) {
            return Ok((deg, attempt));
        }
        log::debug!("residual e={e}: draw {attempt} not generic");
    }
    Err(Error::Genericity { seed: policy.seed, attempts: policy.max_retries + 1 })
}

/// Finite residual: its degree; empty: zero; positive-dimensional: `None`.
fn residual_from_hilbert(h: &crate::hilbert::HilbertData) -> Option<BigInt> {
    match h.proj_dim {
        d if d < 0 => Some(BigInt::zero()),
        0 => Some(h.degree.clone().expect("nonempty has a degree")),
        _ => None,
    }
}

pub fn residual_degree(ideal: &Ideal, d: u32, e: usize, policy: &RandomPolicy) -> Result<BigInt> {
    residual_degree_with_retries(ideal, d, e, policy).map(|r| r.0)
}

/// Solve `d^{n-p} = R_{n-p} + Σ_{q=p}^{k} C(n-p, q-p) d^{q-p} s_q` for
/// `s_k, ..., s_0`, given `residuals = [R_{n-k}, ..., R_n]`.
pub fn segre_from_residuals(n: usize, k: usize, d: u32, residuals: &[BigInt]) -> Result<Vec<BigInt>> {
    if residuals.len() != k + 1 || k > n {
        return Err(Error::Invariant(format!("{} residuals for dimension {k}", residuals.len())));
    }
    let d = BigInt::from(d);
    // s[q] is the dimension-q Segre degree
    let mut s = vec![BigInt::zero(); k + 1];
    for p in (0..=k).rev() {
        let e = n - p;
        let mut v = d.pow(e as u32) - &residuals[e - (n - k)];
        for (q, sq) in s.iter().enumerate().skip(p + 1) {
            v -= binomial(e as u64, (q - p) as u64) * d.pow((q - p) as u32) * sq;
        }
        s[p] = v;
    }
    Ok(s.into_iter().rev().collect())
}

fn round_trip(n: usize, k: usize, d: u32, residuals: &[BigInt], degrees: &[BigInt]) -> Result<()> {
    let d = BigInt::from(d);
    let s = |q: usize| &degrees[k - q];
    for p in 0..=k {
        let e = n - p;
        let mut r = d.pow(e as u32);
        for q in p..=k {
            r -= binomial(e as u64, (q - p) as u64) * d.pow((q - p) as u32) * s(q);
        }
        if r != residuals[e - (n - k)] {
            return Err(Error::Invariant(format!(
                "residual round trip failed at e={e}: {r} != {}",
                residuals[e - (n - k)]
            )));
        }
    }
    Ok(())
}

/// Report genericity failures of derived sub-tasks under the caller's seed.
fn reseed(err: Error, seed: u64) -> Error {
    match err {
        Error::Genericity { attempts, .. } => Error::Genericity { seed, attempts },
        Error::VerificationMismatch { .. } => Error::VerificationMismatch { seed },
        other => other,
    }
}

struct SegreData {
    k: i64,
    d: Option<u32>,
    chow: ChowClass,
    retries: usize,
}

fn segre_degrees(ideal: &Ideal, k: usize, d: u32, policy: &RandomPolicy) -> Result<(Vec<BigInt>, usize)> {
    let n = ideal.ring().nvars() - 1;
    let found: Vec<(BigInt, usize)> = (n - k..=n)
        .into_par_iter()
        .map(|e| residual_degree_with_retries(ideal, d, e, policy))
        .collect::<Result<_>>()?;
    let residuals: Vec<BigInt> = found.iter().map(|r| r.0.clone()).collect();
    let retries = found.iter().map(|r| r.1).sum();
    let degrees = segre_from_residuals(n, k, d, &residuals)?;
    round_trip(n, k, d, &residuals, &degrees)?;
    Ok((degrees, retries))
}

fn segre_data(ideal: &Ideal, policy: &RandomPolicy) -> Result<SegreData> {
    let n = ideal.ring().nvars() - 1;
    if ideal.is_zero_ideal() {
        return Ok(SegreData { k: n as i64, d: None, chow: ChowClass::one(n), retries: 0 });
    }
    let k = ideal.proj_dim();
    if k < 0 {
        return Ok(SegreData { k, d: None, chow: ChowClass::zero(n), retries: 0 });
    }
    let k = k as usize;
    let d = ideal.max_degree().expect("nonzero ideal");
    let (degrees, retries) = segre_degrees(ideal, k, d, policy)?;
    if policy.verify {
        let (again, _) =
            segre_degrees(ideal, k, d, &policy.derived(VERIFY_LABEL)).map_err(|e| reseed(e, policy.seed))?;
        if again != degrees {
            return Err(Error::VerificationMismatch { seed: policy.seed });
        }
    }
    Ok(SegreData { k: k as i64, d: Some(d), chow: ChowClass::from_degrees(n, &degrees)?, retries })
}

/// Degrees of the Segre class `s(X, P^n)` of `X = V(I)`.
pub fn segre_class(ideal: &Ideal, policy: &RandomPolicy) -> Result<ClassReport> {
    ideal.check_characteristic()?;
    let s = segre_data(ideal, policy)?;
    Ok(ClassReport::build(ClassKind::Segre, s.k, s.d, s.chow, policy.seed, s.retries))
}

/// `(1+H)^{n+1} ∩ s(X, P^n)`: the Chern class of `T_X` when `X` is smooth,
/// the Chern–Fulton class otherwise.
pub fn chern_class(ideal: &Ideal, policy: &RandomPolicy) -> Result<ClassReport> {
    ideal.check_characteristic()?;
    let s = segre_data(ideal, policy)?;
    let n = s.chow.n();
    let chow = ChowClass::one_plus_dh_pow(n, 1, n as i64 + 1).mul(&s.chow)?;
    Ok(ClassReport::build(ClassKind::Chern, s.k, s.d, chow, policy.seed, s.retries))
}

fn csm_hypersurface_with_retries(f: &Polynomial, policy: &RandomPolicy) -> Result<(ChowClass, usize)> {
    let n = f.ring().nvars() - 1;
    let Some(d) = f.degree() else {
        return Err(Error::ZeroInput("CSM class of the zero polynomial"));
    };
    if d == 0 {
        return Ok((ChowClass::zero(n), 0));
    }
    let di = d as i64;
    let inv = ChowClass::one_plus_dh_pow(n, di, -1);
    let s_v = ChowClass::from_i64(n, &[0, di]).mul(&inv)?;
    let sing = segre_data(&jacobian_ideal(f)?, policy)?;
    let correction = inv.mul(&sing.chow.dual().tensor_line(di))?;
    let tangent = ChowClass::one_plus_dh_pow(n, 1, n as i64 + 1);
    Ok((tangent.mul(&s_v.add(&correction)?)?, sing.retries))
}

/// Pushforward of `c_SM(V(f))` for a squarefree hypersurface `f`.
pub fn csm_hypersurface(f: &Polynomial, policy: &RandomPolicy) -> Result<ChowClass> {
    csm_hypersurface_with_retries(f, policy).map(|r| r.0)
}

/// `c_SM(V(f_1, ..., f_m)) = Σ_{∅≠S} (-1)^{|S|+1} c_SM(V(Π_{i∈S} f_i))`.
pub fn csm_class(ideal: &Ideal, policy: &RandomPolicy) -> Result<ClassReport> {
    ideal.check_characteristic()?;
    let ring: &Arc<Ring> = ideal.ring();
    let n = ring.nvars() - 1;
    if ideal.is_zero_ideal() {
        let chow = ChowClass::one_plus_dh_pow(n, 1, n as i64 + 1);
        return Ok(ClassReport::build(ClassKind::Csm, n as i64, None, chow, policy.seed, 0));
    }
    let k = ideal.proj_dim();
    if k < 0 {
        return Ok(ClassReport::build(ClassKind::Csm, k, None, ChowClass::zero(n), policy.seed, 0));
    }
    let gens = ideal.generators();
    let m = gens.len();
    if m > 8 {
        log::warn!("{m} generators: {} hypersurface CSM computations", (1u64 << m) - 1);
    }
    let terms: Vec<(ChowClass, usize)> = (1u64..1 << m)
        .into_par_iter()
        .map(|mask| {
            let mut prod = Polynomial::one(ring);
            for (i, g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    prod = prod.mul(g)?;
                }
            }
            let (c, r) = csm_hypersurface_with_retries(&prod, &policy.derived(SUBSET_LABEL + mask))
                .map_err(|e| reseed(e, policy.seed))?;
            Ok((if mask.count_ones() % 2 == 1 { c } else { c.scale(&-BigInt::one()) }, r))
        })
        .collect::<Result<_>>()?;
    let mut chow = ChowClass::zero(n);
    let mut retries = 0;
    for (c, r) in &terms {
        chow = chow.add(c)?;
        retries += r;
    }
    Ok(ClassReport::build(ClassKind::Csm, k, None, chow, policy.seed, retries))
}

/// Topological Euler characteristic of `V(I)`: the degree of the
/// dimension-0 part of its CSM class.
pub fn euler_characteristic(ideal: &Ideal, policy: &RandomPolicy) -> Result<BigInt> {
    Ok(csm_class(ideal, policy)?.euler.expect("csm report"))
}

/// `χ(V(I) \ V(J)) = χ(V(I)) - χ(V(I + J))`.
pub fn euler_complement(i: &Ideal, j: &Ideal, policy: &RandomPolicy) -> Result<BigInt> {
    let whole = euler_characteristic(i, policy)?;
    let cut = euler_characteristic(&i.sum(j)?, policy)?;
    Ok(whole - cut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldPrime;
    use crate::parse::parse_polynomial;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names, FieldPrime::default()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    const TWISTED: &str = "y^2 - x*z, y*z - x*w, z^2 - y*w";

    #[test]
    fn solving_residual_systems() {
        assert_eq!(segre_from_residuals(3, 1, 2, &big(&[1, 0])).unwrap(), big(&[3, -10]));
        assert_eq!(segre_from_residuals(3, 2, 1, &big(&[0, 0, 0])).unwrap(), big(&[1, -1, 1]));
        assert_eq!(segre_from_residuals(2, 0, 1, &big(&[0])).unwrap(), big(&[1]));
        assert!(segre_from_residuals(3, 1, 2, &big(&[1])).is_err());
    }

    #[test]
    fn round_trip_detects_tampering() {
        let r = big(&[1, 0]);
        assert!(round_trip(3, 1, 2, &r, &big(&[3, -10])).is_ok());
        assert!(round_trip(3, 1, 2, &r, &big(&[3, -9])).is_err());
    }

    #[test]
    fn twisted_cubic_residuals() {
        let r = ring(&["x", "y", "z", "w"]);
        let tc = Ideal::parse(&r, TWISTED).unwrap();
        let pol = RandomPolicy::new(1);
        assert_eq!(residual_degree(&tc, 2, 2, &pol).unwrap(), BigInt::from(1));
        assert_eq!(residual_degree(&tc, 2, 3, &pol).unwrap(), BigInt::from(0));
        assert!(residual_degree(&tc, 2, 1, &pol).is_err());
        let plane = Ideal::parse(&r, "x").unwrap();
        assert_eq!(residual_degree(&plane, 1, 1, &pol).unwrap(), BigInt::from(0));
    }

    #[test]
    fn twisted_cubic_classes() {
        let r = ring(&["x", "y", "z", "w"]);
        let tc = Ideal::parse(&r, TWISTED).unwrap();
        let pol = RandomPolicy::new(7);
        let s = segre_class(&tc, &pol).unwrap();
        assert_eq!(s.degrees, big(&[3, -10]));
        let c = chern_class(&tc, &pol).unwrap();
        assert_eq!(c.degrees, big(&[3, 2]));
        assert_eq!(c.chow.to_string(), "3*H^2 + 2*H^3");
        assert_eq!((c.k, c.d), (1, Some(2)));
        let m = csm_class(&tc, &pol).unwrap();
        assert_eq!(m.chow, c.chow);
        assert_eq!(m.euler, Some(BigInt::from(2)));
    }

    #[test]
    fn whitney_singular_locus() {
        let r = ring(&["x", "y", "z", "w"]);
        let f = parse_polynomial("x^2*w - y^2*z", &r).unwrap();
        let s = segre_class(&jacobian_ideal(&f).unwrap(), &RandomPolicy::new(3)).unwrap();
        assert_eq!(s.degrees, big(&[1, 0]));
        assert_eq!(s.d, Some(3));
    }

    #[test]
    fn small_segre_and_chern() {
        let r2 = ring(&["x", "y", "z"]);
        let pol = RandomPolicy::new(5);
        let pt = Ideal::parse(&r2, "x, y").unwrap();
        assert_eq!(segre_class(&pt, &pol).unwrap().degrees, big(&[1]));
        let r = ring(&["x", "y", "z", "w"]);
        let line = Ideal::parse(&r, "x, y").unwrap();
        assert_eq!(chern_class(&line, &pol).unwrap().degrees, big(&[1, 2]));
        let conic = Ideal::parse(&r, "x, y^2 + z^2 + w^2").unwrap();
        assert_eq!(segre_class(&conic, &pol).unwrap().degrees[0], BigInt::from(2));
    }

    #[test]
    fn zero_and_empty() {
        let r = ring(&["x", "y", "z", "w"]);
        let pol = RandomPolicy::new(0);
        let zero = Ideal::zero(&r);
        let s = segre_class(&zero, &pol).unwrap();
        assert_eq!((s.k, s.degrees.clone()), (3, big(&[1, 0, 0, 0])));
        let csm = csm_class(&zero, &pol).unwrap();
        assert_eq!(csm.chow.to_string(), "1 + 4*H + 6*H^2 + 4*H^3");
        assert_eq!(csm.euler, Some(BigInt::from(4)));
        let empty = Ideal::parse(&r, "x, y, z, w").unwrap();
        let e = chern_class(&empty, &pol).unwrap();
        assert!(e.degrees.is_empty() && e.chow.is_zero() && e.k == -1);
    }

    #[test]
    fn plane_curves() {
        let r = ring(&["x", "y", "z"]);
        let pol = RandomPolicy::new(11);
        let csm = |s: &str| csm_hypersurface(&parse_polynomial(s, &r).unwrap(), &pol).unwrap().to_string();
        assert_eq!(csm("x^2 + y^2 + z^2"), "2*H + 2*H^2");
        assert_eq!(csm("y^2*z - x^3 - x^2*z"), "3*H + H^2");
        assert_eq!(csm("y^2*z - x^3"), "3*H + 2*H^2");
        let pt = Ideal::parse(&r, "x, y").unwrap();
        let m = csm_class(&pt, &pol).unwrap();
        assert_eq!((m.chow.to_string(), m.euler), ("H^2".to_string(), Some(BigInt::from(1))));
    }

    #[test]
    fn reducible_surfaces() {
        let r = ring(&["x", "y", "z", "w"]);
        let pol = RandomPolicy::new(2);
        let csm = |s: &str| csm_hypersurface(&parse_polynomial(s, &r).unwrap(), &pol).unwrap();
        // two planes meeting in a line: χ = 3 + 3 - 2
        assert_eq!(csm("x*y").to_string(), "2*H + 5*H^2 + 4*H^3");
        assert_eq!(csm("x*y*z").coeff(3), &BigInt::from(4));
        assert_eq!(csm("x*y*z*w").coeff(3), &BigInt::from(4));
        // cone over a smooth conic
        assert_eq!(csm("x*y - z^2").coeff(3), &BigInt::from(3));
    }

    #[test]
    fn complements() {
        let r = ring(&["x", "y", "z", "w"]);
        let pol = RandomPolicy::new(9);
        let tc = Ideal::parse(&r, TWISTED).unwrap();
        assert_eq!(euler_complement(&tc, &Ideal::zero(&r), &pol).unwrap(), BigInt::zero());
        assert_eq!(euler_complement(&tc, &Ideal::unit(&r), &pol).unwrap(), BigInt::from(2));
        // a plane minus a line in it
        let plane = Ideal::parse(&r, "x").unwrap();
        let other = Ideal::parse(&r, "y").unwrap();
        assert_eq!(euler_complement(&plane, &other, &pol).unwrap(), BigInt::from(1));
    }

    #[test]
    fn characteristic_hazard() {
        let r = Ring::new(&["x", "y", "z"], FieldPrime::new(3).unwrap()).unwrap();
        let cubic = Ideal::parse(&r, "x^3 + y^3 + z^3").unwrap();
        assert!(matches!(
            segre_class(&cubic, &RandomPolicy::new(0)),
            Err(Error::CharacteristicHazard { prime: 3, degree: 3, index: 1 })
        ));
    }

    #[test]
    fn verify_mode_agrees() {
        let r = ring(&["x", "y", "z", "w"]);
        let tc = Ideal::parse(&r, TWISTED).unwrap();
        let pol = RandomPolicy { verify: true, ..RandomPolicy::new(4) };
        assert_eq!(chern_class(&tc, &pol).unwrap().degrees, big(&[3, 2]));
    }
}
