//! Degrees of Segre, Chern(-Fulton) and Chern–Schwartz–MacPherson classes of
//! closed subschemes of projective space, computed symbolically over a prime
//! field from the degrees of residual intersections.

pub mod chow;
pub mod classes;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod random;
pub mod ring;

pub use chow::ChowClass;
pub use classes::{
    chern_class, csm_class, csm_hypersurface, euler_characteristic, euler_complement, residual_degree, segre_class,
    segre_from_residuals, ClassKind, ClassReport, RandomPolicy,
};
pub use error::{Error, Result};
pub use field::{FieldPrime, Fp, DEFAULT_PRIME};
pub use groebner::{buchberger_reduced_gb, GroebnerBasis};
pub use hilbert::{hilbert_numerator, HilbertData};
pub use ideal::{jacobian_ideal, Ideal};
pub use monomial::{monomial_compare, Monomial, MonomialOrder};
pub use parse::{parse_generators, parse_polynomial};
pub use poly::Polynomial;
pub use random::{random_form, SeededRng};
pub use ring::Ring;
