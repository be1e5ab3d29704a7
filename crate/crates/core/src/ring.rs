use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// Polynomial ring `F_p[x_0, ..., x_{v-1}]` with a fixed monomial order and
/// an optional positive grading of the variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: FieldPrime,
    order: MonomialOrder,
    weights: Option<Vec<u32>>,
}

impl Ring {
    /// Standard-graded ring under degrevlex. Names must be unique
    /// identifiers; one slot is kept free for auxiliary variables.
    pub fn new<S: AsRef<str>>(names: &[S], field: FieldPrime) -> Result<Arc<Ring>> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        if names.len() >= MAX_VARS {
            return Err(Error::InvalidRing(format!("at most {} variables are supported", MAX_VARS - 1)));
        }
        let mut seen = HashSet::new();
        for n in names {
            let n = n.as_ref();
            let mut chars = n.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric());
            if !ok {
                return Err(Error::InvalidRing(format!("invalid variable name {n:?}")));
            }
            if !seen.insert(n) {
                return Err(Error::InvalidRing(format!("duplicate variable name {n:?}")));
            }
        }
        Ok(Arc::new(Ring {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
            field,
            order: MonomialOrder::DegRevLex,
            weights: None,
        }))
    }

    /// Internal constructor without name validation.
    pub(crate) fn raw(
        names: Vec<String>,
        field: FieldPrime,
        order: MonomialOrder,
        weights: Option<Vec<u32>>,
    ) -> Arc<Ring> {
        assert!(names.len() <= MAX_VARS, "too many variables");
        let weights = weights.filter(|w| w.iter().any(|&x| x != 1));
        Arc::new(Ring { names, field, order, weights })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_weighted(a, b, self.weights.as_deref())
    }

    /// Degree of a monomial in this ring's grading.
    #[inline]
    pub fn degree_of(&self, m: &Monomial) -> u32 {
        m.weighted_degree(self.weights.as_deref())
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    /// Same variables and grading, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Ring::raw(self.names.clone(), self.field, order, self.weights.clone())
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Ring>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    pub(crate) fn check_same(self: &Arc<Self>, other: &Arc<Ring>) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }

    /// A fresh variable name not clashing with the existing ones.
    pub(crate) fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.var_index(&name).is_some() {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.field, self.names.join(","))
    }
}
