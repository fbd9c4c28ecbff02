//! Linear combinations of Schur functions with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partitions::Partition;

/// `Σ c_ν s_ν` with only nonzero coefficients stored.
///
/// All keys are partitions of one common size; mixing sizes panics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// `s_λ` with coefficient 1.
    pub fn single(lambda: Partition) -> Self {
        let mut e = Self::new();
        e.add_term(lambda, 1);
        e
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut e = Self::new();
        for (nu, c) in terms {
            e.add_term(nu, c);
        }
        e
    }

    /// Adds `c·s_ν`, dropping the term if it cancels.
    pub fn add_term(&mut self, nu: Partition, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        if let Some((first, _)) = self.terms.iter().next() {
            assert_eq!(
                first.size(),
                nu.size(),
                "Schur expansion mixes degrees {} and {}",
                first.size(),
                nu.size()
            );
        }
        let slot = self.terms.entry(nu).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Coefficient of `s_ν` (zero if absent).
    pub fn coeff(&self, nu: &Partition) -> BigInt {
        self.terms.get(nu).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the terms, `None` for the zero expansion.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Partition::size)
    }

    /// Terms in descending lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Terms in ascending lexicographic order.
    pub fn iter_ascending(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    /// Every stored coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// Every coefficient is 0 or 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(One::is_one)
    }

    /// A term with coefficient at least 2, largest first.
    pub fn multiplicity_witness(&self) -> Option<(&Partition, &BigInt)> {
        let two = BigInt::from(2);
        self.iter().find(|(_, c)| **c >= two)
    }

    /// A term with negative coefficient, largest first.
    pub fn negative_term(&self) -> Option<(&Partition, &BigInt)> {
        self.iter().find(|(_, c)| c.is_negative())
    }

    /// Lex-smallest term.
    pub fn min_term(&self) -> Option<(&Partition, &BigInt)> {
        self.terms.iter().next()
    }

    /// `Σ c_ν s_ν'`.
    pub fn conjugate(&self) -> Self {
        SchurExpansion {
            terms: self.terms.iter().map(|(nu, c)| (nu.conjugate(), c.clone())).collect(),
        }
    }

    pub fn scaled(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self::from_terms(self.terms.iter().map(|(nu, c)| (nu.clone(), c * &k)))
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl FromIterator<(Partition, BigInt)> for SchurExpansion {
    fn from_iter<T: IntoIterator<Item = (Partition, BigInt)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

impl AddAssign<&SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: &SchurExpansion) {
        for (nu, c) in &rhs.terms {
            self.add_term(nu.clone(), c.clone());
        }
    }
}

impl SubAssign<&SchurExpansion> for SchurExpansion {
    fn sub_assign(&mut self, rhs: &SchurExpansion) {
        for (nu, c) in &rhs.terms {
            self.add_term(nu.clone(), -c);
        }
    }
}

impl Add for SchurExpansion {
    type Output = SchurExpansion;
    fn add(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self += &rhs;
        self
    }
}

impl Sub for SchurExpansion {
    type Output = SchurExpansion;
    fn sub(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self -= &rhs;
        self
    }
}

impl Neg for SchurExpansion {
    type Output = SchurExpansion;
    fn neg(self) -> SchurExpansion {
        SchurExpansion {
            terms: self.terms.into_iter().map(|(nu, c)| (nu, -c)).collect(),
        }
    }
}

impl fmt::Display for SchurExpansion {
    /// One `ν : c` line per term, descending lex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (nu, c) in self.iter() {
            writeln!(f, "{nu:?} : {c}")?;
        }
        Ok(())
    }
}
