//! Finitely supported linear combinations over an ordered basis.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::{Add, Neg, Sub};

use crate::field::Field;

/// A sparse combination `Σ c_k · k`. Zero coefficients are never stored, so
/// structural equality is equality of vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, F> {
    terms: BTreeMap<K, F>,
}

impl<K: Ord, F> Default for LinComb<K, F> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> LinComb<K, F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: F) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::single(key, F::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: K, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &Self, scale: &F) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone() * scale.clone());
        }
    }

    pub fn scaled(&self, scale: &F) -> Self {
        if scale.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * scale.clone()))
                .collect(),
        }
    }

    pub fn coefficient(&self, key: &K) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn get(&self, key: &K) -> Option<&F> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, F> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, F> {
        self.terms.keys()
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Relabels every key; colliding images are summed.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2, F> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Extends a map on basis keys linearly.
    pub fn try_flat_map<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2, F>, E>,
    ) -> Result<LinComb<K2, F>, E> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone, F: Field> FromIterator<(K, F)> for LinComb<K, F> {
    fn from_iter<I: IntoIterator<Item = (K, F)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord, F> IntoIterator for LinComb<K, F> {
    type Item = (K, F);
    type IntoIter = btree_map::IntoIter<K, F>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord, F> IntoIterator for &'a LinComb<K, F> {
    type Item = (&'a K, &'a F);
    type IntoIter = btree_map::Iter<'a, K, F>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, F: Field> Add for LinComb<K, F> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone, F: Field> Sub for LinComb<K, F> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl<K: Ord + Clone, F: Field> Neg for LinComb<K, F> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}
