use std::collections::HashMap;

use super::polynomial::{Monomial, Polynomial};
use crate::linalg::SparseVec;
use crate::scalar::Rational;

/// Assigns consecutive coordinates to `(component, monomial)` keys on first use.
#[derive(Clone, Debug, Default)]
pub struct TermIndex {
    map: HashMap<(usize, Monomial), usize>,
}

impl TermIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, comp: usize, e: &Monomial) -> Option<usize> {
        self.map.get(&(comp, e.clone())).copied()
    }

    pub fn index(&mut self, comp: usize, e: &Monomial) -> usize {
        let n = self.map.len();
        *self.map.entry((comp, e.clone())).or_insert(n)
    }

    /// Coordinates of a list of component polynomials, growing the index.
    pub fn vectorize(&mut self, comps: &[Polynomial]) -> SparseVec<Rational> {
        let mut pairs = Vec::new();
        for (k, p) in comps.iter().enumerate() {
            for (e, c) in p.terms() {
                pairs.push((self.index(k, e), c.clone()));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// As [`Self::vectorize`] without growing; `None` if a key is unknown.
    pub fn lookup(&self, comps: &[Polynomial]) -> Option<SparseVec<Rational>> {
        let mut pairs = Vec::new();
        for (k, p) in comps.iter().enumerate() {
            for (e, c) in p.terms() {
                pairs.push((self.get(k, e)?, c.clone()));
            }
        }
        Some(SparseVec::from_pairs(pairs))
    }
}
