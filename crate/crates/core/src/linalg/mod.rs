//! Exact sparse linear algebra over a [`Scalar`] field.

mod dense;
mod echelon;
mod eigen;
mod sparse;

pub use dense::{bareiss_rank, modular_rank};
pub use echelon::{image_vectors, kernel_vectors, rank, row_echelon, solve, Echelon, Insert};
pub use eigen::{minimal_polynomial, rational_roots, simultaneous_diagonalization, JointEigenspace};
pub use sparse::{SparseMatrix, SparseVec};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A linear subspace of `S^ambient_dim` given by independent basis vectors.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    ambient_dim: usize,
    basis: Vec<SparseVec<S>>,
    echelon: Echelon<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), echelon: Echelon::with_tracking(ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, (0..ambient_dim).map(SparseVec::unit))
    }

    /// Span of `vectors`; dependent vectors are dropped, order is kept.
    pub fn span<I: IntoIterator<Item = SparseVec<S>>>(ambient_dim: usize, vectors: I) -> Self {
        let mut s = Self::zero(ambient_dim);
        for v in vectors {
            s.push(v);
        }
        s
    }

    /// Adds `v` if it is independent of the current basis. Returns whether it was added.
    pub fn push(&mut self, v: SparseVec<S>) -> bool {
        debug_assert!(v.max_index().is_none_or(|i| i < self.ambient_dim));
        if self.echelon.contains(&v) {
            return false;
        }
        self.echelon.insert(&v);
        self.basis.push(v);
        true
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        self.echelon.contains(v)
    }

    /// Coefficients of `v` in the basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec<S>) -> Option<SparseVec<S>> {
        // tracked echelon inserts exactly the basis vectors, in order
        self.echelon.express(v)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    /// Vectors of `self` completing a basis of `sub` to a basis of `self`,
    /// taken greedily from `self`'s basis order.
    pub fn complement_of(&self, sub: &Self) -> Result<Vec<SparseVec<S>>> {
        if !sub.is_subspace_of(self) {
            return Err(Error::NotSubspace("second space is not contained in the first".into()));
        }
        let mut acc = sub.clone();
        Ok(self.basis.iter().filter(|v| acc.push((*v).clone())).cloned().collect())
    }
}

pub fn kernel_basis<S: Scalar>(a: &SparseMatrix<S>) -> Subspace<S> {
    Subspace::span(a.ncols(), kernel_vectors(a))
}

pub fn image_basis<S: Scalar>(a: &SparseMatrix<S>) -> Subspace<S> {
    Subspace::span(a.nrows(), image_vectors(a))
}

/// `dim W - dim U`, after checking `U ⊆ W`.
pub fn quotient_dim<S: Scalar>(w: &Subspace<S>, u: &Subspace<S>) -> Result<usize> {
    if !u.is_subspace_of(w) {
        return Err(Error::NotSubspace("second space is not contained in the first".into()));
    }
    Ok(w.dim() - u.dim())
}
