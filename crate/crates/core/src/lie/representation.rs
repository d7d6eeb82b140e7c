use std::sync::Arc;

use super::algebra::{LieAlgebra, Violation};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, SparseMatrix, SparseVec, Subspace};
use crate::scalar::Scalar;

/// A representation `ρ` of a Lie algebra on `S^dim`, one matrix per basis element.
#[derive(Clone, Debug)]
pub struct Representation<S> {
    algebra: Arc<LieAlgebra<S>>,
    dim: usize,
    action: Vec<SparseMatrix<S>>,
}

impl<S: Scalar> Representation<S> {
    /// No validation. Used for truncated modules and for negative tests.
    pub fn new_unchecked(algebra: Arc<LieAlgebra<S>>, dim: usize, action: Vec<SparseMatrix<S>>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Dimension(format!(
                "{} action matrices for an algebra of dim {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::Dimension(format!("action matrix {}x{} on a space of dim {dim}", m.nrows(), m.ncols())));
        }
        Ok(Representation { algebra, dim, action })
    }

    pub fn new(algebra: Arc<LieAlgebra<S>>, dim: usize, action: Vec<SparseMatrix<S>>) -> Result<Self> {
        let r = Self::new_unchecked(algebra, dim, action)?;
        if let Some(v) = r.check().first() {
            return Err(Error::InvalidRepresentation(v.to_string()));
        }
        Ok(r)
    }

    pub fn trivial(algebra: Arc<LieAlgebra<S>>, dim: usize) -> Self {
        let action = vec![SparseMatrix::zeros(dim, dim); algebra.dim()];
        Representation { algebra, dim, action }
    }

    pub fn adjoint(algebra: Arc<LieAlgebra<S>>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        Representation { dim: algebra.dim(), algebra, action }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[SparseMatrix<S>] {
        &self.action
    }

    /// `ρ(e_i)`
    pub fn rho(&self, i: usize) -> &SparseMatrix<S> {
        &self.action[i]
    }

    /// `ρ(x)` for an arbitrary algebra element.
    pub fn rho_of(&self, x: &SparseVec<S>) -> SparseMatrix<S> {
        let mut acc = SparseMatrix::zeros(self.dim, self.dim);
        for (i, c) in x.iter() {
            acc = acc.add_scaled(&self.action[i], c).expect("same shape");
        }
        acc
    }

    /// `ρ(x) v`
    pub fn act(&self, x: &SparseVec<S>, v: &SparseVec<S>) -> SparseVec<S> {
        let mut acc = SparseVec::zero();
        for (i, c) in x.iter() {
            acc = acc.add_scaled(&self.action[i].mul_vec(v), c);
        }
        acc
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    pub(crate) fn require_same_algebra(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch("representations of different Lie algebras".into()))
        }
    }

    /// Every basis pair violating the commutator identity; empty means valid.
    pub fn check(&self) -> Vec<Violation> {
        let n = self.algebra.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.rho_of(self.algebra.bracket_basis(i, j));
                let rhs = self.action[i].commutator(&self.action[j]).expect("square");
                if lhs != rhs {
                    out.push(Violation::Commutator { i, j });
                }
            }
        }
        out
    }

    /// `H^0`: the joint kernel of all `ρ(e_i)`.
    pub fn invariants(&self) -> Subspace<S> {
        let refs: Vec<&SparseMatrix<S>> = self.action.iter().collect();
        if refs.is_empty() {
            return Subspace::full(self.dim);
        }
        kernel_basis(&SparseMatrix::vstack(&refs).expect("same width"))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.require_same_algebra(other)?;
        let action = self.action.iter().zip(&other.action).map(|(a, b)| SparseMatrix::block_diag(a, b)).collect();
        Ok(Representation { algebra: self.algebra.clone(), dim: self.dim + other.dim, action })
    }

    /// Restriction to an invariant subspace with the given basis (columns of `basis`).
    pub fn restrict(&self, basis: &[SparseVec<S>]) -> Result<Self> {
        let sub = Subspace::span(self.dim, basis.iter().cloned());
        if sub.dim() != basis.len() {
            return Err(Error::Dimension("restriction basis is not independent".into()));
        }
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols = basis
                    .iter()
                    .map(|b| {
                        sub.coordinates(&m.mul_vec(b))
                            .ok_or_else(|| Error::InvalidRepresentation("subspace is not invariant".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(SparseMatrix::from_columns(basis.len(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { algebra: self.algebra.clone(), dim: basis.len(), action })
    }
}

/// Index of the map entry `T[r][c]` in the vectorization of `Hom(V1, V2)`.
pub fn hom_index(dim_source: usize, r: usize, c: usize) -> usize {
    r * dim_source + c
}

/// Vectorizes a `dim_target x dim_source` matrix, row-major.
pub fn hom_vectorize<S: Scalar>(t: &SparseMatrix<S>) -> SparseVec<S> {
    let n = t.ncols();
    SparseVec::from_pairs(t.triplets().map(|(r, c, v)| (hom_index(n, r, c), v.clone())))
}

pub fn hom_unvectorize<S: Scalar>(v: &SparseVec<S>, dim_target: usize, dim_source: usize) -> SparseMatrix<S> {
    SparseMatrix::from_triplets(
        dim_target,
        dim_source,
        v.iter().map(|(k, x)| (k / dim_source, k % dim_source, x.clone())),
    )
    .expect("index within Hom space")
}

/// `Hom(V1, V2)` with `(x.T) = ρ2(x) T - T ρ1(x)`, vectorized by [`hom_index`].
pub fn hom_module<S: Scalar>(r1: &Representation<S>, r2: &Representation<S>) -> Result<Representation<S>> {
    r1.require_same_algebra(r2)?;
    let (n1, n2) = (r1.dim(), r2.dim());
    let action = (0..r1.algebra().dim())
        .map(|i| {
            let mut trip = Vec::new();
            // (ρ2 T)[r][c] = Σ_k ρ2[r][k] T[k][c]
            for (r, k, a) in r2.rho(i).triplets() {
                for c in 0..n1 {
                    trip.push((hom_index(n1, r, c), hom_index(n1, k, c), a.clone()));
                }
            }
            // (T ρ1)[r][c] = Σ_k T[r][k] ρ1[k][c]
            for (k, c, a) in r1.rho(i).triplets() {
                for r in 0..n2 {
                    trip.push((hom_index(n1, r, c), hom_index(n1, r, k), -a.clone()));
                }
            }
            SparseMatrix::from_triplets(n1 * n2, n1 * n2, trip).expect("indices in range")
        })
        .collect();
    Ok(Representation { algebra: r1.algebra().clone(), dim: n1 * n2, action })
}
