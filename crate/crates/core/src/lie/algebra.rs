use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::scalar::Scalar;

/// One failed identity found by a validation pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `c^k_ij != -c^k_ji`
    Antisymmetry { i: usize, j: usize, k: usize },
    /// Jacobi identity fails in component `v` for the triple `(i, j, k)`.
    Jacobi { i: usize, j: usize, k: usize, v: usize },
    /// `ρ([e_i, e_j]) != [ρ(e_i), ρ(e_j)]`
    Commutator { i: usize, j: usize },
    /// Affine axiom fails for basis pair `(i, j)` at sample `sample`.
    AffineAxiom { i: usize, j: usize, sample: usize },
    /// Cocycle identity fails on basis tuple `tuple`.
    Cocycle { tuple: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => write!(f, "c^{k}_{{{i}{j}}} != -c^{k}_{{{j}{i}}}"),
            Violation::Jacobi { i, j, k, v } => write!(f, "Jacobi fails for ({i}, {j}, {k}) in component {v}"),
            Violation::Commutator { i, j } => write!(f, "rho([e{i}, e{j}]) != [rho(e{i}), rho(e{j})]"),
            Violation::AffineAxiom { i, j, sample } => {
                write!(f, "x.(y.a) - y.(x.a) - [x,y].a != 0 for x = e{i}, y = e{j}, sample {sample}")
            }
            Violation::Cocycle { tuple } => write!(f, "cocycle identity fails on {tuple:?}"),
        }
    }
}

/// A finite-dimensional Lie algebra given by structure constants.
///
/// The table stores `[e_i, e_j]` for every ordered pair, so an invalid table
/// (for instance one that is not antisymmetric) can be represented and
/// reported by [`LieAlgebra::check`].
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<S> {
    dim: usize,
    labels: Vec<String>,
    table: Vec<SparseVec<S>>,
}

impl<S: Scalar> LieAlgebra<S> {
    /// Raw table from `(i, j, k, c^k_ij)` entries, no validation. Pairs not
    /// listed bracket to zero.
    pub fn from_constants_unchecked<I>(labels: Vec<String>, constants: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, S)>,
    {
        let dim = labels.len();
        let mut pairs: Vec<Vec<(usize, S)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Dimension(format!("structure constant ({i}, {j}, {k}) outside dim {dim}")));
            }
            pairs[i * dim + j].push((k, c));
        }
        Ok(LieAlgebra { dim, labels, table: pairs.into_iter().map(SparseVec::from_pairs).collect() })
    }

    /// Validated table from `(i, j, k, c^k_ij)` entries.
    pub fn from_constants<I>(labels: Vec<String>, constants: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, S)>,
    {
        let alg = Self::from_constants_unchecked(labels, constants)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Table from brackets of pairs `i < j`, extended antisymmetrically and validated.
    pub fn from_upper_brackets(
        labels: Vec<String>,
        mut bracket: impl FnMut(usize, usize) -> SparseVec<S>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = vec![SparseVec::zero(); dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let b = bracket(i, j);
                if b.max_index().is_some_and(|k| k >= dim) {
                    return Err(Error::Dimension(format!("[e{i}, e{j}] has a component outside dim {dim}")));
                }
                table[j * dim + i] = b.neg();
                table[i * dim + j] = b;
            }
        }
        let alg = LieAlgebra { dim, labels, table };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        match self.check().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidAlgebra(v.to_string())),
        }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            labels: (0..dim).map(|i| format!("a{i}")).collect(),
            table: vec![SparseVec::zero(); dim * dim],
        }
    }

    /// `sl_2` in the basis `(e, f, h)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let s = |n: i64| S::from_i64(n);
        Self::from_constants(
            vec!["e".into(), "f".into(), "h".into()],
            [(2, 0, 0, s(2)), (0, 2, 0, s(-2)), (2, 1, 1, s(-2)), (1, 2, 1, s(2)), (0, 1, 2, s(1)), (1, 0, 2, s(-1))],
        )
        .expect("sl2 constants are valid")
    }

    /// The Borel subalgebra of `sl_2` in the basis `(e, h)`, `[h, e] = 2e`.
    pub fn borel_sl2() -> Self {
        Self::from_constants(vec!["e".into(), "h".into()], [(1, 0, 0, S::from_i64(2)), (0, 1, 0, S::from_i64(-2))])
            .expect("borel constants are valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[e_i, e_j]`
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec<S> {
        &self.table[i * self.dim + j]
    }

    /// `c^k_ij`
    pub fn constant(&self, i: usize, j: usize, k: usize) -> S {
        self.bracket_basis(i, j).get(k)
    }

    /// Nonzero constants as `(i, j, k, c^k_ij)`, over all ordered pairs.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &S)> + '_ {
        (0..self.dim * self.dim).flat_map(move |p| {
            let (i, j) = (p / self.dim, p % self.dim);
            self.table[p].iter().map(move |(k, c)| (i, j, k, c))
        })
    }

    pub fn bracket(&self, x: &SparseVec<S>, y: &SparseVec<S>) -> SparseVec<S> {
        let mut acc = SparseVec::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc = acc.add_scaled(self.bracket_basis(i, j), &a.mul_ref(b));
            }
        }
        acc
    }

    /// Matrix of `ad(e_i)`.
    pub fn ad(&self, i: usize) -> SparseMatrix<S> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.bracket_basis(i, j).clone()).collect();
        SparseMatrix::from_columns(self.dim, &cols)
    }

    /// Every violated antisymmetry and Jacobi instance; empty means valid.
    pub fn check(&self) -> Vec<Violation> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let s = self.bracket_basis(i, j).add(self.bracket_basis(j, i));
                for (k, _) in s.iter() {
                    out.push(Violation::Antisymmetry { i, j, k });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let ei = SparseVec::unit(i);
                    let ej = SparseVec::unit(j);
                    let ek = SparseVec::unit(k);
                    let total = self
                        .bracket(&self.bracket(&ei, &ej), &ek)
                        .add(&self.bracket(&self.bracket(&ej, &ek), &ei))
                        .add(&self.bracket(&self.bracket(&ek, &ei), &ej));
                    for (v, _) in total.iter() {
                        out.push(Violation::Jacobi { i, j, k, v });
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn textbook_algebras_are_valid() {
        assert!(LieAlgebra::<Rational>::abelian(3).check().is_empty());
        assert!(LieAlgebra::<Rational>::sl2().check().is_empty());
        assert!(LieAlgebra::<Rational>::borel_sl2().check().is_empty());
    }

    #[test]
    fn non_antisymmetric_table_is_reported() {
        // c^1_12 = 1 and c^1_21 = 1, 1-based
        let alg = LieAlgebra::<Rational>::from_constants_unchecked(
            vec!["x".into(), "y".into()],
            [(0, 1, 0, Rational::from_i64(1)), (1, 0, 0, Rational::from_i64(1))],
        )
        .unwrap();
        assert!(alg.check().contains(&Violation::Antisymmetry { i: 0, j: 1, k: 0 }));
        assert!(LieAlgebra::<Rational>::from_constants(
            vec!["x".into(), "y".into()],
            [(0, 1, 0, Rational::from_i64(1)), (1, 0, 0, Rational::from_i64(1))],
        )
        .is_err());
    }
}
