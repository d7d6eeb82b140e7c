//! `sl_{m+1}` as projective vector fields on `R^m`, and `S¹₂(R^m)` as its
//! graded module.

use std::sync::Arc;

use num_traits::One;

use super::fields::{bracket, npairs, Connection, VectorField, S12};
use super::index::TermIndex;
use super::polynomial::{monomials_of_degree, Polynomial};
use crate::cohomology::Cochain;
use crate::error::{Error, Result};
use crate::lie::{GradedRepresentation, LieAlgebra, Representation};
use crate::linalg::{kernel_vectors, solve, SparseMatrix, SparseVec, Subspace};
use crate::scalar::Rational;

/// `sl_{m+1}` realized by `∂_i`, `x^j∂_i` and `x^a E`, with `E = Σ x^u∂_u`.
#[derive(Clone, Debug)]
pub struct ProjectiveAlgebra {
    m: usize,
    algebra: Arc<LieAlgebra<Rational>>,
    fields: Vec<VectorField>,
    weights: Vec<i64>,
    euler: usize,
}

/// Basis order: `∂_0 … ∂_{m−1}`; `x^j∂_i` for all `(i, j) ≠ (m−1, m−1)`; `E`;
/// `x^0E … x^{m−1}E`.
pub fn sl_projective(m: usize) -> Result<ProjectiveAlgebra> {
    if m < 2 {
        return Err(Error::Dimension(format!("projective algebra needs m > 1, got {m}")));
    }
    let mut fields = Vec::new();
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    for i in 0..m {
        fields.push(VectorField::partial(m, i));
        labels.push(format!("d{}", i + 1));
        weights.push(-1);
    }
    for i in 0..m {
        for j in 0..m {
            if (i, j) == (m - 1, m - 1) {
                continue;
            }
            let mut e = vec![0; m];
            e[j] = 1;
            fields.push(VectorField::monomial(m, i, e, Rational::one()));
            labels.push(format!("x{}d{}", j + 1, i + 1));
            weights.push(0);
        }
    }
    let euler = fields.len();
    fields.push(VectorField::euler(m));
    labels.push("E".into());
    weights.push(0);
    for a in 0..m {
        fields.push(VectorField::euler(m).mul_fn(&Polynomial::var(m, a)));
        labels.push(format!("x{}E", a + 1));
        weights.push(1);
    }

    let mut index = TermIndex::new();
    let cols: Vec<SparseVec<Rational>> = fields.iter().map(|x| index.vectorize(x.components())).collect();
    let mut brackets = Vec::new();
    for i in 0..fields.len() {
        for j in i + 1..fields.len() {
            brackets.push(index.vectorize(bracket(&fields[i], &fields[j])?.components()));
        }
    }
    let span = SparseMatrix::from_columns(index.len(), &cols);
    let mut it = brackets.into_iter();
    let mut failure = None;
    let algebra = LieAlgebra::from_upper_brackets(labels, |i, j| {
        let b = it.next().expect("one bracket per pair");
        solve(&span, &b).unwrap_or_else(|| {
            failure = Some((i, j));
            SparseVec::zero()
        })
    })?;
    if let Some((i, j)) = failure {
        return Err(Error::InvalidAlgebra(format!("[e{i}, e{j}] leaves the span of the generators")));
    }
    Ok(ProjectiveAlgebra { m, algebra: Arc::new(algebra), fields, weights, euler })
}

impl ProjectiveAlgebra {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra<Rational>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.fields.len()
    }

    /// Vector field of basis element `i`.
    pub fn field(&self, i: usize) -> &VectorField {
        &self.fields[i]
    }

    pub fn fields(&self) -> &[VectorField] {
        &self.fields
    }

    /// Vector field of a coordinate vector.
    pub fn field_of(&self, x: &SparseVec<Rational>) -> VectorField {
        let mut acc = VectorField::zero(self.m);
        for (i, c) in x.iter() {
            acc = acc.add(&self.fields[i].scale(c));
        }
        acc
    }

    /// `ad(E)`-eigenvalues of the basis, in `{−1, 0, 1}`.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn euler_index(&self) -> usize {
        self.euler
    }
}

/// Truncation of `S¹₂(R^m)` (or its trace-free part) to Euler weights in a
/// window, where coefficients of degree `d` have weight `d + 1`.
#[derive(Clone, Debug)]
pub struct S12Module {
    algebra: ProjectiveAlgebra,
    window: (i64, i64),
    trace_free: bool,
    /// full-module coordinates of `(flat component, monomial)`
    index: TermIndex,
    full_basis: Vec<S12>,
    /// trace-free basis inside the full coordinates
    sub: Option<Subspace<Rational>>,
    graded: GradedRepresentation<Rational>,
}

pub fn s12_graded_module(m: usize, window: (i64, i64), trace_free: bool) -> Result<S12Module> {
    let alg = sl_projective(m)?;
    s12_module_over(&alg, window, trace_free)
}

pub fn s12_module_over(alg: &ProjectiveAlgebra, window: (i64, i64), trace_free: bool) -> Result<S12Module> {
    let m = alg.m;
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::InvalidGrading(format!("empty window [{lo}, {hi}]")));
    }
    let mut index = TermIndex::new();
    let mut full_basis = Vec::new();
    let mut weights = Vec::new();
    for w in lo.max(1)..=hi {
        let d = (w - 1) as u32;
        for flat in 0..m * npairs(m) {
            let (k, i, j) = S12::slot(m, flat);
            for e in monomials_of_degree(m, d) {
                index.index(flat, &e);
                full_basis.push(S12::monomial(m, k, i, j, e, Rational::one()));
                weights.push(w);
            }
        }
    }
    let n = full_basis.len();
    let in_window = |e: &[u32]| {
        let w = e.iter().sum::<u32>() as i64 + 1;
        lo <= w && w <= hi
    };
    let action = alg
        .fields
        .iter()
        .map(|x| {
            let cols: Vec<SparseVec<Rational>> = full_basis
                .iter()
                .map(|b| {
                    let l = b.lie_derivative(x);
                    let mut pairs = Vec::new();
                    for (flat, p) in l.components().iter().enumerate() {
                        for (e, c) in p.terms() {
                            if in_window(e) {
                                pairs.push((index.get(flat, e).expect("in-window term is indexed"), c.clone()));
                            }
                        }
                    }
                    SparseVec::from_pairs(pairs)
                })
                .collect();
            SparseMatrix::from_columns(n, &cols)
        })
        .collect();
    let full = Representation::new_unchecked(alg.algebra.clone(), n, action)?;
    let (rep, sub) = if trace_free {
        let mut basis = Vec::new();
        for w in lo.max(1)..=hi {
            let members: Vec<usize> = (0..n).filter(|&c| weights[c] == w).collect();
            let mut out_index = TermIndex::new();
            let cols: Vec<SparseVec<Rational>> =
                members.iter().map(|&c| out_index.vectorize(&full_basis[c].trace().components_vec())).collect();
            let tr = SparseMatrix::from_columns(out_index.len(), &cols);
            for k in kernel_vectors(&tr) {
                basis.push(k.map_indices(|local| members[local]));
            }
        }
        let rep = full.restrict(&basis)?;
        (rep, Some(Subspace::span(n, basis)))
    } else {
        (full, None)
    };
    let graded = GradedRepresentation::truncated(rep, alg.euler, window, Some(1))?;
    Ok(S12Module { algebra: alg.clone(), window, trace_free, index, full_basis, sub, graded })
}

impl S12Module {
    pub fn algebra(&self) -> &ProjectiveAlgebra {
        &self.algebra
    }

    pub fn graded(&self) -> &GradedRepresentation<Rational> {
        &self.graded
    }

    pub fn representation(&self) -> &Representation<Rational> {
        self.graded.base()
    }

    pub fn dim(&self) -> usize {
        self.graded.base().dim()
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn is_trace_free(&self) -> bool {
        self.trace_free
    }

    /// Module coordinates of a tensor field; errors if it has a coefficient
    /// outside the window or, for the trace-free module, a trace.
    pub fn coordinates(&self, s: &S12) -> Result<SparseVec<Rational>> {
        let full = self.index.lookup(s.components()).ok_or_else(|| {
            let (lo, hi) = self.window;
            let d = s.degree().unwrap_or(0) as i64;
            Error::InsufficientWindow { lo, hi, need_lo: 1, need_hi: d + 1 }
        })?;
        match &self.sub {
            None => Ok(full),
            Some(sub) => sub.coordinates(&full).ok_or_else(|| Error::NotSubspace("tensor is not trace-free".into())),
        }
    }

    /// Tensor field of module coordinates.
    pub fn tensor(&self, v: &SparseVec<Rational>) -> S12 {
        let full = match &self.sub {
            None => v.clone(),
            Some(sub) => {
                let mut acc = SparseVec::zero();
                for (i, c) in v.iter() {
                    acc = acc.add_scaled(&sub.basis()[i], c);
                }
                acc
            }
        };
        let mut s = S12::zero(self.algebra.m);
        for (i, c) in full.iter() {
            s = s.add(&self.full_basis[i].scale(c));
        }
        s
    }

    /// 1-cochain `e_i ↦ f(X_i)`.
    pub fn one_cochain(&self, mut f: impl FnMut(&VectorField) -> S12) -> Result<Cochain<Rational>> {
        let images = self.algebra.fields.iter().map(|x| self.coordinates(&f(x))).collect::<Result<Vec<_>>>()?;
        Ok(Cochain::from_images(self.dim(), &images))
    }

    /// 2-cochain `(e_i, e_j) ↦ f(X_i, X_j)` on `i < j`; `f` must be alternating.
    pub fn two_cochain(&self, mut f: impl FnMut(&VectorField, &VectorField) -> S12) -> Result<Cochain<Rational>> {
        let n = self.algebra.dim();
        let mut err = None;
        let c = Cochain::from_fn(n, self.dim(), 2, |t| {
            match self.coordinates(&f(&self.algebra.fields[t[0]], &self.algebra.fields[t[1]])) {
                Ok(v) => v,
                Err(e) => {
                    err.get_or_insert(e);
                    SparseVec::zero()
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(c),
        }
    }

    /// `X ↦ L_X∇` as a module-valued 1-cochain.
    pub fn connection_cochain(&self, nabla: &Connection) -> Result<Cochain<Rational>> {
        self.one_cochain(|x| nabla.lie_derivative(x))
    }
}

impl super::fields::OneForm {
    pub(crate) fn components_vec(&self) -> Vec<Polynomial> {
        (0..self.m()).map(|i| self.component(i).clone()).collect()
    }
}

/// `κ(X, Y) = a tr(∂X) tr(L_Y∇⁰)·1 + b tr(∂X) pr(L_Y∇⁰) − (X ↔ Y)`
pub fn kappa(a: &Rational, b: &Rational, x: &VectorField, y: &VectorField) -> S12 {
    let flat = Connection::flat(x.m());
    let half = |x: &VectorField, y: &VectorField| {
        let l = flat.lie_derivative(y);
        let dx = x.divergence();
        l.tr_one().scale(a).add(&l.pr().scale(b)).mul_fn(&dx)
    };
    half(x, y).sub(&half(y, x))
}

/// `(X, Y) ↦ tr(∂X) L_Y∇⁰ − tr(∂Y) L_X∇⁰`
pub fn divergence_connection_cocycle(x: &VectorField, y: &VectorField) -> S12 {
    let flat = Connection::flat(x.m());
    flat.lie_derivative(y).mul_fn(&x.divergence()).sub(&flat.lie_derivative(x).mul_fn(&y.divergence()))
}
