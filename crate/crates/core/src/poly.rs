//! Polynomial maps on an affine representation and the modules `P^k(A, W)`.
//!
//! A polynomial of degree `≤ k` is stored by its components `p_0 … p_k`
//! relative to the chart origin `a₀`, so that `p(a₀ + u) = Σ (1/i!) p̂_i(u)`.
//! Components are symmetric multilinear maps indexed by multisets of source
//! basis indices.

use serde::{Deserialize, Serialize};

use crate::affine::{class_coordinates, is_intertwining, AffineMap, AffineRepresentation};
use crate::cohomology::{binomial, coboundary, increasing_tuples, tuple_rank, Cochain, Complex};
use crate::error::{Error, Result};
use crate::lie::{hom_index, hom_module, Representation};
use crate::linalg::{rank, SparseMatrix, SparseVec};
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};

/// Number of multisets of size `i` drawn from `n` indices.
pub fn multiset_count(n: usize, i: usize) -> usize {
    if i == 0 {
        1
    } else if n == 0 {
        0
    } else {
        binomial(n + i - 1, i)
    }
}

/// Non-decreasing index tuples of length `i` below `n`, in lexicographic order.
pub fn multisets(n: usize, i: usize) -> Vec<Vec<usize>> {
    if i == 0 {
        return vec![Vec::new()];
    }
    if n == 0 {
        return Vec::new();
    }
    increasing_tuples(n + i - 1, i).into_iter().map(|t| t.iter().enumerate().map(|(s, &x)| x - s).collect()).collect()
}

/// Position of a non-decreasing tuple in [`multisets`].
pub fn multiset_rank(n: usize, m: &[usize]) -> usize {
    debug_assert!(m.windows(2).all(|w| w[0] <= w[1]));
    let shifted: Vec<usize> = m.iter().enumerate().map(|(s, &x)| x + s).collect();
    tuple_rank(n + m.len().saturating_sub(1), &shifted)
}

/// A symmetric `i`-linear map `A^i → B`, by its values on basis multisets.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMultiMap<S> {
    arity: usize,
    source_dim: usize,
    target_dim: usize,
    /// index `multiset_rank · target_dim + w`
    coords: SparseVec<S>,
}

impl<S: Scalar> SymMultiMap<S> {
    pub fn space_dim(arity: usize, source_dim: usize, target_dim: usize) -> usize {
        multiset_count(source_dim, arity) * target_dim
    }

    pub fn zero(arity: usize, source_dim: usize, target_dim: usize) -> Self {
        SymMultiMap { arity, source_dim, target_dim, coords: SparseVec::zero() }
    }

    pub fn from_coords(arity: usize, source_dim: usize, target_dim: usize, coords: SparseVec<S>) -> Result<Self> {
        if coords.max_index().is_some_and(|k| k >= Self::space_dim(arity, source_dim, target_dim)) {
            return Err(Error::Dimension(format!("coordinates exceed the arity-{arity} symmetric map space")));
        }
        Ok(SymMultiMap { arity, source_dim, target_dim, coords })
    }

    /// Map with the given value on every basis multiset.
    pub fn from_fn(
        arity: usize,
        source_dim: usize,
        target_dim: usize,
        mut f: impl FnMut(&[usize]) -> SparseVec<S>,
    ) -> Self {
        let mut pairs = Vec::new();
        for (r, m) in multisets(source_dim, arity).iter().enumerate() {
            pairs.extend(f(m).iter().map(|(w, c)| (r * target_dim + w, c.clone())));
        }
        SymMultiMap { arity, source_dim, target_dim, coords: SparseVec::from_pairs(pairs) }
    }

    /// The linear map with matrix `m` (`target × source`).
    pub fn linear(m: &SparseMatrix<S>) -> Self {
        let cols = m.columns();
        Self::from_fn(1, m.ncols(), m.nrows(), |t| cols[t[0]].clone())
    }

    /// The constant `v`.
    pub fn constant(source_dim: usize, target_dim: usize, v: SparseVec<S>) -> Self {
        Self::from_fn(0, source_dim, target_dim, |_| v.clone())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn coords(&self) -> &SparseVec<S> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    /// Matrix of a map of arity 1.
    pub fn to_matrix(&self) -> SparseMatrix<S> {
        assert_eq!(self.arity, 1, "only linear maps have a matrix");
        let cols: Vec<SparseVec<S>> = (0..self.source_dim).map(|j| self.value(&[j])).collect();
        SparseMatrix::from_columns(self.target_dim, &cols)
    }

    /// `f(e_{m_1}, …, e_{m_i})` for indices in any order.
    pub fn value(&self, indices: &[usize]) -> SparseVec<S> {
        debug_assert_eq!(indices.len(), self.arity);
        let mut m = indices.to_vec();
        m.sort_unstable();
        let base = multiset_rank(self.source_dim, &m) * self.target_dim;
        self.coords.slice(base..base + self.target_dim)
    }

    /// Value on arbitrary arguments, by multilinear expansion.
    pub fn eval(&self, args: &[SparseVec<S>]) -> SparseVec<S> {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        fn rec<S: Scalar>(
            f: &SymMultiMap<S>,
            args: &[SparseVec<S>],
            idx: &mut Vec<usize>,
            coef: S,
            acc: &mut SparseVec<S>,
        ) {
            if idx.len() == args.len() {
                *acc = acc.add_scaled(&f.value(idx), &coef);
                return;
            }
            for (j, a) in args[idx.len()].iter() {
                idx.push(j);
                rec(f, args, idx, coef.mul_ref(a), acc);
                idx.pop();
            }
        }
        let mut acc = SparseVec::zero();
        rec(self, args, &mut Vec::new(), S::one(), &mut acc);
        acc
    }

    /// `f̂(u) = f(u, …, u)`, summed over multisets with multinomial weights.
    pub fn eval_diag(&self, u: &SparseVec<S>) -> SparseVec<S> {
        let support: Vec<(usize, S)> = u.iter().map(|(j, c)| (j, c.clone())).collect();
        let mut acc = SparseVec::zero();
        // multisets over the support positions
        for m in multisets(support.len(), self.arity) {
            let mut coef = S::one();
            let mut run = 1usize;
            let mut weight = S::inv_factorial(0);
            for (s, &k) in m.iter().enumerate() {
                coef *= &support[k].1;
                if s > 0 && m[s - 1] == k {
                    run += 1;
                } else {
                    run = 1;
                }
                weight *= &S::from_i64(run as i64).inv();
            }
            // multinomial i! / Π mult!
            let mult = weight.mul_ref(&S::inv_factorial(self.arity).inv());
            let idx: Vec<usize> = m.iter().map(|&k| support[k].0).collect();
            acc = acc.add_scaled(&self.value(&idx), &coef.mul_ref(&mult));
        }
        acc
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.arity, self.source_dim, self.target_dim) != (other.arity, other.source_dim, other.target_dim) {
            return Err(Error::Dimension("symmetric maps of different shapes".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(SymMultiMap { coords: self.coords.add(&other.coords), ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(SymMultiMap { coords: self.coords.sub(&other.coords), ..self.clone() })
    }

    pub fn scale(&self, c: &S) -> Self {
        SymMultiMap { coords: self.coords.scale(c), ..self.clone() }
    }

    /// `ι_w f = f(w, ·, …, ·)`, of arity one less.
    pub fn contract(&self, w: &SparseVec<S>) -> Self {
        assert!(self.arity > 0, "cannot contract a constant");
        Self::from_fn(self.arity - 1, self.source_dim, self.target_dim, |m| {
            let mut acc = SparseVec::zero();
            let mut idx = Vec::with_capacity(m.len() + 1);
            for (j, c) in w.iter() {
                idx.clear();
                idx.push(j);
                idx.extend_from_slice(m);
                acc = acc.add_scaled(&self.value(&idx), c);
            }
            acc
        })
    }

    /// `f ∘ (T × … × T)` for `T: A' → A`.
    pub fn compose(&self, t: &SparseMatrix<S>) -> Result<Self> {
        if t.nrows() != self.source_dim {
            return Err(Error::Dimension("map target differs from the source of the symmetric map".into()));
        }
        let cols = t.columns();
        Ok(Self::from_fn(self.arity, t.ncols(), self.target_dim, |m| {
            let args: Vec<SparseVec<S>> = m.iter().map(|&j| cols[j].clone()).collect();
            self.eval(&args)
        }))
    }

    /// `L ∘ f` for `L: B → B'`.
    pub fn post(&self, l: &SparseMatrix<S>) -> Result<Self> {
        if l.ncols() != self.target_dim {
            return Err(Error::Dimension("map source differs from the target of the symmetric map".into()));
        }
        Ok(Self::from_fn(self.arity, self.source_dim, l.nrows(), |m| l.mul_vec(&self.value(m))))
    }

    /// Tensor action `(x.t)(u…) = x.t(u…) − Σ_s t(…, x.u_s, …)`.
    pub fn act(&self, x: &SparseVec<S>, a: &Representation<S>, w: &Representation<S>) -> Self {
        let rho_a = a.rho_of(x).columns();
        let rho_w = w.rho_of(x);
        Self::from_fn(self.arity, self.source_dim, self.target_dim, |m| {
            let mut acc = rho_w.mul_vec(&self.value(m));
            let mut idx = m.to_vec();
            for s in 0..m.len() {
                for (j, c) in rho_a[m[s]].iter() {
                    idx[s] = j;
                    acc = acc.add_scaled(&self.value(&idx), &-c.clone());
                }
                idx[s] = m[s];
            }
            acc
        })
    }
}

/// A polynomial `A → W` of degree `≤ k`, by components relative to the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMap<S> {
    source_dim: usize,
    target_dim: usize,
    components: Vec<SymMultiMap<S>>,
}

impl<S: Scalar> PolyMap<S> {
    /// `dim P^k(A, W)`
    pub fn space_dim(k: usize, source_dim: usize, target_dim: usize) -> usize {
        (0..=k).map(|i| SymMultiMap::<S>::space_dim(i, source_dim, target_dim)).sum()
    }

    fn offset(i: usize, source_dim: usize, target_dim: usize) -> usize {
        Self::space_dim(i, source_dim, target_dim) - SymMultiMap::<S>::space_dim(i, source_dim, target_dim)
    }

    pub fn zero(k: usize, source_dim: usize, target_dim: usize) -> Self {
        PolyMap {
            source_dim,
            target_dim,
            components: (0..=k).map(|i| SymMultiMap::zero(i, source_dim, target_dim)).collect(),
        }
    }

    /// Errors unless component `i` has arity `i` and all shapes agree.
    pub fn from_components(components: Vec<SymMultiMap<S>>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::Dimension("a polynomial needs at least the constant component".into()));
        };
        let (n, d) = (first.source_dim, first.target_dim);
        for (i, c) in components.iter().enumerate() {
            if c.arity != i || c.source_dim != n || c.target_dim != d {
                return Err(Error::Dimension(format!(
                    "component {i} has arity {} and shape {}→{}",
                    c.arity, c.source_dim, c.target_dim
                )));
            }
        }
        Ok(PolyMap { source_dim: n, target_dim: d, components })
    }

    /// Inverse of [`Self::coords`].
    pub fn from_coords(k: usize, source_dim: usize, target_dim: usize, coords: &SparseVec<S>) -> Result<Self> {
        if coords.max_index().is_some_and(|j| j >= Self::space_dim(k, source_dim, target_dim)) {
            return Err(Error::Dimension(format!("coordinates exceed P^{k}")));
        }
        let components = (0..=k)
            .map(|i| {
                let off = Self::offset(i, source_dim, target_dim);
                let len = SymMultiMap::<S>::space_dim(i, source_dim, target_dim);
                SymMultiMap::from_coords(i, source_dim, target_dim, coords.slice(off..off + len))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMap { source_dim, target_dim, components })
    }

    /// Concatenated component coordinates, lowest degree first. `P^{k−1}` is
    /// thereby a prefix of `P^k`.
    pub fn coords(&self) -> SparseVec<S> {
        let mut acc = SparseVec::zero();
        for (i, c) in self.components.iter().enumerate() {
            acc = acc.add(&c.coords.shifted(Self::offset(i, self.source_dim, self.target_dim)));
        }
        acc
    }

    pub fn degree_bound(&self) -> usize {
        self.components.len() - 1
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn components(&self) -> &[SymMultiMap<S>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &SymMultiMap<S> {
        &self.components[i]
    }

    /// The top component `p_k`.
    pub fn symbol(&self) -> &SymMultiMap<S> {
        self.components.last().expect("nonempty")
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// `p(a₀ + u) = Σ (1/i!) p̂_i(u)`
    pub fn eval(&self, u: &SparseVec<S>) -> SparseVec<S> {
        let mut acc = SparseVec::zero();
        for (i, c) in self.components.iter().enumerate() {
            acc = acc.add_scaled(&c.eval_diag(u), &S::inv_factorial(i));
        }
        acc
    }

    /// Components relative to `a₀ + w`: `q_j = Σ_{i≥j} 1/(i−j)! ι_w^{i−j} p_i`.
    pub fn rebase(&self, w: &SparseVec<S>) -> Self {
        let k = self.degree_bound();
        let mut out: Vec<SymMultiMap<S>> = (0..=k).map(|j| self.components[j].clone()).collect();
        for i in 1..=k {
            let mut c = self.components[i].clone();
            for r in 1..=i {
                c = c.contract(w);
                let j = i - r;
                out[j] = out[j].add(&c.scale(&S::inv_factorial(r))).expect("same shape");
            }
        }
        PolyMap { components: out, ..self.clone() }
    }

    /// `(x.p)_i = x.p_i − ι_{x.a₀} p_{i+1}` with the tensor action on each `p_i`.
    pub fn act(&self, x: &SparseVec<S>, a: &AffineRepresentation<S>, w: &Representation<S>) -> Result<Self> {
        if a.dim() != self.source_dim || w.dim() != self.target_dim {
            return Err(Error::Dimension("polynomial does not match the affine space or the module".into()));
        }
        a.model().require_same_algebra(w)?;
        let g = a.base_cocycle().eval(std::slice::from_ref(x));
        let k = self.degree_bound();
        let components = (0..=k)
            .map(|i| {
                let mut c = self.components[i].act(x, a.model(), w);
                if i < k {
                    c = c.sub(&self.components[i + 1].contract(&g)).expect("same shape");
                }
                c
            })
            .collect();
        Ok(PolyMap { components, ..self.clone() })
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.degree_bound(), self.source_dim, self.target_dim)
            != (other.degree_bound(), other.source_dim, other.target_dim)
        {
            return Err(Error::Dimension("polynomials of different shapes".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(PolyMap { components, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        PolyMap { components: self.components.iter().map(|x| x.scale(c)).collect(), ..self.clone() }
    }

    /// Same polynomial viewed in `P^k` for a larger `k`.
    pub fn extend_to(&self, k: usize) -> Self {
        let mut out = self.clone();
        while out.components.len() <= k {
            out.components.push(SymMultiMap::zero(out.components.len(), self.source_dim, self.target_dim));
        }
        out
    }
}

/// `τ(t)(a₀ + u) = (1/k!) t̂(u)`: the section of the symbol projection.
pub fn tau_section<S: Scalar>(t: &SymMultiMap<S>) -> PolyMap<S> {
    let mut p = PolyMap::zero(t.arity, t.source_dim, t.target_dim);
    p.components[t.arity] = t.clone();
    p
}

/// `q ∘ f` for an intertwining affine map `f: A → B`.
pub fn pullback<S: Scalar>(
    f: &AffineMap<S>,
    q: &PolyMap<S>,
    a: &AffineRepresentation<S>,
    b: &AffineRepresentation<S>,
) -> Result<PolyMap<S>> {
    if q.source_dim != b.dim() {
        return Err(Error::Dimension("polynomial is not defined on the target of the map".into()));
    }
    if !is_intertwining(f, a, b)? {
        return Err(Error::NotEquivariant("affine map does not intertwine the two actions".into()));
    }
    pullback_unchecked(f, q)
}

/// Component formula of the pullback without the equivariance check.
pub fn pullback_unchecked<S: Scalar>(f: &AffineMap<S>, q: &PolyMap<S>) -> Result<PolyMap<S>> {
    let r = q.rebase(&f.translation);
    let components = r.components.iter().map(|c| c.compose(&f.linear_part)).collect::<Result<Vec<_>>>()?;
    Ok(PolyMap { source_dim: f.linear_part.ncols(), target_dim: q.target_dim, components })
}

/// `S^k(A, W)` with the tensor action, vectorized by [`SymMultiMap::coords`].
pub fn sym_representation<S: Scalar>(
    a: &Representation<S>,
    w: &Representation<S>,
    k: usize,
) -> Result<Representation<S>> {
    a.require_same_algebra(w)?;
    let (n, d) = (a.dim(), w.dim());
    let dim = SymMultiMap::<S>::space_dim(k, n, d);
    let action = (0..a.algebra().dim())
        .map(|x| {
            let xv = SparseVec::unit(x);
            let cols: Vec<SparseVec<S>> = (0..dim)
                .map(|j| {
                    let t = SymMultiMap { arity: k, source_dim: n, target_dim: d, coords: SparseVec::unit(j) };
                    t.act(&xv, a, w).coords
                })
                .collect();
            SparseMatrix::from_columns(dim, &cols)
        })
        .collect();
    Representation::new_unchecked(a.algebra().clone(), dim, action)
}

/// `P^k(A, W)` with the action `(x.p)_i = x.p_i − ι_{x.a₀} p_{i+1}`.
pub fn poly_representation<S: Scalar>(
    a: &AffineRepresentation<S>,
    w: &Representation<S>,
    k: usize,
) -> Result<Representation<S>> {
    a.model().require_same_algebra(w)?;
    let (n, d) = (a.dim(), w.dim());
    let dim = PolyMap::<S>::space_dim(k, n, d);
    let action = (0..a.model().algebra().dim())
        .map(|x| {
            let xv = SparseVec::unit(x);
            let cols = (0..dim)
                .map(|j| Ok(PolyMap::from_coords(k, n, d, &SparseVec::unit(j))?.act(&xv, a, w)?.coords()))
                .collect::<Result<Vec<_>>>()?;
            Ok(SparseMatrix::from_columns(dim, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new_unchecked(a.model().algebra().clone(), dim, action)
}

/// `0 → P^{k−1} → P^k → S^k → 0` as representations with explicit maps.
#[derive(Clone, Debug)]
pub struct FiltrationSes<S> {
    pub k: usize,
    pub sub: Representation<S>,
    pub total: Representation<S>,
    pub quotient: Representation<S>,
    pub inclusion: SparseMatrix<S>,
    /// `p ↦ p_k`
    pub projection: SparseMatrix<S>,
    /// `τ`
    pub section: SparseMatrix<S>,
}

pub fn filtration_ses<S: Scalar>(
    a: &AffineRepresentation<S>,
    w: &Representation<S>,
    k: usize,
) -> Result<FiltrationSes<S>> {
    if k == 0 {
        return Err(Error::Dimension("the filtration sequence needs k ≥ 1".into()));
    }
    let (n, d) = (a.dim(), w.dim());
    let sub = poly_representation(a, w, k - 1)?;
    let total = poly_representation(a, w, k)?;
    let quotient = sym_representation(a.model(), w, k)?;
    let off = PolyMap::<S>::space_dim(k - 1, n, d);
    let (ds, dt, dq) = (sub.dim(), total.dim(), quotient.dim());
    let inclusion = SparseMatrix::from_triplets(dt, ds, (0..ds).map(|j| (j, j, S::one())))?;
    let projection = SparseMatrix::from_triplets(dq, dt, (0..dq).map(|j| (j, off + j, S::one())))?;
    let section = projection.transpose();
    Ok(FiltrationSes { k, sub, total, quotient, inclusion, projection, section })
}

impl<S: Scalar> FiltrationSes<S> {
    /// Exactness by ranks and equivariance of both maps.
    pub fn is_exact_sequence_of_modules(&self) -> bool {
        let composite_zero = self.projection.matmul(&self.inclusion).map(|m| m.is_zero()).unwrap_or(false);
        let ranks = rank(&self.inclusion) == self.sub.dim()
            && rank(&self.projection) == self.quotient.dim()
            && self.total.dim() == self.sub.dim() + self.quotient.dim();
        let equivariant = (0..self.total.algebra().dim()).all(|x| {
            let inc = self.total.rho(x).matmul(&self.inclusion).ok() == self.inclusion.matmul(self.sub.rho(x)).ok();
            let pr =
                self.projection.matmul(self.total.rho(x)).ok() == self.quotient.rho(x).matmul(&self.projection).ok();
            inc && pr
        });
        composite_zero && ranks && equivariant
    }

    /// `Hom(S^k, P^{k−1})`, where the class `α^k` lives.
    pub fn hom_representation(&self) -> Result<Representation<S>> {
        hom_module(&self.quotient, &self.sub)
    }
}

/// `x ↦ (∂τ)_x`, with `(∂τ)_x(t)` the degree-`(k−1)` polynomial whose only
/// component is `−ι_{x.a₀} t`. Valued in `Hom(S^k, P^{k−1})`, vectorized by
/// [`hom_index`].
pub fn alpha_cocycle<S: Scalar>(a: &AffineRepresentation<S>, w: &Representation<S>, k: usize) -> Result<Cochain<S>> {
    if k == 0 {
        return Err(Error::Dimension("α^k needs k ≥ 1".into()));
    }
    a.model().require_same_algebra(w)?;
    let (n, d) = (a.dim(), w.dim());
    let dq = SymMultiMap::<S>::space_dim(k, n, d);
    let ds = PolyMap::<S>::space_dim(k - 1, n, d);
    let off = PolyMap::<S>::space_dim(k - 1, n, d) - SymMultiMap::<S>::space_dim(k - 1, n, d);
    let n_alg = a.model().algebra().dim();
    let images: Vec<SparseVec<S>> = (0..n_alg)
        .map(|x| {
            let g = a.base_cocycle().value(&[x]);
            let mut pairs = Vec::new();
            for j in 0..dq {
                let t = SymMultiMap { arity: k, source_dim: n, target_dim: d, coords: SparseVec::unit(j) };
                for (r, c) in t.contract(&g).coords.iter() {
                    pairs.push((hom_index(dq, off + r, j), -c.clone()));
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    Ok(Cochain::from_images(ds * dq, &images))
}

/// `χ` on cochains: `t ↦ t^χ` with
/// `t^χ(x_0…x_p) = Σ_i (−1)^{i+1} ι_{x_i.a₀} t(x_0…x̂_i…x_p)` in degree `k−1`.
/// `t` is an `S^k(A, W)`-valued cocycle; the result is `P^{k−1}(A, W)`-valued.
pub fn connecting<S: Scalar>(
    t: &Cochain<S>,
    a: &AffineRepresentation<S>,
    w: &Representation<S>,
    k: usize,
) -> Result<Cochain<S>> {
    if k == 0 {
        return Err(Error::Dimension("χ needs k ≥ 1".into()));
    }
    let (n, d) = (a.dim(), w.dim());
    let sk = sym_representation(a.model(), w, k)?;
    if t.module_dim() != sk.dim() || t.algebra_dim() != sk.algebra().dim() {
        return Err(Error::Dimension("cochain is not valued in S^k(A, W)".into()));
    }
    if !coboundary(&sk, t)?.is_zero() {
        return Err(Error::NotCocycle("argument of the connecting map".into()));
    }
    let p = t.degree();
    let ds = PolyMap::<S>::space_dim(k - 1, n, d);
    let off = ds - SymMultiMap::<S>::space_dim(k - 1, n, d);
    let gammas: Vec<SparseVec<S>> = (0..sk.algebra().dim()).map(|x| a.base_cocycle().value(&[x])).collect();
    Ok(Cochain::from_fn(sk.algebra().dim(), ds, p + 1, |xs| {
        let mut acc = SparseVec::zero();
        for i in 0..xs.len() {
            let rest: Vec<usize> = xs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            let ti = SymMultiMap { arity: k, source_dim: n, target_dim: d, coords: t.value(&rest) };
            let c = ti.contract(&gammas[xs[i]]).coords.shifted(off);
            acc = if i % 2 == 0 { acc.sub(&c) } else { acc.add(&c) };
        }
        acc
    }))
}

/// `χ` by lift, coboundary and pull back along the inclusion.
pub fn connecting_abstract<S: Scalar>(ses: &FiltrationSes<S>, t: &Cochain<S>) -> Result<Cochain<S>> {
    if !coboundary(&ses.quotient, t)?.is_zero() {
        return Err(Error::NotCocycle("argument of the connecting map".into()));
    }
    let lifted = t.compose(&ses.section)?;
    let d = coboundary(&ses.total, &lifted)?;
    // the image of the inclusion is the coordinate prefix
    let back = d.compose(&ses.inclusion.transpose())?;
    if back.compose(&ses.inclusion)? != d {
        return Err(Error::NotSubspace("coboundary of the lift leaves P^{k-1}".into()));
    }
    Ok(back)
}

/// Class of `α¹_{A,W} − α¹_{A′,W}`: a primitive `θ ∈ Hom(S¹, P⁰)` if the
/// classes agree, `None` otherwise. `A` and `A′` must share their model.
pub fn alpha_classes_equal<S: Scalar>(
    a: &AffineRepresentation<S>,
    a2: &AffineRepresentation<S>,
    w: &Representation<S>,
) -> Result<Option<Cochain<S>>> {
    if a.model().action() != a2.model().action() || a.dim() != a2.dim() {
        return Err(Error::Dimension("affine representations with different linear parts".into()));
    }
    let ses = filtration_ses(a, w, 1)?;
    let hom = ses.hom_representation()?;
    let diff = alpha_cocycle(a, w, 1)?.sub(&alpha_cocycle(a2, w, 1)?)?;
    Complex::full(&hom, 1).is_coboundary(&diff)
}

/// Ranks around one node of the long exact sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LesNode {
    pub label: String,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
}

impl LesNode {
    pub fn exact(&self) -> bool {
        self.rank_in + self.rank_out == self.dim
    }
}

/// Induced map on cohomology, in the representative bases.
fn induced<S: Scalar>(
    src_reps: &[Cochain<S>],
    dst: &Complex<S>,
    dst_reps: &[Cochain<S>],
    f: impl Fn(&Cochain<S>) -> Result<Cochain<S>>,
) -> Result<SparseMatrix<S>> {
    let cols = src_reps
        .iter()
        .map(|c| {
            class_coordinates(dst, dst_reps, &f(c)?)?.ok_or_else(|| Error::NotCocycle("image of a cocycle".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::from_columns(dst_reps.len(), &cols))
}

/// The long exact sequence of the `k`-th filtration sequence from `H⁰(P^{k−1})`
/// to `H^{p_top}(P^k)`, with `χ` computed by [`connecting`].
pub fn long_exact_sequence<S: Scalar>(
    a: &AffineRepresentation<S>,
    w: &Representation<S>,
    k: usize,
    p_top: usize,
) -> Result<Vec<LesNode>> {
    let ses = filtration_ses(a, w, k)?;
    let cx = [Complex::full(&ses.sub, p_top), Complex::full(&ses.total, p_top), Complex::full(&ses.quotient, p_top)];
    let h: Vec<Vec<_>> = cx.iter().map(|c| (0..=p_top).map(|p| c.cohomology(p)).collect()).collect();
    let names = [format!("P^{}", k - 1), format!("P^{k}"), format!("S^{k}")];
    // maps[p][0]: H^p(P^{k-1}) → H^p(P^k), [1]: → H^p(S^k), [2]: χ into H^{p+1}(P^{k-1})
    let mut ranks = vec![[0usize; 3]; p_top + 1];
    for p in 0..=p_top {
        let inc = induced(&h[0][p].representatives, &cx[1], &h[1][p].representatives, |c| c.compose(&ses.inclusion))?;
        let pr = induced(&h[1][p].representatives, &cx[2], &h[2][p].representatives, |c| c.compose(&ses.projection))?;
        ranks[p][0] = rank(&inc);
        ranks[p][1] = rank(&pr);
        if p < p_top {
            let chi =
                induced(&h[2][p].representatives, &cx[0], &h[0][p + 1].representatives, |c| connecting(c, a, w, k))?;
            ranks[p][2] = rank(&chi);
        }
    }
    let mut nodes = Vec::new();
    for p in 0..=p_top {
        for (j, name) in names.iter().enumerate() {
            if p == p_top && j == 2 {
                break;
            }
            let rank_in = match (p, j) {
                (0, 0) => 0,
                (_, 0) => ranks[p - 1][2],
                _ => ranks[p][j - 1],
            };
            nodes.push(LesNode {
                label: format!("H^{p}({name})"),
                dim: h[j][p].dimension,
                rank_in,
                rank_out: ranks[p][j],
            });
        }
    }
    Ok(nodes)
}

#[derive(Serialize, Deserialize)]
struct ComponentDoc {
    arity: usize,
    entries: Vec<(Vec<usize>, usize, String)>,
}

#[derive(Serialize, Deserialize)]
struct PolyMapDoc {
    k: usize,
    source_dim: usize,
    target_dim: usize,
    components: Vec<ComponentDoc>,
}

impl PolyMap<Rational> {
    pub fn to_json(&self) -> serde_json::Value {
        let components = self
            .components
            .iter()
            .map(|c| {
                let ms = multisets(c.source_dim, c.arity);
                let entries = c
                    .coords
                    .iter()
                    .map(|(j, v)| (ms[j / c.target_dim].clone(), j % c.target_dim, format_rational(v)))
                    .collect();
                ComponentDoc { arity: c.arity, entries }
            })
            .collect();
        let doc =
            PolyMapDoc { k: self.degree_bound(), source_dim: self.source_dim, target_dim: self.target_dim, components };
        serde_json::to_value(doc).expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc: PolyMapDoc = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.components.len() != doc.k + 1 {
            return Err(Error::Parse(format!("{} components for degree bound {}", doc.components.len(), doc.k)));
        }
        let (n, d) = (doc.source_dim, doc.target_dim);
        let components = doc
            .components
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                if c.arity != i {
                    return Err(Error::Parse(format!("component {i} has arity {}", c.arity)));
                }
                let mut pairs = Vec::new();
                for (mut m, w, q) in c.entries {
                    m.sort_unstable();
                    if m.len() != i || m.iter().any(|&j| j >= n) || w >= d {
                        return Err(Error::Parse(format!("entry {m:?} → {w} out of range")));
                    }
                    pairs.push((multiset_rank(n, &m) * d + w, parse_rational(&q)?));
                }
                SymMultiMap::from_coords(i, n, d, SparseVec::from_pairs(pairs))
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMap::from_components(components)
    }
}
