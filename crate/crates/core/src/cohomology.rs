//! Chevalley–Eilenberg cochains, the coboundary and cohomology.
//!
//! A `p`-cochain is stored by its values on basis tuples `e_{i_1} ∧ … ∧ e_{i_p}`
//! with `i_1 < … < i_p`; the coordinate of `(I, v)` is
//! `rank(I) * dim V + v`, with tuples ranked lexicographically.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lie::{GradedRepresentation, Representation};
use crate::linalg::{image_basis, kernel_basis, solve, SparseMatrix, SparseVec};
use crate::scalar::Scalar;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing `p`-tuples from `0..n` in lexicographic order.
pub fn increasing_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, p));
    let mut cur: Vec<usize> = (0..p).collect();
    if p > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..p).rev().find(|&i| cur[i] < n - p + i) else { break };
        cur[pos] += 1;
        for i in pos + 1..p {
            cur[i] = cur[i - 1] + 1;
        }
    }
    out
}

/// Lexicographic rank of a strictly increasing tuple among `p`-subsets of `0..n`.
pub fn tuple_rank(n: usize, tuple: &[usize]) -> usize {
    let p = tuple.len();
    let mut r = 0;
    let mut next = 0;
    for (j, &t) in tuple.iter().enumerate() {
        for v in next..t {
            r += binomial(n - 1 - v, p - 1 - j);
        }
        next = t + 1;
    }
    r
}

/// Sorts `tuple`, returning the permutation sign, or `None` on a repeat.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut t = tuple.to_vec();
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((t, sign))
}

/// An alternating `p`-linear map from the algebra to a module.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<S> {
    degree: usize,
    algebra_dim: usize,
    module_dim: usize,
    coords: SparseVec<S>,
}

impl<S: Scalar> Cochain<S> {
    pub fn zero(algebra_dim: usize, module_dim: usize, degree: usize) -> Self {
        Cochain { degree, algebra_dim, module_dim, coords: SparseVec::zero() }
    }

    pub fn space_dim(algebra_dim: usize, module_dim: usize, degree: usize) -> usize {
        binomial(algebra_dim, degree) * module_dim
    }

    pub fn from_coords(algebra_dim: usize, module_dim: usize, degree: usize, coords: SparseVec<S>) -> Result<Self> {
        if coords.max_index().is_some_and(|i| i >= Self::space_dim(algebra_dim, module_dim, degree)) {
            return Err(Error::Dimension(format!("coordinates exceed the degree-{degree} cochain space")));
        }
        Ok(Cochain { degree, algebra_dim, module_dim, coords })
    }

    /// Cochain with the given values on every increasing basis tuple.
    pub fn from_fn(
        algebra_dim: usize,
        module_dim: usize,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> SparseVec<S>,
    ) -> Self {
        let mut pairs = Vec::new();
        for (r, t) in increasing_tuples(algebra_dim, degree).iter().enumerate() {
            pairs.extend(f(t).iter().map(|(v, c)| (r * module_dim + v, c.clone())));
        }
        Cochain { degree, algebra_dim, module_dim, coords: SparseVec::from_pairs(pairs) }
    }

    /// 1-cochain `e_i ↦ images[i]`.
    pub fn from_images(module_dim: usize, images: &[SparseVec<S>]) -> Self {
        Self::from_fn(images.len(), module_dim, 1, |t| images[t[0]].clone())
    }

    /// 0-cochain given by a module vector.
    pub fn from_vector(algebra_dim: usize, module_dim: usize, v: SparseVec<S>) -> Self {
        Cochain { degree: 0, algebra_dim, module_dim, coords: v }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn coords(&self) -> &SparseVec<S> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    /// Nonzero values as `(increasing tuple, module vector)`.
    pub fn values(&self) -> Vec<(Vec<usize>, SparseVec<S>)> {
        let tuples = increasing_tuples(self.algebra_dim, self.degree);
        let mut per: HashMap<usize, Vec<(usize, S)>> = HashMap::new();
        for (k, c) in self.coords.iter() {
            per.entry(k / self.module_dim.max(1)).or_default().push((k % self.module_dim.max(1), c.clone()));
        }
        let mut out: Vec<_> = per.into_iter().map(|(r, e)| (tuples[r].clone(), SparseVec::from_pairs(e))).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Value on `e_{t_1} ∧ … ∧ e_{t_p}` for any index tuple.
    pub fn value(&self, tuple: &[usize]) -> SparseVec<S> {
        debug_assert_eq!(tuple.len(), self.degree);
        let Some((sorted, sign)) = sort_with_sign(tuple) else { return SparseVec::zero() };
        let base = tuple_rank(self.algebra_dim, &sorted) * self.module_dim;
        let v = self.coords.slice(base..base + self.module_dim);
        if sign < 0 {
            v.neg()
        } else {
            v
        }
    }

    /// Value on arbitrary algebra elements, by multilinear expansion.
    pub fn eval(&self, xs: &[SparseVec<S>]) -> SparseVec<S> {
        assert_eq!(xs.len(), self.degree, "wrong number of arguments");
        fn rec<S: Scalar>(c: &Cochain<S>, xs: &[SparseVec<S>], idx: &mut Vec<usize>, coef: S, acc: &mut SparseVec<S>) {
            if idx.len() == xs.len() {
                *acc = acc.add_scaled(&c.value(idx), &coef);
                return;
            }
            for (i, a) in xs[idx.len()].iter() {
                if idx.contains(&i) {
                    continue;
                }
                idx.push(i);
                rec(c, xs, idx, coef.mul_ref(a), acc);
                idx.pop();
            }
        }
        let mut acc = SparseVec::zero();
        rec(self, xs, &mut Vec::new(), S::one(), &mut acc);
        acc
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.degree, self.algebra_dim, self.module_dim) != (other.degree, other.algebra_dim, other.module_dim) {
            return Err(Error::Dimension("cochains of different shapes".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(Cochain { coords: self.coords.add(&other.coords), ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(Cochain { coords: self.coords.sub(&other.coords), ..self.clone() })
    }

    pub fn scale(&self, c: &S) -> Self {
        Cochain { coords: self.coords.scale(c), ..self.clone() }
    }

    /// Post-composition with a linear map `module -> target`.
    pub fn compose(&self, map: &SparseMatrix<S>) -> Result<Self> {
        if map.ncols() != self.module_dim {
            return Err(Error::Dimension("map source differs from the cochain's module".into()));
        }
        let vals = self.values();
        let n = map.nrows();
        let mut pairs = Vec::new();
        for (t, v) in vals {
            let r = tuple_rank(self.algebra_dim, &t);
            pairs.extend(map.mul_vec(&v).iter().map(|(i, c)| (r * n + i, c.clone())));
        }
        Ok(Cochain {
            degree: self.degree,
            algebra_dim: self.algebra_dim,
            module_dim: n,
            coords: SparseVec::from_pairs(pairs),
        })
    }
}

/// Precomputed data for the scatter form of the coboundary.
struct Scatter<S> {
    /// `rho_cols[t][v] = ρ(e_t) e_v`
    rho_cols: Vec<Vec<SparseVec<S>>>,
    /// `pairs[k]` lists `(a, b, c^k_ab)` with `a < b`
    pairs: Vec<Vec<(usize, usize, S)>>,
}

impl<S: Scalar> Scatter<S> {
    fn new(rep: &Representation<S>) -> Self {
        let n = rep.algebra().dim();
        let rho_cols = (0..n).map(|t| rep.rho(t).columns()).collect();
        let mut pairs = vec![Vec::new(); n];
        for (a, b, k, c) in rep.algebra().constants() {
            if a < b {
                pairs[k].push((a, b, c.clone()));
            }
        }
        Scatter { rho_cols, pairs }
    }

    /// `∂` of the cochain with value `e_v` on `e_I` (and zero on other tuples),
    /// as `(increasing tuple, module vector)` contributions.
    fn apply(&self, tuple: &[usize], v: usize) -> Vec<(Vec<usize>, SparseVec<S>)> {
        let n = self.rho_cols.len();
        let mut out = Vec::new();
        // Σ_i (−1)^i ρ(x_i) c(.., x̂_i, ..)
        for t in 0..n {
            if tuple.contains(&t) {
                continue;
            }
            let pos = tuple.iter().filter(|&&i| i < t).count();
            let mut tt = tuple.to_vec();
            tt.insert(pos, t);
            let col = &self.rho_cols[t][v];
            if !col.is_zero() {
                out.push((tt, if pos % 2 == 0 { col.clone() } else { col.neg() }));
            }
        }
        // Σ_{i<j} (−1)^{i+j} c([x_i, x_j], ..)
        for (pk, &k) in tuple.iter().enumerate() {
            let rest: Vec<usize> = tuple.iter().copied().filter(|&i| i != k).collect();
            for (a, b, c) in &self.pairs[k] {
                if rest.contains(a) || rest.contains(b) {
                    continue;
                }
                let mut tt = rest.clone();
                let ia = tt.iter().filter(|&&i| i < *a).count();
                tt.insert(ia, *a);
                let ib = tt.iter().filter(|&&i| i < *b).count();
                tt.insert(ib, *b);
                let sign = (pk + ia + ib) % 2 == 0;
                let coef = if sign { c.clone() } else { -c.clone() };
                out.push((tt, SparseVec::unit(v).scale(&coef)));
            }
        }
        out
    }
}

/// `∂c`.
pub fn coboundary<S: Scalar>(rep: &Representation<S>, c: &Cochain<S>) -> Result<Cochain<S>> {
    let (n, d) = (rep.algebra().dim(), rep.dim());
    if c.algebra_dim != n || c.module_dim != d {
        return Err(Error::Dimension("cochain does not match the representation".into()));
    }
    let scatter = Scatter::new(rep);
    let tuples = increasing_tuples(n, c.degree);
    let mut pairs = Vec::new();
    for (k, coef) in c.coords.iter() {
        let (r, v) = (k / d, k % d);
        for (tt, vec) in scatter.apply(&tuples[r], v) {
            let base = tuple_rank(n, &tt) * d;
            pairs.extend(vec.iter().map(|(i, x)| (base + i, x.mul_ref(coef))));
        }
    }
    Ok(Cochain { degree: c.degree + 1, algebra_dim: n, module_dim: d, coords: SparseVec::from_pairs(pairs) })
}

/// An explicit list of basis cochains `(I, v)` for one degree.
#[derive(Clone, Debug)]
pub struct CochainBasis {
    degree: usize,
    elems: Vec<(Vec<usize>, usize)>,
    index: HashMap<(Vec<usize>, usize), usize>,
}

impl CochainBasis {
    fn new(degree: usize, elems: Vec<(Vec<usize>, usize)>) -> Self {
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        CochainBasis { degree, elems, index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[(Vec<usize>, usize)] {
        &self.elems
    }

    pub fn position(&self, tuple: &[usize], v: usize) -> Option<usize> {
        self.index.get(&(tuple.to_vec(), v)).copied()
    }
}

/// Dimension and representatives of one cohomology space.
#[derive(Clone, Debug)]
pub struct CohomologyResult<S> {
    pub degree: usize,
    pub dimension: usize,
    pub representatives: Vec<Cochain<S>>,
    pub cocycle_rank: usize,
    pub boundary_rank: usize,
}

/// A finite cochain complex `C^0 → … → C^{p_max+1}` over explicit bases:
/// either the full complex or one weight sector of a graded module.
#[derive(Clone, Debug)]
pub struct Complex<S> {
    rep: Representation<S>,
    bases: Vec<CochainBasis>,
    diffs: Vec<SparseMatrix<S>>,
}

impl<S: Scalar> Complex<S> {
    /// Full complex with differentials `∂_0 … ∂_{p_max}`.
    pub fn full(rep: &Representation<S>, p_max: usize) -> Self {
        let (n, d) = (rep.algebra().dim(), rep.dim());
        let bases = (0..=p_max + 1)
            .map(|q| {
                let elems =
                    increasing_tuples(n, q).into_iter().flat_map(|t| (0..d).map(move |v| (t.clone(), v))).collect();
                CochainBasis::new(q, elems)
            })
            .collect();
        Self::assemble(rep, bases)
    }

    /// Weight-`w` sector of the complex of a graded module, where `(I, v)` has
    /// weight `wt(v) − Σ wt(e_i)`.
    pub fn weight_sector(g: &GradedRepresentation<S>, w: i64, p_max: usize) -> Result<Self> {
        g.check_window(w, p_max + 1)?;
        let rep = g.base();
        let n = rep.algebra().dim();
        let mut by_weight: HashMap<i64, Vec<usize>> = HashMap::new();
        for (v, &wt) in g.module_weights().iter().enumerate() {
            by_weight.entry(wt).or_default().push(v);
        }
        let bases = (0..=p_max + 1)
            .map(|q| {
                let mut elems = Vec::new();
                for t in increasing_tuples(n, q) {
                    let s: i64 = t.iter().map(|&i| g.algebra_weights()[i]).sum();
                    if let Some(vs) = by_weight.get(&(s + w)) {
                        elems.extend(vs.iter().map(|&v| (t.clone(), v)));
                    }
                }
                CochainBasis::new(q, elems)
            })
            .collect();
        Ok(Self::assemble(rep, bases))
    }

    fn assemble(rep: &Representation<S>, bases: Vec<CochainBasis>) -> Self {
        let scatter = Scatter::new(rep);
        let diffs = bases
            .windows(2)
            .map(|pair| {
                let (src, dst) = (&pair[0], &pair[1]);
                let cols: Vec<SparseVec<S>> = src
                    .elems
                    .iter()
                    .map(|(t, v)| {
                        let mut entries = Vec::new();
                        for (tt, vec) in scatter.apply(t, *v) {
                            for (i, x) in vec.iter() {
                                let row = dst.position(&tt, i).expect("coboundary stays inside the sector");
                                entries.push((row, x.clone()));
                            }
                        }
                        SparseVec::from_pairs(entries)
                    })
                    .collect();
                SparseMatrix::from_columns(dst.len(), &cols)
            })
            .collect();
        Complex { rep: rep.clone(), bases, diffs }
    }

    pub fn representation(&self) -> &Representation<S> {
        &self.rep
    }

    pub fn p_max(&self) -> usize {
        self.diffs.len() - 1
    }

    pub fn basis(&self, q: usize) -> &CochainBasis {
        &self.bases[q]
    }

    /// Matrix of `∂: C^q → C^{q+1}` in the sector bases.
    pub fn differential(&self, q: usize) -> &SparseMatrix<S> {
        &self.diffs[q]
    }

    pub fn differentials(&self) -> &[SparseMatrix<S>] {
        &self.diffs
    }

    /// Sector coordinates as a full cochain.
    pub fn embed(&self, q: usize, local: &SparseVec<S>) -> Cochain<S> {
        let (n, d) = (self.rep.algebra().dim(), self.rep.dim());
        let pairs = local.iter().map(|(k, c)| {
            let (t, v) = &self.bases[q].elems[k];
            (tuple_rank(n, t) * d + v, c.clone())
        });
        Cochain { degree: q, algebra_dim: n, module_dim: d, coords: SparseVec::from_pairs(pairs) }
    }

    /// Sector coordinates of a full cochain; errors if it has components
    /// outside the sector.
    pub fn restrict(&self, c: &Cochain<S>) -> Result<SparseVec<S>> {
        let q = c.degree;
        if q >= self.bases.len() {
            return Err(Error::Dimension(format!("degree {q} beyond the complex")));
        }
        let mut pairs = Vec::new();
        for (t, v) in c.values() {
            for (i, x) in v.iter() {
                let k = self.bases[q].position(&t, i).ok_or_else(|| {
                    Error::Dimension(format!("cochain has a component ({t:?}, {i}) outside the sector"))
                })?;
                pairs.push((k, x.clone()));
            }
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    /// Cohomology in degree `p <= p_max`.
    pub fn cohomology(&self, p: usize) -> CohomologyResult<S> {
        assert!(p <= self.p_max(), "degree beyond the complex");
        let z = kernel_basis(&self.diffs[p]);
        let b =
            if p == 0 { crate::linalg::Subspace::zero(self.bases[0].len()) } else { image_basis(&self.diffs[p - 1]) };
        let reps = z.complement_of(&b).expect("coboundaries are cocycles");
        CohomologyResult {
            degree: p,
            dimension: z.dim() - b.dim(),
            representatives: reps.iter().map(|r| self.embed(p, r)).collect(),
            cocycle_rank: z.dim(),
            boundary_rank: b.dim(),
        }
    }

    /// A primitive of the cocycle `c`, or `None` if `c` is not a coboundary.
    pub fn is_coboundary(&self, c: &Cochain<S>) -> Result<Option<Cochain<S>>> {
        let q = c.degree;
        if q == 0 || q > self.p_max() {
            if q == 0 {
                return Ok(c.is_zero().then(|| c.clone()));
            }
            return Err(Error::Dimension(format!("degree {q} beyond the complex")));
        }
        let local = self.restrict(c)?;
        if !self.diffs[q].mul_vec(&local).is_zero() {
            return Err(Error::NotCocycle(format!("degree-{q} cochain has nonzero coboundary")));
        }
        Ok(solve(&self.diffs[q - 1], &local).map(|x| self.embed(q - 1, &x)))
    }
}

/// `H^p(L, V)` of a finite-dimensional representation.
pub fn cohomology<S: Scalar>(rep: &Representation<S>, p: usize) -> CohomologyResult<S> {
    Complex::full(rep, p).cohomology(p)
}

/// A primitive `b` with `∂b = c`, or `None`. Rejects non-cocycles.
pub fn is_coboundary<S: Scalar>(rep: &Representation<S>, c: &Cochain<S>) -> Result<Option<Cochain<S>>> {
    if c.degree == 0 {
        if !coboundary(rep, c)?.is_zero() {
            return Err(Error::NotCocycle("0-cochain is not invariant".into()));
        }
        return Ok(c.is_zero().then(|| c.clone()));
    }
    Complex::full(rep, c.degree).is_coboundary(c)
}

/// The weight-zero subcomplex, which carries the whole cohomology of a graded
/// module up to degree `p_max`.
pub fn weight_zero_subcomplex<S: Scalar>(g: &GradedRepresentation<S>, p_max: usize) -> Result<Complex<S>> {
    Complex::weight_sector(g, 0, p_max)
}
