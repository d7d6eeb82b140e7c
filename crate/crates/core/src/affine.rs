//! Affine representations of a Lie algebra and their classification.
//!
//! An affine space is charted by its model vector space with the base point
//! at the origin, so an affine representation is the pair `(ρ, γ₀)` with
//! `x.(a₀ + u) = γ₀(x) + ρ(x) u`.

use crate::cohomology::{coboundary, Cochain, Complex};
use crate::error::{Error, Result};
use crate::lie::{hom_module, hom_unvectorize, Representation, Violation};
use crate::linalg::{rank, simultaneous_diagonalization, solve, SparseMatrix, SparseVec};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug)]
pub struct AffineRepresentation<S> {
    model: Representation<S>,
    gamma: Cochain<S>,
}

/// `a ↦ T a + v` between charted affine spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap<S> {
    pub linear_part: SparseMatrix<S>,
    pub translation: SparseVec<S>,
}

impl<S: Scalar> AffineMap<S> {
    pub fn identity(n: usize) -> Self {
        AffineMap { linear_part: SparseMatrix::identity(n), translation: SparseVec::zero() }
    }

    pub fn translation_by(n: usize, v: SparseVec<S>) -> Self {
        AffineMap { linear_part: SparseMatrix::identity(n), translation: v }
    }

    pub fn apply(&self, a: &SparseVec<S>) -> SparseVec<S> {
        self.linear_part.mul_vec(a).add(&self.translation)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        Ok(AffineMap {
            linear_part: self.linear_part.matmul(&inner.linear_part)?,
            translation: self.apply(&inner.translation),
        })
    }
}

fn check_gamma_shape<S: Scalar>(model: &Representation<S>, gamma: &Cochain<S>) -> Result<()> {
    if gamma.degree() != 1 || gamma.algebra_dim() != model.algebra().dim() || gamma.module_dim() != model.dim() {
        return Err(Error::Dimension("base cochain must be a 1-cochain valued in the model".into()));
    }
    Ok(())
}

impl<S: Scalar> AffineRepresentation<S> {
    /// `(x, u) ↦ γ₀(x) + ρ(x) u`. Rejects `γ₀` with `∂γ₀ ≠ 0`.
    pub fn from_pair(model: Representation<S>, gamma: Cochain<S>) -> Result<Self> {
        check_gamma_shape(&model, &gamma)?;
        if !coboundary(&model, &gamma)?.is_zero() {
            return Err(Error::NotCocycle("base cochain of an affine representation".into()));
        }
        Ok(AffineRepresentation { model, gamma })
    }

    /// No cocycle check; for exercising [`Self::check_affine_axiom`].
    pub fn new_unchecked(model: Representation<S>, gamma: Cochain<S>) -> Result<Self> {
        check_gamma_shape(&model, &gamma)?;
        Ok(AffineRepresentation { model, gamma })
    }

    pub fn linear(model: Representation<S>) -> Self {
        let gamma = Cochain::zero(model.algebra().dim(), model.dim(), 1);
        AffineRepresentation { model, gamma }
    }

    pub fn model(&self) -> &Representation<S> {
        &self.model
    }

    /// `γ₀`, i.e. `x ↦ x.a₀`.
    pub fn base_cocycle(&self) -> &Cochain<S> {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.model.dim()
    }

    /// `x.(a₀ + a)`
    pub fn act(&self, x: &SparseVec<S>, a: &SparseVec<S>) -> SparseVec<S> {
        self.gamma.eval(std::slice::from_ref(x)).add(&self.model.act(x, a))
    }

    /// `x.(y.a) − y.(x.a) − [x,y].a` with the outer actions linear, for every
    /// basis pair and sample point. Empty means the axiom holds.
    pub fn check_affine_axiom(&self, samples: &[SparseVec<S>]) -> Vec<Violation> {
        let alg = self.model.algebra();
        let n = alg.dim();
        let mut out = Vec::new();
        for (s, a) in samples.iter().enumerate() {
            for i in 0..n {
                for j in i + 1..n {
                    let (x, y) = (SparseVec::unit(i), SparseVec::unit(j));
                    let lhs = self
                        .model
                        .act(&x, &self.act(&y, a))
                        .sub(&self.model.act(&y, &self.act(&x, a)))
                        .sub(&self.act(&alg.bracket(&x, &y), a));
                    if !lhs.is_zero() {
                        out.push(Violation::AffineAxiom { i, j, sample: s });
                    }
                }
            }
        }
        out
    }

    /// `γ_a = γ₀ + ∂a`, the cocycle `x ↦ x.(a₀ + a)`.
    pub fn rebase(&self, a: &SparseVec<S>) -> Result<Cochain<S>> {
        let da = coboundary(&self.model, &Cochain::from_vector(self.model.algebra().dim(), self.dim(), a.clone()))?;
        self.gamma.add(&da)
    }

    /// Whether the induced class `c_A` vanishes.
    pub fn class_is_zero(&self) -> Result<bool> {
        Ok(Complex::full(&self.model, 1).is_coboundary(&self.gamma)?.is_some())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let model = self.model.direct_sum(&other.model)?;
        let n = self.dim();
        let images: Vec<SparseVec<S>> = (0..self.model.algebra().dim())
            .map(|i| self.gamma.value(&[i]).add(&other.gamma.value(&[i]).shifted(n)))
            .collect();
        Ok(AffineRepresentation { gamma: Cochain::from_images(model.dim(), &images), model })
    }
}

/// The two sides of the intertwining criterion, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwiningCheck {
    /// `x.f(a) = f⃗(x.a)` on basis elements and the chart basis points.
    pub pointwise: bool,
    /// `f⃗ ρ_A(x) = ρ_B(x) f⃗` for all `x`.
    pub linear_part_intertwines: bool,
    /// `f⃗ ∘ γ_A − γ_B = ∂(f(a₀))`, the cochain-level form of `c_B = f⃗_♯ c_A`.
    pub cocycles_match: bool,
}

impl IntertwiningCheck {
    pub fn consistent(&self) -> bool {
        self.pointwise == (self.linear_part_intertwines && self.cocycles_match)
    }
}

pub fn intertwining_check<S: Scalar>(
    f: &AffineMap<S>,
    a: &AffineRepresentation<S>,
    b: &AffineRepresentation<S>,
) -> Result<IntertwiningCheck> {
    a.model.require_same_algebra(&b.model)?;
    if f.linear_part.ncols() != a.dim() || f.linear_part.nrows() != b.dim() {
        return Err(Error::Dimension("affine map does not match the two models".into()));
    }
    let n = a.model.algebra().dim();
    // affine maps are determined by the origin and the unit points
    let mut points = vec![SparseVec::zero()];
    points.extend((0..a.dim()).map(SparseVec::unit));
    let pointwise = (0..n).all(|i| {
        let x = SparseVec::unit(i);
        points.iter().all(|p| b.act(&x, &f.apply(p)) == f.linear_part.mul_vec(&a.act(&x, p)))
    });
    let linear_part_intertwines =
        (0..n).all(|i| f.linear_part.matmul(a.model.rho(i)).ok() == b.model.rho(i).matmul(&f.linear_part).ok());
    let dv = coboundary(&b.model, &Cochain::from_vector(n, b.dim(), f.translation.clone()))?;
    let cocycles_match = a.gamma.compose(&f.linear_part)?.sub(&b.gamma)? == dv;
    Ok(IntertwiningCheck { pointwise, linear_part_intertwines, cocycles_match })
}

pub fn is_intertwining<S: Scalar>(
    f: &AffineMap<S>,
    a: &AffineRepresentation<S>,
    b: &AffineRepresentation<S>,
) -> Result<bool> {
    let c = intertwining_check(f, a, b)?;
    debug_assert!(c.consistent(), "intertwining criteria disagree: {c:?}");
    Ok(c.pointwise)
}

/// Grid points examined before [`equivalent`] gives up.
pub const EQUIVALENCE_SEARCH_BUDGET: usize = 20_000;

/// Points of `{0..=n}^r` ordered by coordinate sum, then lexicographically.
fn grid(n: usize, r: usize, budget: usize) -> Option<Vec<Vec<i64>>> {
    let total = (n + 1).checked_pow(r as u32)?;
    if total > budget {
        return None;
    }
    let mut pts: Vec<Vec<i64>> = (0..total)
        .map(|mut k| {
            (0..r)
                .map(|_| {
                    let d = (k % (n + 1)) as i64;
                    k /= n + 1;
                    d
                })
                .collect()
        })
        .collect();
    pts.sort_by_key(|p| (p.iter().sum::<i64>(), p.clone()));
    Some(pts)
}

/// A bijective intertwining map `A → B`, if one exists.
///
/// Solves `Σ c_i T_i ∘ γ_A − ∂v = γ_B` over a basis `T_i` of the invariant
/// maps, then looks for an invertible `Σ c_i T_i` on the solution set. The
/// determinant is a polynomial of degree at most `dim` in each parameter, so
/// the grid `{0..=dim}^r` decides the question exactly; when that grid exceeds
/// [`EQUIVALENCE_SEARCH_BUDGET`] and no invertible map was met, the result is
/// [`Error::Inconclusive`].
pub fn equivalent<S: Scalar>(a: &AffineRepresentation<S>, b: &AffineRepresentation<S>) -> Result<Option<AffineMap<S>>> {
    a.model.require_same_algebra(&b.model)?;
    let (na, nb, n_alg) = (a.dim(), b.dim(), a.model.algebra().dim());
    if na != nb {
        return Ok(None);
    }
    let d0 = Complex::full(&b.model, 0).differential(0).clone();
    // identical models: try the identity first
    if a.model.action() == b.model.action() {
        let diff = b.gamma.sub(&a.gamma)?.scale(&-S::one());
        if let Some(v) = solve(&d0, diff.coords()) {
            return Ok(Some(AffineMap { linear_part: SparseMatrix::identity(na), translation: v }));
        }
    }
    let inv = hom_module(&a.model, &b.model)?.invariants();
    let ts: Vec<SparseMatrix<S>> = inv.basis().iter().map(|t| hom_unvectorize(t, nb, na)).collect();
    let k = ts.len();
    // unknowns (c_1..c_k, v)
    let mut cols: Vec<SparseVec<S>> =
        ts.iter().map(|t| Ok(a.gamma.compose(t)?.coords().clone())).collect::<Result<_>>()?;
    cols.extend(d0.columns().into_iter().map(|c| c.neg()));
    let rows = Cochain::<S>::space_dim(n_alg, nb, 1);
    let m = SparseMatrix::from_columns(rows, &cols);
    let Some(x0) = solve(&m, b.gamma.coords()) else { return Ok(None) };
    let c0 = x0.slice(0..k);
    let directions = crate::linalg::Subspace::span(
        k,
        crate::linalg::kernel_vectors(&m).into_iter().map(|v| v.slice(0..k)).filter(|v| !v.is_zero()),
    );
    let r = directions.dim();
    let t_of = |c: &SparseVec<S>| {
        let mut acc = SparseMatrix::zeros(nb, na);
        for (i, ci) in c.iter() {
            acc = acc.add_scaled(&ts[i], ci).expect("same shape");
        }
        acc
    };
    let Some(points) = grid(na, r, EQUIVALENCE_SEARCH_BUDGET) else {
        return Err(Error::Inconclusive(format!(
            "{} parameters with grid side {} exceed the search budget",
            r,
            na + 1
        )));
    };
    for p in points {
        let mut c = c0.clone();
        for (j, &pj) in p.iter().enumerate() {
            c = c.add_scaled(&directions.basis()[j], &S::from_i64(pj));
        }
        let t = t_of(&c);
        if rank(&t) == na {
            let target = a.gamma.compose(&t)?.sub(&b.gamma)?;
            let v = solve(&d0, target.coords()).expect("c lies in the solution set");
            return Ok(Some(AffineMap { linear_part: t, translation: v }));
        }
    }
    Ok(None)
}

/// The affine representation carried by a cohomology class `c = γ + ∂V` when
/// `H^0(L, V) = 0`, charted by `v ↦ γ + ∂v`.
#[derive(Clone, Debug)]
pub struct ClassAffine<S> {
    model: Representation<S>,
    base: Cochain<S>,
}

impl<S: Scalar> ClassAffine<S> {
    pub fn base(&self) -> &Cochain<S> {
        &self.base
    }

    /// The class element `γ + ∂v`.
    pub fn point(&self, v: &SparseVec<S>) -> Result<Cochain<S>> {
        let dv =
            coboundary(&self.model, &Cochain::from_vector(self.model.algebra().dim(), self.model.dim(), v.clone()))?;
        self.base.add(&dv)
    }

    /// The chart coordinate of a class element; unique because `H^0 = 0`.
    pub fn chart(&self, g: &Cochain<S>) -> Result<SparseVec<S>> {
        let d0 = Complex::full(&self.model, 0).differential(0).clone();
        solve(&d0, g.sub(&self.base)?.coords()).ok_or_else(|| Error::NotSubspace("cochain is not in the class".into()))
    }

    /// `x.γ' = γ'(x)`
    pub fn act(&self, x: &SparseVec<S>, g: &Cochain<S>) -> SparseVec<S> {
        g.eval(std::slice::from_ref(x))
    }

    /// The action read through the chart, as an [`AffineRepresentation`] on the model.
    pub fn as_affine(&self) -> Result<AffineRepresentation<S>> {
        let n = self.model.algebra().dim();
        let origin = self.point(&SparseVec::zero())?;
        let images: Vec<_> = (0..n).map(|i| self.act(&SparseVec::unit(i), &origin)).collect();
        let gamma = Cochain::from_images(self.model.dim(), &images);
        // linear part read off the unit points
        for j in 0..self.model.dim() {
            let pj = self.point(&SparseVec::unit(j))?;
            for i in 0..n {
                let x = SparseVec::unit(i);
                let lin = self.act(&x, &pj).sub(&images[i]);
                debug_assert_eq!(lin, self.model.rho(i).mul_vec(&SparseVec::unit(j)));
            }
        }
        AffineRepresentation::from_pair(self.model.clone(), gamma)
    }
}

pub fn canonical_on_class<S: Scalar>(model: &Representation<S>, gamma: &Cochain<S>) -> Result<ClassAffine<S>> {
    check_gamma_shape(model, gamma)?;
    if !coboundary(model, gamma)?.is_zero() {
        return Err(Error::NotCocycle("class representative".into()));
    }
    let h0 = model.invariants().dim();
    if h0 != 0 {
        return Err(Error::NonzeroInvariants(h0));
    }
    Ok(ClassAffine { model: model.clone(), base: gamma.clone() })
}

/// One equivalence class of affine representations inducing a fixed `ρ`.
#[derive(Clone, Debug)]
pub struct AffineClass<R> {
    pub class_id: usize,
    /// Indices of the `H^1` eigendirections present in the representative.
    pub directions: Vec<usize>,
    pub representative: R,
    /// Eigenvalues of the invariant-algebra basis on each present direction.
    pub invariant_action: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug)]
pub struct Classification<R> {
    pub h1_dim: usize,
    pub invariant_dim: usize,
    /// Joint eigenvalues of the invariant-algebra basis on each `H^1` eigendirection.
    pub characters: Vec<Vec<Rational>>,
    pub classes: Vec<AffineClass<R>>,
}

impl<R> Classification<R> {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn map<T>(self, mut f: impl FnMut(R) -> T) -> Classification<T> {
        Classification {
            h1_dim: self.h1_dim,
            invariant_dim: self.invariant_dim,
            characters: self.characters,
            classes: self
                .classes
                .into_iter()
                .map(|c| AffineClass {
                    class_id: c.class_id,
                    directions: c.directions,
                    representative: f(c.representative),
                    invariant_action: c.invariant_action,
                })
                .collect(),
        }
    }
}

/// Orbits of `H^1` under the invertible elements of the invariant algebra.
///
/// `fibre` holds a basis of the invariant algebra acting faithfully on a space
/// of dimension `fibre_dim`; `h1_action[i]` is the matrix of `fibre[i]` on
/// `H^1` coordinates. Supported when the algebra is split semisimple and acts
/// on `H^1` through pairwise distinct characters on one-dimensional
/// eigenlines; the count is then `2^s`. Representatives are given in `H^1`
/// coordinates.
///
/// Scalar-only invariant algebras with `s ≥ 2` are not a `2^s` case: one
/// scalar cannot separate the sign patterns. They are rejected.
pub fn classify_diagonal(
    fibre_dim: usize,
    fibre: &[SparseMatrix<Rational>],
    h1_dim: usize,
    h1_action: &[SparseMatrix<Rational>],
) -> Result<Classification<SparseVec<Rational>>> {
    let unsupported = |why: &str| Err(Error::ClassificationUnsupported(why.into()));
    let mu = match simultaneous_diagonalization(fibre_dim, fibre) {
        Some(sp) => sp,
        None => return unsupported("invariant algebra is not diagonalizable over the rationals"),
    };
    if mu.len() != fibre.len() {
        return unsupported("invariant algebra is not split semisimple");
    }
    let lambda = match simultaneous_diagonalization(h1_dim, h1_action) {
        Some(sp) => sp,
        None => return unsupported("invariant algebra does not act diagonalizably on H^1"),
    };
    if lambda.iter().any(|l| l.basis.len() != 1) {
        return unsupported(
            "a character acts on an eigenspace of H^1 of dimension > 1; orbits are not finite in number",
        );
    }
    if lambda.iter().any(|l| !mu.iter().any(|m| m.eigenvalues == l.eigenvalues)) {
        return unsupported("a character on H^1 is not a character of the invariant algebra");
    }
    let s = lambda.len();
    let mut subsets: Vec<Vec<usize>> =
        (0u64..(1u64 << s)).map(|mask| (0..s).filter(|j| mask >> j & 1 == 1).collect()).collect();
    subsets.sort_by_key(|j: &Vec<usize>| (j.len(), j.clone()));
    let classes = subsets
        .into_iter()
        .enumerate()
        .map(|(class_id, dirs)| {
            let mut rep = SparseVec::zero();
            for &j in &dirs {
                rep = rep.add(&lambda[j].basis[0]);
            }
            AffineClass {
                class_id,
                invariant_action: dirs.iter().map(|&j| lambda[j].eigenvalues.clone()).collect(),
                directions: dirs,
                representative: rep,
            }
        })
        .collect();
    Ok(Classification {
        h1_dim,
        invariant_dim: fibre.len(),
        characters: lambda.iter().map(|l| l.eigenvalues.clone()).collect(),
        classes,
    })
}

/// Coordinates of the class of `c` in the basis `reps` of `H^p`, computed in `complex`.
pub fn class_coordinates<S: Scalar>(
    complex: &Complex<S>,
    reps: &[Cochain<S>],
    c: &Cochain<S>,
) -> Result<Option<SparseVec<S>>> {
    let p = c.degree();
    let mut cols = reps.iter().map(|r| complex.restrict(r)).collect::<Result<Vec<_>>>()?;
    if p > 0 {
        cols.extend(complex.differential(p - 1).columns());
    }
    let m = SparseMatrix::from_columns(complex.basis(p).len(), &cols);
    Ok(solve(&m, &complex.restrict(c)?).map(|x| x.slice(0..reps.len())))
}

/// Equivalence classes of affine representations inducing a finite-dimensional `ρ`.
pub fn classify_affine_reps(model: &Representation<Rational>) -> Result<Classification<Cochain<Rational>>> {
    let h0 = model.invariants().dim();
    if h0 != 0 {
        return Err(Error::NonzeroInvariants(h0));
    }
    let complex = Complex::full(model, 1);
    let h1 = complex.cohomology(1);
    let n = model.dim();
    let ts: Vec<SparseMatrix<Rational>> =
        hom_module(model, model)?.invariants().basis().iter().map(|t| hom_unvectorize(t, n, n)).collect();
    let s = h1.dimension;
    let h1_action = ts
        .iter()
        .map(|t| {
            let cols = h1
                .representatives
                .iter()
                .map(|g| {
                    class_coordinates(&complex, &h1.representatives, &g.compose(t)?)?
                        .ok_or_else(|| Error::NotCocycle("image of a cocycle under an invariant map".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SparseMatrix::from_columns(s, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let reps = h1.representatives.clone();
    let alg_dim = model.algebra().dim();
    Ok(classify_diagonal(n, &ts, s, &h1_action)?.map(|coords| {
        let mut acc = Cochain::zero(alg_dim, n, 1);
        for (j, c) in coords.iter() {
            acc = acc.add(&reps[j].scale(c)).expect("same shape");
        }
        acc
    }))
}
