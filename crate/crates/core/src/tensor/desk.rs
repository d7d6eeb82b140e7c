//! Bounded-degree computations over the Lie algebra of polynomial vector
//! fields on `R^m` acting on `S¹₂(R^m)`.
//!
//! Every statement here is an exact linear-algebra fact about finitely many
//! polynomial unknowns. Results hold for the stated degree and order bounds
//! only.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::fields::{bracket, contraction_zero, d_nabla0, npairs, Connection, SymContravariant, VectorField, S12};
use super::index::TermIndex;
use super::polynomial::{monomials_up_to, Monomial, Polynomial};
use crate::affine::{classify_diagonal, Classification};
use crate::error::{Error, Result};
use crate::linalg::{kernel_vectors, solve, SparseMatrix, SparseVec, Subspace};
use crate::scalar::{Rational, Scalar};

fn factorial_ratio(alpha: &[u32], beta: &[u32]) -> Option<Rational> {
    // α! / (α − β)!
    let mut acc = Rational::one();
    for (&a, &b) in alpha.iter().zip(beta) {
        if b > a {
            return None;
        }
        for t in (a - b + 1)..=a {
            acc *= Rational::from_i64(t as i64);
        }
    }
    Some(acc)
}

fn sub_monomial(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn leq(b: &[u32], a: &[u32]) -> bool {
    b.iter().zip(a).all(|(x, y)| x <= y)
}

/// Linear differential operator between tuples of polynomials:
/// `out_o = Σ A_{o,i,β} ∂^β in_i` with polynomial coefficients `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    m: usize,
    n_in: usize,
    n_out: usize,
    terms: BTreeMap<(usize, usize, Monomial), Polynomial>,
}

impl DiffOp {
    pub fn zero(m: usize, n_in: usize, n_out: usize) -> Self {
        DiffOp { m, n_in, n_out, terms: BTreeMap::new() }
    }

    /// Adds `c x^γ ∂^β` from input `i` to output `o`.
    pub fn add_term(&mut self, o: usize, i: usize, beta: Monomial, gamma: Monomial, c: &Rational) {
        let m = self.m;
        let slot = self.terms.entry((o, i, beta)).or_insert_with(|| Polynomial::zero(m));
        slot.add_term(gamma, c);
    }

    /// Recovers the operator of a linear map known to be a differential
    /// operator of order `≤ order`, from its values on `x^α e_i`, `|α| ≤ order`.
    pub fn from_fn(
        m: usize,
        n_in: usize,
        n_out: usize,
        order: u32,
        mut f: impl FnMut(&[Polynomial]) -> Vec<Polynomial>,
    ) -> Self {
        let mut op = Self::zero(m, n_in, n_out);
        for i in 0..n_in {
            for alpha in monomials_up_to(m, order) {
                let mut input = vec![Polynomial::zero(m); n_in];
                input[i] = Polynomial::monomial(m, alpha.clone(), Rational::one());
                let values = f(&input);
                let alpha_fact = factorial_ratio(&alpha, &alpha).expect("α ≤ α");
                for (o, value) in values.iter().enumerate() {
                    // value = Σ_{β ≤ α} α!/(α−β)! x^{α−β} A_β
                    let mut rest = value.clone();
                    for ((oo, ii, beta), a) in &op.terms {
                        if *oo != o || *ii != i || !leq(beta, &alpha) {
                            continue;
                        }
                        let r = factorial_ratio(&alpha, beta).expect("β ≤ α");
                        rest = rest.sub(&a.mul_monomial(&sub_monomial(&alpha, beta)).scale(&r));
                    }
                    if !rest.is_zero() {
                        op.terms.insert((o, i, alpha.clone()), rest.scale(&alpha_fact.inv()));
                    }
                }
            }
        }
        op.terms.retain(|_, a| !a.is_zero());
        op
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest `|β|`, `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(_, _, b)| b.iter().sum()).max()
    }

    /// Highest coefficient degree, `None` for the zero operator.
    pub fn coefficient_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(Polynomial::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, Monomial), &Polynomial)> + '_ {
        self.terms.iter()
    }

    pub fn apply(&self, input: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(input.len(), self.n_in, "input arity");
        let mut out = vec![Polynomial::zero(self.m); self.n_out];
        for ((o, i, beta), a) in &self.terms {
            let d = input[*i].deriv_multi(beta);
            if !d.is_zero() {
                out[*o] = out[*o].add(&a.mul(&d));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, a) in &other.terms {
            let slot = out.terms.entry(k.clone()).or_insert_with(|| Polynomial::zero(self.m));
            *slot = slot.add(a);
        }
        out.terms.retain(|_, a| !a.is_zero());
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        for a in out.terms.values_mut() {
            *a = a.scale(c);
        }
        out.terms.retain(|_, a| !a.is_zero());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }
}

/// An operator space: all `x^γ ∂^β` from each input to each output with
/// `|β| ≤ order` and `|γ| ≤ degree`, one coordinate each.
#[derive(Clone, Debug)]
pub struct OperatorSpace {
    m: usize,
    n_in: usize,
    n_out: usize,
    unknowns: Vec<(usize, usize, Monomial, Monomial)>,
    lookup: HashMap<(usize, usize, Monomial, Monomial), usize>,
}

impl OperatorSpace {
    pub fn new(m: usize, n_in: usize, n_out: usize, order: u32, degree: u32) -> Self {
        let betas = monomials_up_to(m, order);
        let gammas = monomials_up_to(m, degree);
        let mut unknowns = Vec::new();
        for o in 0..n_out {
            for i in 0..n_in {
                for b in &betas {
                    for g in &gammas {
                        unknowns.push((o, i, b.clone(), g.clone()));
                    }
                }
            }
        }
        let lookup = unknowns.iter().enumerate().map(|(k, u)| (u.clone(), k)).collect();
        OperatorSpace { m, n_in, n_out, unknowns, lookup }
    }

    pub fn dim(&self) -> usize {
        self.unknowns.len()
    }

    /// The operator of coordinate `k` alone.
    pub fn unit(&self, k: usize) -> DiffOp {
        let (o, i, b, g) = self.unknowns[k].clone();
        let mut op = DiffOp::zero(self.m, self.n_in, self.n_out);
        op.add_term(o, i, b, g, &Rational::one());
        op
    }

    pub fn operator(&self, v: &SparseVec<Rational>) -> DiffOp {
        let mut op = DiffOp::zero(self.m, self.n_in, self.n_out);
        for (k, c) in v.iter() {
            let (o, i, b, g) = self.unknowns[k].clone();
            op.add_term(o, i, b, g, c);
        }
        op.terms.retain(|_, a| !a.is_zero());
        op
    }

    /// `None` if the operator exceeds the order or degree bounds.
    pub fn coordinates(&self, op: &DiffOp) -> Option<SparseVec<Rational>> {
        let mut pairs = Vec::new();
        for ((o, i, b), a) in &op.terms {
            for (g, c) in a.terms() {
                pairs.push((*self.lookup.get(&(*o, *i, b.clone(), g.clone()))?, c.clone()));
            }
        }
        Some(SparseVec::from_pairs(pairs))
    }
}

fn field_of(m: usize, comps: &[Polynomial]) -> VectorField {
    VectorField::new(m, comps.to_vec()).expect("m components")
}

fn s12_of(m: usize, comps: &[Polynomial]) -> S12 {
    S12::from_components(m, comps.to_vec()).expect("flat components")
}

/// `X ↦ f(X)` as an operator `Vect → S¹₂` of order `≤ order`.
pub fn vect_operator(m: usize, order: u32, mut f: impl FnMut(&VectorField) -> S12) -> DiffOp {
    DiffOp::from_fn(m, m, m * npairs(m), order, |c| f(&field_of(m, c)).components().to_vec())
}

/// `S ↦ f(S)` as an operator `S¹₂ → S¹₂` of order `≤ order`.
pub fn s12_operator(m: usize, order: u32, mut f: impl FnMut(&S12) -> S12) -> DiffOp {
    let n = m * npairs(m);
    DiffOp::from_fn(m, n, n, order, |c| f(&s12_of(m, c)).components().to_vec())
}

/// Applies a `Vect → S¹₂` operator.
pub fn apply_vect(op: &DiffOp, x: &VectorField) -> S12 {
    s12_of(op.m, &op.apply(x.components()))
}

/// Applies an `S¹₂ → S¹₂` operator.
pub fn apply_s12(op: &DiffOp, s: &S12) -> S12 {
    s12_of(op.m, &op.apply(s.components()))
}

/// All `x^α ∂_i` with `|α| ≤ d`.
pub fn monomial_fields(m: usize, d: u32) -> Vec<VectorField> {
    let mut out = Vec::new();
    for a in monomials_up_to(m, d) {
        for i in 0..m {
            out.push(VectorField::monomial(m, i, a.clone(), Rational::one()));
        }
    }
    out
}

/// All monomial `S¹₂` fields with coefficient degree `≤ d`.
pub fn monomial_s12(m: usize, d: u32) -> Vec<S12> {
    (0..=d).flat_map(|k| S12::basis_of_degree(m, k)).collect()
}

/// Outcome of a finite homogeneous linear system.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub kernel: Vec<SparseVec<Rational>>,
}

impl KernelReport {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }
}

fn kernel_of_columns(index: &TermIndex, cols: &[SparseVec<Rational>]) -> KernelReport {
    let a = SparseMatrix::from_columns(index.len(), cols);
    let kernel = kernel_vectors(&a);
    KernelReport { unknowns: cols.len(), equations: index.len(), rank: cols.len() - kernel.len(), kernel }
}

/// Joint kernel of `S ↦ L_X S` over monomial `X` with `deg X ≤ field_degree`,
/// on `S` with coefficients of degree `≤ coeff_degree`.
pub fn invariant_tensors(m: usize, field_degree: u32, coeff_degree: u32) -> KernelReport {
    let fields = monomial_fields(m, field_degree);
    let basis = monomial_s12(m, coeff_degree);
    let mut index = TermIndex::new();
    let n = m * npairs(m);
    let cols: Vec<SparseVec<Rational>> = basis
        .iter()
        .map(|s| {
            let mut pairs = Vec::new();
            for (f, x) in fields.iter().enumerate() {
                for (flat, p) in s.lie_derivative(x).components().iter().enumerate() {
                    for (e, c) in p.terms() {
                        pairs.push((index.index(f * n + flat, e), c.clone()));
                    }
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    kernel_of_columns(&index, &cols)
}

/// Bounds for the equivariant-map system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivariantBounds {
    pub order: u32,
    pub coeff_degree: u32,
    pub field_degree: u32,
    pub test_degree: u32,
}

impl Default for EquivariantBounds {
    fn default() -> Self {
        EquivariantBounds { order: 2, coeff_degree: 2, field_degree: 2, test_degree: 2 }
    }
}

/// Operators `T: S¹₂ → S¹₂` within the bounds with `L_X(TS) = T(L_X S)` for
/// every monomial `X` and monomial test tensor `S`.
pub fn equivariant_operators(m: usize, b: EquivariantBounds) -> (OperatorSpace, KernelReport) {
    let n = m * npairs(m);
    let space = OperatorSpace::new(m, n, n, b.order, b.coeff_degree);
    let fields = monomial_fields(m, b.field_degree);
    let tests = monomial_s12(m, b.test_degree);
    let mut instances = Vec::new();
    for x in &fields {
        for s in &tests {
            instances.push((x, s, s.lie_derivative(x)));
        }
    }
    let mut index = TermIndex::new();
    let cols: Vec<SparseVec<Rational>> = (0..space.dim())
        .map(|k| {
            let t = space.unit(k);
            let mut pairs = Vec::new();
            for (r, (x, s, lxs)) in instances.iter().enumerate() {
                let ts = apply_s12(&t, s);
                let lhs = if ts.is_zero() { ts } else { ts.lie_derivative(x) };
                let diff = lhs.sub(&apply_s12(&t, lxs));
                for (flat, p) in diff.components().iter().enumerate() {
                    for (e, c) in p.terms() {
                        pairs.push((index.index(r * n + flat, e), c.clone()));
                    }
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    let report = kernel_of_columns(&index, &cols);
    (space, report)
}

/// `pr` and `tr·1` as zeroth-order operators.
pub fn pr_operator(m: usize) -> DiffOp {
    s12_operator(m, 0, S12::pr)
}

pub fn tr_one_operator(m: usize) -> DiffOp {
    s12_operator(m, 0, S12::tr_one)
}

/// Bounds for the first cohomology computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct H1Bounds {
    /// order of the cochain operators
    pub order: u32,
    /// coefficient degree of the cochain operators
    pub coeff_degree: u32,
    /// degree of the monomial fields on which the cocycle identity is imposed
    pub field_degree: u32,
}

impl Default for H1Bounds {
    fn default() -> Self {
        H1Bounds { order: 2, coeff_degree: 2, field_degree: 3 }
    }
}

/// `H¹` of polynomial vector fields with values in `S¹₂`, restricted to
/// cochains that are differential operators within the bounds.
#[derive(Clone, Debug)]
pub struct DeskH1 {
    pub m: usize,
    pub bounds: H1Bounds,
    pub space: OperatorSpace,
    pub cocycles: Subspace<Rational>,
    pub coboundaries: Subspace<Rational>,
    /// cocycles completing a basis of the coboundaries
    pub representatives: Vec<SparseVec<Rational>>,
}

pub fn desk_h1(m: usize, b: H1Bounds) -> Result<DeskH1> {
    let n = m * npairs(m);
    let space = OperatorSpace::new(m, m, n, b.order, b.coeff_degree);
    let fields = monomial_fields(m, b.field_degree);
    let mut pairs_xy = Vec::new();
    for i in 0..fields.len() {
        for j in i + 1..fields.len() {
            pairs_xy.push((&fields[i], &fields[j], bracket(&fields[i], &fields[j])?));
        }
    }
    let mut index = TermIndex::new();
    let cols: Vec<SparseVec<Rational>> = (0..space.dim())
        .map(|k| {
            let c = space.unit(k);
            let mut entries = Vec::new();
            for (r, (x, y, xy)) in pairs_xy.iter().enumerate() {
                let (cx, cy) = (apply_vect(&c, x), apply_vect(&c, y));
                let mut d = apply_vect(&c, xy).scale(&-Rational::one());
                if !cy.is_zero() {
                    d = d.add(&cy.lie_derivative(x));
                }
                if !cx.is_zero() {
                    d = d.sub(&cx.lie_derivative(y));
                }
                for (flat, p) in d.components().iter().enumerate() {
                    for (e, c) in p.terms() {
                        entries.push((index.index(r * n + flat, e), c.clone()));
                    }
                }
            }
            SparseVec::from_pairs(entries)
        })
        .collect();
    let z = kernel_of_columns(&index, &cols);
    let cocycles = Subspace::span(space.dim(), z.kernel);
    let mut coboundaries = Subspace::zero(space.dim());
    for s in monomial_s12(m, b.coeff_degree) {
        let op = vect_operator(m, 1, |x| s.lie_derivative(x));
        let v =
            space.coordinates(&op).ok_or_else(|| Error::Infeasible("coboundary exceeds the operator bounds".into()))?;
        coboundaries.push(v);
    }
    let representatives = cocycles.complement_of(&coboundaries)?;
    Ok(DeskH1 { m, bounds: b, space, cocycles, coboundaries, representatives })
}

impl DeskH1 {
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }

    /// Operator coordinates of a cochain given as a function.
    pub fn cochain(&self, f: impl FnMut(&VectorField) -> S12) -> Result<SparseVec<Rational>> {
        let op = vect_operator(self.m, self.bounds.order, f);
        self.space.coordinates(&op).ok_or_else(|| Error::Infeasible("cochain exceeds the operator bounds".into()))
    }

    pub fn is_cocycle(&self, v: &SparseVec<Rational>) -> bool {
        self.cocycles.contains(v)
    }

    pub fn is_coboundary(&self, v: &SparseVec<Rational>) -> bool {
        self.coboundaries.contains(v)
    }

    /// Class of a cocycle in the basis of [`Self::representatives`].
    pub fn class_coordinates(&self, v: &SparseVec<Rational>) -> Result<SparseVec<Rational>> {
        if !self.is_cocycle(v) {
            return Err(Error::NotCocycle("operator is not a cocycle within the bounds".into()));
        }
        let mut cols = self.representatives.clone();
        cols.extend(self.coboundaries.basis().iter().cloned());
        let a = SparseMatrix::from_columns(self.space.dim(), &cols);
        let x = solve(&a, v).expect("cocycles are spanned by representatives and coboundaries");
        Ok(x.slice(0..self.dimension()))
    }

    /// Matrix of `c ↦ t ∘ c` on `H¹` coordinates, for an equivariant `t`.
    pub fn post_composition(&self, t: &DiffOp) -> Result<SparseMatrix<Rational>> {
        let cols = self
            .representatives
            .iter()
            .map(|r| {
                let c = self.space.operator(r);
                let v = self.cochain(|x| apply_s12(t, &apply_vect(&c, x)))?;
                self.class_coordinates(&v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(self.dimension(), &cols))
    }
}

/// `X ↦ L_X∇⁰`, `X ↦ pr(L_X∇⁰)`, `X ↦ tr(L_X∇⁰)·1` as operator coordinates.
pub fn connection_cocycles(h1: &DeskH1) -> Result<[SparseVec<Rational>; 3]> {
    let flat = Connection::flat(h1.m);
    Ok([
        h1.cochain(|x| flat.lie_derivative(x))?,
        h1.cochain(|x| flat.lie_derivative(x).pr())?,
        h1.cochain(|x| flat.lie_derivative(x).tr_one())?,
    ])
}

/// A classified affine class, with its name among `0, L^pr, L^tr, L`.
#[derive(Clone, Debug)]
pub struct DeskClass {
    pub label: String,
    pub representative: SparseVec<Rational>,
}

/// Classes of affine representations of polynomial vector fields modelled on
/// `S¹₂`, under the invariant algebra `span{pr, tr·1}` acting by post-composition.
pub fn classify_s12(h1: &DeskH1) -> Result<(Classification<SparseVec<Rational>>, Vec<DeskClass>)> {
    let m = h1.m;
    let (pr, tr1) = (pr_operator(m), tr_one_operator(m));
    let fibre: Vec<SparseMatrix<Rational>> = [&pr, &tr1]
        .iter()
        .map(|t| {
            let n = m * npairs(m);
            let cols: Vec<SparseVec<Rational>> = (0..n)
                .map(|k| {
                    let (kk, i, j) = S12::slot(m, k);
                    let s = S12::monomial(m, kk, i, j, vec![0; m], Rational::one());
                    let out = apply_s12(t, &s);
                    SparseVec::from_pairs(
                        out.components().iter().enumerate().map(|(f, p)| (f, p.coefficient(&vec![0; m]))),
                    )
                })
                .collect();
            SparseMatrix::from_columns(n, &cols)
        })
        .collect();
    let action = vec![h1.post_composition(&pr)?, h1.post_composition(&tr1)?];
    let classes = classify_diagonal(m * npairs(m), &fibre, h1.dimension(), &action)?;
    let [_, lpr, ltr] = connection_cocycles(h1)?;
    let (cpr, ctr) = (h1.class_coordinates(&lpr)?, h1.class_coordinates(&ltr)?);
    let named = classes
        .classes
        .iter()
        .map(|c| {
            let has = |target: &SparseVec<Rational>| {
                c.directions.iter().any(|&d| {
                    let ch = &classes.characters[d];
                    action[0].mul_vec(target) == target.scale(&ch[0])
                        && action[1].mul_vec(target) == target.scale(&ch[1])
                })
            };
            let label = match (has(&cpr), has(&ctr)) {
                (false, false) => "0",
                (true, false) => "L^pr",
                (false, true) => "L^tr",
                (true, true) => "L",
            };
            let mut rep = SparseVec::zero();
            for (i, x) in c.representative.iter() {
                rep = rep.add_scaled(&h1.representatives[i], x);
            }
            DeskClass { label: label.into(), representative: rep }
        })
        .collect();
    Ok((classes, named))
}

/// `χ(t)(X) = −t(L_X∇⁰)` for an equivariant `t: S¹₂ → S¹₂`.
pub fn connecting_desk(h1: &DeskH1, t: &DiffOp) -> Result<SparseVec<Rational>> {
    let flat = Connection::flat(h1.m);
    h1.cochain(|x| apply_s12(t, &flat.lie_derivative(x)).scale(&-Rational::one()))
}

/// Which of `±target` has the class of `v`, if either.
pub fn class_sign(h1: &DeskH1, v: &SparseVec<Rational>, target: &SparseVec<Rational>) -> Result<Option<i64>> {
    let (cv, ct) = (h1.class_coordinates(v)?, h1.class_coordinates(target)?);
    if ct.is_zero() {
        return Ok(None);
    }
    if cv == ct {
        Ok(Some(1))
    } else if cv == ct.neg() {
        Ok(Some(-1))
    } else {
        Ok(None)
    }
}

/// Solution line of `p·⁰L(X)(P) + q·⁰L^tr(X)(P) = r·(∂D)(X)(P)`, where
/// `L = L_·∇⁰`, `D = D_{∇⁰}` and `(∂D)(X) = L_X∘D − D∘L_X`.
#[derive(Clone, Debug)]
pub struct PrettrSolution {
    pub report: KernelReport,
    /// `(p, q)` normalized to `r = 1`, when the solution line has `r ≠ 0`.
    pub pq: Option<(Rational, Rational)>,
}

pub fn prettr(m: usize, field_degree: u32, tensor_degree: u32) -> PrettrSolution {
    let flat = Connection::flat(m);
    let fields = monomial_fields(m, field_degree);
    let tests: Vec<SymContravariant> =
        (0..=tensor_degree).flat_map(|d| SymContravariant::basis_of_degree(m, 2, d)).collect();
    let mut cols = vec![Vec::new(); 3];
    let mut index = TermIndex::new();
    for (fi, x) in fields.iter().enumerate() {
        let l = flat.lie_derivative(x);
        let ltr = l.tr_one();
        for (pi, p) in tests.iter().enumerate() {
            let row = fi * tests.len() + pi;
            let a = contraction_zero(&l, p);
            let b = contraction_zero(&ltr, p);
            let c = d_nabla0(p).lie_derivative(x).sub(&d_nabla0(&p.lie_derivative(x)));
            for (col, v, sign) in [(0, &a, 1), (1, &b, 1), (2, &c, -1)] {
                for (k, poly) in v.components().iter().enumerate() {
                    for (e, coef) in poly.terms() {
                        cols[col].push((index.index(row * m + k, e), coef * Rational::from_i64(sign)));
                    }
                }
            }
        }
    }
    let cols: Vec<SparseVec<Rational>> = cols.into_iter().map(SparseVec::from_pairs).collect();
    let report = kernel_of_columns(&index, &cols);
    let pq = match report.kernel.as_slice() {
        [v] if !v.get(2).is_zero() => {
            let r = v.get(2);
            Some((v.get(0) / r.clone(), v.get(1) / r))
        }
        _ => None,
    };
    PrettrSolution { report, pq }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn operator_recovery_round_trips() {
        let m = 2;
        let flat = Connection::flat(m);
        let op = vect_operator(m, 2, |x| flat.lie_derivative(x));
        assert_eq!(op.order(), Some(2));
        assert_eq!(op.coefficient_degree(), Some(0));
        for x in monomial_fields(m, 3) {
            assert_eq!(apply_vect(&op, &x), flat.lie_derivative(&x));
        }
        let s = S12::monomial(m, 1, 0, 1, vec![1, 1], rat(3, 2));
        let op = vect_operator(m, 1, |x| s.lie_derivative(x));
        for x in monomial_fields(m, 3) {
            assert_eq!(apply_vect(&op, &x), s.lie_derivative(&x));
        }
        let pr = pr_operator(m);
        assert_eq!(pr.order(), Some(0));
        for t in monomial_s12(m, 1) {
            assert_eq!(apply_s12(&pr, &t), t.pr());
        }
    }

    #[test]
    fn operator_space_coordinates() {
        let space = OperatorSpace::new(2, 2, 6, 2, 1);
        for k in [0, 7, space.dim() - 1] {
            assert_eq!(space.coordinates(&space.unit(k)), Some(SparseVec::unit(k)));
        }
        let mut big = DiffOp::zero(2, 2, 6);
        big.add_term(0, 0, vec![3, 0], vec![0, 0], &rat(1, 1));
        assert!(space.coordinates(&big).is_none());
    }

    #[test]
    fn small_invariant_kernel_vanishes() {
        let r = invariant_tensors(2, 2, 2);
        assert_eq!(r.kernel_dim(), 0);
    }
}
