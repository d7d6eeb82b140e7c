use num_traits::One;
use serde::{Deserialize, Serialize};

use super::polynomial::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::poly::{multiset_count, multiset_rank, multisets};
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::Dimension(format!("tensor fields need m > 1, got {m}")));
    }
    Ok(())
}

fn check_components(m: usize, comps: &[Polynomial], expected: usize) -> Result<()> {
    check_m(m)?;
    if comps.len() != expected {
        return Err(Error::Dimension(format!("{} components, expected {expected}", comps.len())));
    }
    if comps.iter().any(|p| p.m() != m) {
        return Err(Error::Dimension("component polynomial in the wrong number of variables".into()));
    }
    Ok(())
}

/// Number of unordered index pairs `{i, j}`.
pub fn npairs(m: usize) -> usize {
    m * (m + 1) / 2
}

/// Index of the unordered pair `{i, j}` among `(0,0), (0,1), …, (m−1,m−1)`.
pub fn pair_index(m: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * m - i * (i + 1) / 2 + j
}

pub fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect()
}

/// `X = Σ X^i ∂_i` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    m: usize,
    comps: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(m: usize, comps: Vec<Polynomial>) -> Result<Self> {
        check_components(m, &comps, m)?;
        Ok(VectorField { m, comps })
    }

    /// Panics if `m < 2`.
    pub fn zero(m: usize) -> Self {
        check_m(m).expect("dimension");
        VectorField { m, comps: vec![Polynomial::zero(m); m] }
    }

    /// `c x^α ∂_i`
    pub fn monomial(m: usize, i: usize, alpha: Monomial, c: Rational) -> Self {
        let mut x = Self::zero(m);
        x.comps[i] = Polynomial::monomial(m, alpha, c);
        x
    }

    pub fn partial(m: usize, i: usize) -> Self {
        Self::monomial(m, i, vec![0; m], Rational::one())
    }

    /// `E = Σ x^u ∂_u`
    pub fn euler(m: usize) -> Self {
        let mut x = Self::zero(m);
        for u in 0..m {
            x.comps[u] = Polynomial::var(m, u);
        }
        x
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Polynomial::degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        VectorField { m: self.m, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        VectorField { m: self.m, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        VectorField { m: self.m, comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul_fn(&self, f: &Polynomial) -> Self {
        VectorField { m: self.m, comps: self.comps.iter().map(|a| a.mul(f)).collect() }
    }

    /// `X(f) = X^u ∂_u f`
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.m);
        for (u, xu) in self.comps.iter().enumerate() {
            if !xu.is_zero() {
                acc = acc.add(&xu.mul(&f.deriv(u)));
            }
        }
        acc
    }

    /// `(∂X)^i_j = ∂_j X^i`, indexed `[i][j]`.
    pub fn jacobian(&self) -> Vec<Vec<Polynomial>> {
        self.comps.iter().map(|c| (0..self.m).map(|j| c.deriv(j)).collect()).collect()
    }

    /// `tr(∂X) = Σ ∂_i X^i`
    pub fn divergence(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.m);
        for (i, c) in self.comps.iter().enumerate() {
            acc = acc.add(&c.deriv(i));
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut doc = FieldDoc::new(self.m);
        for (i, c) in self.comps.iter().enumerate() {
            doc.push(vec![i], vec![], c);
        }
        doc.to_value()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc = FieldDoc::from_value(v)?;
        let mut x = VectorField { m: doc.m, comps: vec![Polynomial::zero(doc.m); doc.m] };
        for (up, lo, e, c) in doc.entries()? {
            match (up.as_slice(), lo.as_slice()) {
                ([i], []) if *i < doc.m => x.comps[*i].add_term(e, &c),
                _ => return Err(Error::Parse(format!("bad vector field entry {up:?} {lo:?}"))),
            }
        }
        Ok(x)
    }
}

/// `[X, Y]^i = X^u ∂_u Y^i − Y^u ∂_u X^i`
pub fn bracket(x: &VectorField, y: &VectorField) -> Result<VectorField> {
    if x.m != y.m {
        return Err(Error::Dimension(format!("fields on R^{} and R^{}", x.m, y.m)));
    }
    let comps = (0..x.m).map(|i| x.apply(&y.comps[i]).sub(&y.apply(&x.comps[i]))).collect();
    Ok(VectorField { m: x.m, comps })
}

/// `α = Σ α_i dx^i`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneForm {
    m: usize,
    comps: Vec<Polynomial>,
}

impl OneForm {
    pub fn new(m: usize, comps: Vec<Polynomial>) -> Result<Self> {
        check_components(m, &comps, m)?;
        Ok(OneForm { m, comps })
    }

    /// Panics if `m < 2`.
    pub fn zero(m: usize) -> Self {
        check_m(m).expect("dimension");
        OneForm { m, comps: vec![Polynomial::zero(m); m] }
    }

    /// `c x^α dx^i`
    pub fn monomial(m: usize, i: usize, alpha: Monomial, c: Rational) -> Self {
        let mut a = Self::zero(m);
        a.comps[i] = Polynomial::monomial(m, alpha, c);
        a
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        OneForm { m: self.m, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        OneForm { m: self.m, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        OneForm { m: self.m, comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul_fn(&self, f: &Polynomial) -> Self {
        OneForm { m: self.m, comps: self.comps.iter().map(|a| a.mul(f)).collect() }
    }

    /// `(L_X α)_i = X^u ∂_u α_i + α_u ∂_i X^u`
    pub fn lie_derivative(&self, x: &VectorField) -> Self {
        assert_eq!(self.m, x.m, "dimension mismatch");
        let jac = x.jacobian();
        let comps = (0..self.m)
            .map(|i| {
                let mut acc = x.apply(&self.comps[i]);
                for u in 0..self.m {
                    acc = acc.add(&self.comps[u].mul(&jac[u][i]));
                }
                acc
            })
            .collect();
        OneForm { m: self.m, comps }
    }

    /// `α·1 : (u, v) ↦ α(u) v + α(v) u`, i.e. `(α·1)^k_ij = α_i δ^k_j + α_j δ^k_i`.
    pub fn alpha_one(&self) -> S12 {
        let mut s = S12::zero(self.m);
        for (i, j) in pairs(self.m) {
            // k = j picks α_i, k = i picks α_j
            s.add_to(j, i, j, &self.comps[i]);
            s.add_to(i, i, j, &self.comps[j]);
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut doc = FieldDoc::new(self.m);
        for (i, c) in self.comps.iter().enumerate() {
            doc.push(vec![], vec![i], c);
        }
        doc.to_value()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc = FieldDoc::from_value(v)?;
        let mut a = OneForm { m: doc.m, comps: vec![Polynomial::zero(doc.m); doc.m] };
        for (up, lo, e, c) in doc.entries()? {
            match (up.as_slice(), lo.as_slice()) {
                ([], [i]) if *i < doc.m => a.comps[*i].add_term(e, &c),
                _ => return Err(Error::Parse(format!("bad 1-form entry {up:?} {lo:?}"))),
            }
        }
        Ok(a)
    }
}

/// Symmetric `(1,2)`-tensor field `S^k_ij dx^i ∨ dx^j ⊗ ∂_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct S12 {
    m: usize,
    /// index `k · npairs + pair_index(i, j)`
    comps: Vec<Polynomial>,
}

impl S12 {
    /// Panics if `m < 2`.
    pub fn zero(m: usize) -> Self {
        check_m(m).expect("dimension");
        S12 { m, comps: vec![Polynomial::zero(m); m * npairs(m)] }
    }

    /// Components in the flat order of [`Self::flat_index`].
    pub fn from_components(m: usize, comps: Vec<Polynomial>) -> Result<Self> {
        check_components(m, &comps, m * npairs(m))?;
        Ok(S12 { m, comps })
    }

    /// `c x^α` in the `S^k_ij` slot (and its symmetric twin).
    pub fn monomial(m: usize, k: usize, i: usize, j: usize, alpha: Monomial, c: Rational) -> Self {
        let mut s = Self::zero(m);
        s.comps[Self::flat_index(m, k, i, j)] = Polynomial::monomial(m, alpha, c);
        s
    }

    pub fn flat_index(m: usize, k: usize, i: usize, j: usize) -> usize {
        k * npairs(m) + pair_index(m, i, j)
    }

    /// `(k, i, j)` with `i ≤ j` for a flat index.
    pub fn slot(m: usize, flat: usize) -> (usize, usize, usize) {
        let (i, j) = pairs(m)[flat % npairs(m)];
        (flat / npairs(m), i, j)
    }

    /// Every `x^α dx^i ∨ dx^j ⊗ ∂_k` with `|α| = d`.
    pub fn basis_of_degree(m: usize, d: u32) -> Vec<S12> {
        let mons = super::polynomial::monomials_of_degree(m, d);
        let mut out = Vec::new();
        for flat in 0..m * npairs(m) {
            let (k, i, j) = Self::slot(m, flat);
            for a in &mons {
                out.push(Self::monomial(m, k, i, j, a.clone(), Rational::one()));
            }
        }
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Polynomial {
        &self.comps[Self::flat_index(self.m, k, i, j)]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn add_to(&mut self, k: usize, i: usize, j: usize, p: &Polynomial) {
        let f = Self::flat_index(self.m, k, i, j);
        self.comps[f] = self.comps[f].add(p);
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Polynomial::degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        S12 { m: self.m, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        S12 { m: self.m, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        S12 { m: self.m, comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul_fn(&self, f: &Polynomial) -> Self {
        S12 { m: self.m, comps: self.comps.iter().map(|a| a.mul(f)).collect() }
    }

    /// `(L_X S)^k_ij = X^u ∂_u S^k_ij + S^k_uj ∂_i X^u + S^k_iu ∂_j X^u − S^u_ij ∂_u X^k`
    pub fn lie_derivative(&self, x: &VectorField) -> Self {
        assert_eq!(self.m, x.m, "dimension mismatch");
        let m = self.m;
        let jac = x.jacobian();
        let mut out = S12::zero(m);
        for flat in 0..m * npairs(m) {
            let (k, i, j) = Self::slot(m, flat);
            let mut acc = x.apply(&self.comps[flat]);
            for u in 0..m {
                let (a, b, c) = (self.get(k, u, j), self.get(k, i, u), self.get(u, i, j));
                if !a.is_zero() && !jac[u][i].is_zero() {
                    acc = acc.add(&a.mul(&jac[u][i]));
                }
                if !b.is_zero() && !jac[u][j].is_zero() {
                    acc = acc.add(&b.mul(&jac[u][j]));
                }
                if !c.is_zero() && !jac[k][u].is_zero() {
                    acc = acc.sub(&c.mul(&jac[k][u]));
                }
            }
            out.comps[flat] = acc;
        }
        out
    }

    /// `tr(S)_i = Σ_j S^j_ij`
    pub fn trace(&self) -> OneForm {
        let m = self.m;
        let comps = (0..m)
            .map(|i| {
                let mut acc = Polynomial::zero(m);
                for j in 0..m {
                    acc = acc.add(self.get(j, i, j));
                }
                acc
            })
            .collect();
        OneForm { m, comps }
    }

    /// `pr(S) = S − 1/(m+1) tr(S)·1`
    pub fn pr(&self) -> Self {
        let c = Rational::from_frac(1, self.m as i64 + 1);
        self.sub(&self.trace().alpha_one().scale(&c))
    }

    /// `tr(S)·1`
    pub fn tr_one(&self) -> Self {
        self.trace().alpha_one()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut doc = FieldDoc::new(self.m);
        for (flat, c) in self.comps.iter().enumerate() {
            let (k, i, j) = Self::slot(self.m, flat);
            doc.push(vec![k], vec![i, j], c);
        }
        doc.to_value()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc = FieldDoc::from_value(v)?;
        check_m(doc.m)?;
        let mut s = S12::zero(doc.m);
        for (up, lo, e, c) in doc.entries()? {
            match (up.as_slice(), lo.as_slice()) {
                ([k], [i, j]) if *k < doc.m && *i < doc.m && *j < doc.m => {
                    s.add_to(*k, *i, *j, &Polynomial::monomial(doc.m, e, c))
                }
                _ => return Err(Error::Parse(format!("bad (1,2)-tensor entry {up:?} {lo:?}"))),
            }
        }
        Ok(s)
    }
}

/// Torsion-free linear connection, by its Christoffel symbols `Γ^k_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Connection {
    gamma: S12,
}

impl Connection {
    /// `∇⁰`, all `Γ = 0`.
    pub fn flat(m: usize) -> Self {
        Connection { gamma: S12::zero(m) }
    }

    /// Symmetry of `Γ` in `(i, j)` holds by storage.
    pub fn from_christoffel(gamma: S12) -> Self {
        Connection { gamma }
    }

    pub fn m(&self) -> usize {
        self.gamma.m
    }

    pub fn christoffel(&self) -> &S12 {
        &self.gamma
    }

    /// `∇ + S`
    pub fn translate(&self, s: &S12) -> Self {
        Connection { gamma: self.gamma.add(s) }
    }

    /// The tensor `self − other`.
    pub fn difference(&self, other: &Self) -> S12 {
        self.gamma.sub(&other.gamma)
    }

    /// `(∇_Y Z)^k = Y^i ∂_i Z^k + Γ^k_ij Y^i Z^j`
    pub fn covariant_derivative(&self, y: &VectorField, z: &VectorField) -> VectorField {
        let m = self.m();
        let comps = (0..m)
            .map(|k| {
                let mut acc = y.apply(&z.comps[k]);
                for i in 0..m {
                    for j in 0..m {
                        let g = self.gamma.get(k, i, j);
                        if !g.is_zero() {
                            acc = acc.add(&g.mul(&y.comps[i]).mul(&z.comps[j]));
                        }
                    }
                }
                acc
            })
            .collect();
        VectorField { m, comps }
    }

    /// `L_X∇` by the coordinate formula
    /// `∂_ij X^k + ∂_i X^u Γ^k_uj + ∂_j X^u Γ^k_iu − ∂_u X^k Γ^u_ij + X^u ∂_u Γ^k_ij`.
    pub fn lie_derivative(&self, x: &VectorField) -> S12 {
        let m = self.m();
        assert_eq!(m, x.m, "dimension mismatch");
        let jac = x.jacobian();
        let mut out = S12::zero(m);
        for flat in 0..m * npairs(m) {
            let (k, i, j) = S12::slot(m, flat);
            let mut acc = x.comps[k].deriv(i).deriv(j);
            acc = acc.add(&x.apply(self.gamma.get(k, i, j)));
            for u in 0..m {
                acc = acc.add(&jac[u][i].mul(self.gamma.get(k, u, j)));
                acc = acc.add(&jac[u][j].mul(self.gamma.get(k, i, u)));
                acc = acc.sub(&jac[k][u].mul(self.gamma.get(u, i, j)));
            }
            out.comps[flat] = acc;
        }
        out
    }

    /// `L_X∇(∂_i, ∂_j) = [X, ∇_{∂_i}∂_j] − ∇_{[X,∂_i]}∂_j − ∇_{∂_i}[X, ∂_j]`.
    pub fn lie_derivative_by_brackets(&self, x: &VectorField) -> S12 {
        let m = self.m();
        let mut out = S12::zero(m);
        for (i, j) in pairs(m) {
            let (di, dj) = (VectorField::partial(m, i), VectorField::partial(m, j));
            let v = bracket(x, &self.covariant_derivative(&di, &dj))
                .expect("same m")
                .sub(&self.covariant_derivative(&bracket(x, &di).expect("same m"), &dj))
                .sub(&self.covariant_derivative(&di, &bracket(x, &dj).expect("same m")));
            for k in 0..m {
                out.add_to(k, i, j, &v.comps[k]);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.gamma.to_json()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        Ok(Connection { gamma: S12::from_json(v)? })
    }
}

/// `L_X∇`
pub fn lie_derivative_connection(x: &VectorField, nabla: &Connection) -> S12 {
    nabla.lie_derivative(x)
}

/// `L^pr_∇(X) = pr(L_X∇)` viewed in `S¹₂`.
pub fn l_pr(x: &VectorField, nabla: &Connection) -> S12 {
    nabla.lie_derivative(x).pr()
}

/// `L^tr_∇(X) = tr(L_X∇)·1`.
pub fn l_tr(x: &VectorField, nabla: &Connection) -> S12 {
    nabla.lie_derivative(x).tr_one()
}

/// Symmetric contravariant field `P^{i_1…i_p} ∂_{i_1} ∨ … ∨ ∂_{i_p}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymContravariant {
    m: usize,
    p: usize,
    /// index `multiset_rank(m, I)`
    comps: Vec<Polynomial>,
}

impl SymContravariant {
    /// Panics if `m < 2`.
    pub fn zero(m: usize, p: usize) -> Self {
        check_m(m).expect("dimension");
        SymContravariant { m, p, comps: vec![Polynomial::zero(m); multiset_count(m, p)] }
    }

    /// `c x^α` in the `P^I` slot, for `I` in any order.
    pub fn monomial(m: usize, upper: &[usize], alpha: Monomial, c: Rational) -> Self {
        let mut s = Self::zero(m, upper.len());
        s.add_to(upper, &Polynomial::monomial(m, alpha, c));
        s
    }

    pub fn from_vector_field(x: &VectorField) -> Self {
        SymContravariant { m: x.m, p: 1, comps: x.comps.clone() }
    }

    /// Every `x^α ∂_I` with `|α| = d`.
    pub fn basis_of_degree(m: usize, p: usize, d: u32) -> Vec<Self> {
        let mons = super::polynomial::monomials_of_degree(m, d);
        let mut out = Vec::new();
        for upper in multisets(m, p) {
            for a in &mons {
                out.push(Self::monomial(m, &upper, a.clone(), Rational::one()));
            }
        }
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree_p(&self) -> usize {
        self.p
    }

    pub fn get(&self, upper: &[usize]) -> &Polynomial {
        let mut i = upper.to_vec();
        i.sort_unstable();
        &self.comps[multiset_rank(self.m, &i)]
    }

    pub fn add_to(&mut self, upper: &[usize], q: &Polynomial) {
        let mut i = upper.to_vec();
        i.sort_unstable();
        let r = multiset_rank(self.m, &i);
        self.comps[r] = self.comps[r].add(q);
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        SymContravariant { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SymContravariant { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SymContravariant { comps: self.comps.iter().map(|a| a.scale(c)).collect(), ..self.clone() }
    }

    /// `(L_X P)^I = X^u ∂_u P^I − Σ_s P^{I[i_s → u]} ∂_u X^{i_s}`
    pub fn lie_derivative(&self, x: &VectorField) -> Self {
        assert_eq!(self.m, x.m, "dimension mismatch");
        let jac = x.jacobian();
        let all = multisets(self.m, self.p);
        let comps = all
            .iter()
            .enumerate()
            .map(|(r, upper)| {
                let mut acc = x.apply(&self.comps[r]);
                let mut idx = upper.clone();
                for s in 0..self.p {
                    for u in 0..self.m {
                        idx[s] = u;
                        let q = self.get(&idx);
                        if !q.is_zero() && !jac[upper[s]][u].is_zero() {
                            acc = acc.sub(&q.mul(&jac[upper[s]][u]));
                        }
                    }
                    idx[s] = upper[s];
                }
                acc
            })
            .collect();
        SymContravariant { m: self.m, p: self.p, comps }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut doc = FieldDoc::new(self.m);
        for (upper, c) in multisets(self.m, self.p).into_iter().zip(&self.comps) {
            doc.push(upper, vec![], c);
        }
        doc.to_value()
    }

    pub fn from_json(v: &serde_json::Value, p: usize) -> Result<Self> {
        let doc = FieldDoc::from_value(v)?;
        check_m(doc.m)?;
        let mut s = Self::zero(doc.m, p);
        for (up, lo, e, c) in doc.entries()? {
            if up.len() != p || !lo.is_empty() || up.iter().any(|&i| i >= doc.m) {
                return Err(Error::Parse(format!("bad contravariant entry {up:?} {lo:?}")));
            }
            s.add_to(&up, &Polynomial::monomial(doc.m, e, c));
        }
        Ok(s)
    }
}

/// `(⁰S(P))^k = Σ_ij S^k_ij P^{ij}`
pub fn contraction_zero(s: &S12, p: &SymContravariant) -> SymContravariant {
    assert_eq!(p.p, 2, "contraction takes a field of degree 2");
    assert_eq!(s.m, p.m, "dimension mismatch");
    let m = s.m;
    let mut out = SymContravariant::zero(m, 1);
    for k in 0..m {
        let mut acc = Polynomial::zero(m);
        for i in 0..m {
            for j in 0..m {
                let (a, b) = (s.get(k, i, j), p.get(&[i, j]));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
        }
        out.comps[k] = acc;
    }
    out
}

/// `D_{∇⁰}(P)^i = Σ_j ∂_j P^{ji}`
pub fn d_nabla0(p: &SymContravariant) -> SymContravariant {
    assert_eq!(p.p, 2, "D takes a field of degree 2");
    let m = p.m;
    let mut out = SymContravariant::zero(m, 1);
    for i in 0..m {
        let mut acc = Polynomial::zero(m);
        for j in 0..m {
            acc = acc.add(&p.get(&[j, i]).deriv(j));
        }
        out.comps[i] = acc;
    }
    out
}

/// Whether `∇′ − ∇ = α·1` for some 1-form `α`, and that `α = tr(∇′ − ∇)/(m+1)`.
pub fn projectively_equivalent(a: &Connection, b: &Connection) -> Result<Option<OneForm>> {
    if a.m() != b.m() {
        return Err(Error::Dimension("connections on different dimensions".into()));
    }
    let d = b.difference(a);
    if !d.pr().is_zero() {
        return Ok(None);
    }
    Ok(Some(d.trace().scale(&Rational::from_frac(1, a.m() as i64 + 1))))
}

/// `(upper, lower, exponent, "n/d")`
type DocEntry = (Vec<usize>, Vec<usize>, Vec<u32>, String);

#[derive(Serialize, Deserialize)]
struct FieldDoc {
    m: usize,
    entries: Vec<DocEntry>,
}

impl FieldDoc {
    fn new(m: usize) -> Self {
        FieldDoc { m, entries: Vec::new() }
    }

    fn push(&mut self, upper: Vec<usize>, lower: Vec<usize>, p: &Polynomial) {
        for (e, c) in p.terms() {
            self.entries.push((upper.clone(), lower.clone(), e.clone(), format_rational(c)));
        }
    }

    fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    fn from_value(v: &serde_json::Value) -> Result<Self> {
        let doc: FieldDoc = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        check_m(doc.m).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(doc)
    }

    #[allow(clippy::type_complexity)]
    fn entries(&self) -> Result<Vec<(Vec<usize>, Vec<usize>, Monomial, Rational)>> {
        let m = self.m;
        self.entries
            .iter()
            .map(|(u, l, e, c)| {
                if e.len() != m {
                    return Err(Error::Parse(format!("exponent {e:?} is not in {m} variables")));
                }
                Ok((u.clone(), l.clone(), e.clone(), parse_rational(c)?))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::tensor::polynomial::monomials_up_to;

    fn q(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn bracket_examples() {
        let m = 2;
        let d1 = VectorField::partial(m, 0);
        let x1d1 = VectorField::monomial(m, 0, vec![1, 0], q(1));
        assert_eq!(bracket(&d1, &x1d1).unwrap(), d1);
        assert!(bracket(&d1, &VectorField::partial(m, 1)).unwrap().is_zero());
        let x1d2 = VectorField::monomial(m, 1, vec![1, 0], q(1));
        let x2d1 = VectorField::monomial(m, 0, vec![0, 1], q(1));
        let x2d2 = VectorField::monomial(m, 1, vec![0, 1], q(1));
        assert_eq!(bracket(&x1d2, &x2d1).unwrap(), x1d1.sub(&x2d2));
        assert!(bracket(&d1, &VectorField::partial(3, 0)).is_err());
        assert!(VectorField::new(1, vec![Polynomial::zero(1)]).is_err());
    }

    #[test]
    fn lie_derivative_examples() {
        let m = 2;
        let s = S12::monomial(m, 0, 0, 1, vec![0, 0], q(1));
        assert!(s.lie_derivative(&VectorField::partial(m, 0)).is_zero());
        let e = VectorField::euler(m);
        for d in 0..3 {
            for b in S12::basis_of_degree(m, d) {
                assert_eq!(b.lie_derivative(&e), b.scale(&q(d as i64 + 1)));
            }
        }
    }

    #[test]
    fn trace_examples() {
        let m = 2;
        let a = OneForm::monomial(m, 0, vec![0, 1], q(1));
        assert_eq!(a.alpha_one().trace(), a.scale(&q(3)));
        assert!(a.alpha_one().pr().is_zero());
        let s = S12::monomial(m, 0, 0, 0, vec![0, 0], q(1));
        let dx1 = OneForm::monomial(m, 0, vec![0, 0], q(1));
        assert_eq!(s.trace(), dx1);
        assert_eq!(s.pr(), s.sub(&dx1.alpha_one().scale(&rat(1, 3))));
        assert!(s.pr().trace().is_zero());
    }

    #[test]
    fn connection_examples() {
        let m = 2;
        let flat = Connection::flat(m);
        let x = VectorField::monomial(m, 1, vec![2, 1], q(1));
        let l = flat.lie_derivative(&x);
        for flat_i in 0..m * npairs(m) {
            let (k, i, j) = S12::slot(m, flat_i);
            assert_eq!(l.get(k, i, j), &x.component(k).deriv(i).deriv(j));
        }
        // x¹E gives dx¹·1 and a trace-free part 0
        let x1e = VectorField::euler(m).mul_fn(&Polynomial::var(m, 0));
        let l = flat.lie_derivative(&x1e);
        assert_eq!(l, OneForm::monomial(m, 0, vec![0, 0], q(1)).alpha_one());
        assert!(l.pr().is_zero());
        assert!(flat.lie_derivative(&VectorField::monomial(m, 0, vec![1, 0], q(3))).is_zero());
    }

    #[test]
    fn connection_formulas_agree() {
        let m = 2;
        let mut g = S12::zero(m);
        g.add_to(0, 0, 1, &Polynomial::var(m, 1));
        g.add_to(1, 1, 1, &Polynomial::monomial(m, vec![2, 0], rat(-2, 3)));
        let nabla = Connection::from_christoffel(g);
        for a in monomials_up_to(m, 3) {
            for i in 0..m {
                let x = VectorField::monomial(m, i, a.clone(), q(1));
                assert_eq!(nabla.lie_derivative(&x), nabla.lie_derivative_by_brackets(&x));
            }
        }
    }

    #[test]
    fn contraction_and_divergence_examples() {
        let m = 2;
        let a = OneForm::monomial(m, 1, vec![1, 0], q(1));
        let p = SymContravariant::monomial(m, &[0, 1], vec![0, 1], q(1));
        let c = contraction_zero(&a.alpha_one(), &p);
        for k in 0..m {
            let mut expect = Polynomial::zero(m);
            for i in 0..m {
                expect = expect.add(&a.component(i).mul(p.get(&[i, k])).scale(&q(2)));
            }
            assert_eq!(c.get(&[k]), &expect);
        }
        assert!(contraction_zero(&S12::zero(m), &p).is_zero());
        assert!(d_nabla0(&SymContravariant::monomial(m, &[0, 0], vec![0, 0], q(5))).is_zero());
        let d = d_nabla0(&SymContravariant::monomial(m, &[0, 0], vec![1, 0], q(1)));
        assert_eq!(d.get(&[0]), &Polynomial::one(m));
        assert_eq!(VectorField::euler(2).divergence(), Polynomial::constant(2, q(2)));
    }

    #[test]
    fn projective_equivalence_examples() {
        let m = 2;
        let flat = Connection::flat(m);
        assert!(projectively_equivalent(&flat, &flat).unwrap().is_some());
        let a = OneForm::monomial(m, 0, vec![0, 1], rat(2, 5));
        let moved = flat.translate(&a.alpha_one());
        assert_eq!(projectively_equivalent(&flat, &moved).unwrap().unwrap(), a);
        let tf = S12::monomial(m, 0, 1, 1, vec![0, 0], q(1));
        assert!(tf.trace().is_zero());
        assert!(projectively_equivalent(&flat, &flat.translate(&tf)).unwrap().is_none());
    }

    #[test]
    fn json_round_trips() {
        let m = 3;
        let s = S12::monomial(m, 2, 0, 1, vec![1, 0, 2], rat(-3, 7));
        assert_eq!(S12::from_json(&s.to_json()).unwrap(), s);
        let x = VectorField::euler(m);
        assert_eq!(VectorField::from_json(&x.to_json()).unwrap(), x);
        let p = SymContravariant::monomial(m, &[2, 1], vec![0, 1, 0], q(4));
        assert_eq!(SymContravariant::from_json(&p.to_json(), 2).unwrap(), p);
        let a = OneForm::monomial(m, 1, vec![0, 0, 3], q(1));
        assert_eq!(OneForm::from_json(&a.to_json()).unwrap(), a);
        assert!(S12::from_json(&serde_json::json!({"m": 2, "entries": [[[5], [0, 0], [0, 0], "1/1"]]})).is_err());
    }
}
