//! Rational eigenvalues and simultaneous diagonalization of small commuting families.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::echelon::{kernel_vectors, Echelon, Insert};
use super::sparse::{SparseMatrix, SparseVec};
use super::Subspace;
use crate::scalar::Rational;

/// Coefficients `c_0..c_d` (monic, `c_d = 1`) of the minimal polynomial of a square matrix.
pub fn minimal_polynomial(a: &SparseMatrix<Rational>) -> Vec<Rational> {
    let n = a.nrows();
    let vec_of =
        |m: &SparseMatrix<Rational>| SparseVec::from_pairs(m.triplets().map(|(r, c, v)| (r * n + c, v.clone())));
    let mut e = Echelon::with_tracking(n * n);
    let mut power = SparseMatrix::identity(n);
    loop {
        if let Insert::Dependent(Some(rel)) = e.insert(&vec_of(&power)) {
            let d = rel.max_index().expect("relation has the new vector");
            let lead = rel.get(d);
            return (0..=d).map(|k| rel.get(k) / lead.clone()).collect();
        }
        power = power.matmul(a).expect("square");
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn eval_poly(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots with multiplicity, by the rational root theorem.
/// `p` is given as coefficients `c_0..c_d`.
pub fn rational_roots(p: &[Rational]) -> Vec<(Rational, usize)> {
    let mut p: Vec<Rational> = p.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let mut out = Vec::new();
    let mut zero_mult = 0;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((Rational::zero(), zero_mult));
    }
    if p.len() <= 1 {
        return out;
    }
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let (a0, ad) = (&ints[0], ints.last().expect("nonconstant"));
    let mut cands = Vec::new();
    for num in divisors(a0) {
        for den in divisors(ad) {
            let q = Rational::new(num.clone(), den);
            cands.push(q.clone());
            cands.push(-q);
        }
    }
    cands.sort();
    cands.dedup();
    for r in cands {
        let mut mult = 0;
        while p.len() > 1 && eval_poly(&p, &r).is_zero() {
            // synthetic division by (x - r)
            let d = p.len() - 1;
            let mut q = vec![Rational::zero(); d];
            let mut carry = Rational::zero();
            for k in (0..d).rev() {
                carry = &p[k + 1] + &carry * &r;
                q[k] = carry.clone();
            }
            p = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((r, mult));
        }
    }
    out
}

/// Matrix of `a` restricted to the invariant subspace `w`, in `w`'s basis.
fn restrict(a: &SparseMatrix<Rational>, w: &Subspace<Rational>) -> Option<SparseMatrix<Rational>> {
    let cols = w.basis().iter().map(|b| w.coordinates(&a.mul_vec(b))).collect::<Option<Vec<_>>>()?;
    Some(SparseMatrix::from_columns(w.dim(), &cols))
}

/// A joint eigenspace: basis vectors and the eigenvalue of each matrix.
#[derive(Clone, Debug)]
pub struct JointEigenspace {
    pub basis: Vec<SparseVec<Rational>>,
    pub eigenvalues: Vec<Rational>,
}

/// Splits the space into joint eigenspaces of a commuting family, or `None`
/// if the family does not commute or some member is not diagonalizable over
/// the rationals. Eigenspaces are ordered by eigenvalue tuple.
pub fn simultaneous_diagonalization(dim: usize, mats: &[SparseMatrix<Rational>]) -> Option<Vec<JointEigenspace>> {
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if !a.commutator(b).ok()?.is_zero() {
                return None;
            }
        }
    }
    let mut spaces = vec![(Subspace::full(dim), Vec::new())];
    for a in mats {
        let mut next = Vec::new();
        for (w, vals) in spaces {
            if w.dim() == 0 {
                continue;
            }
            let r = restrict(a, &w)?;
            let mp = minimal_polynomial(&r);
            let roots = rational_roots(&mp);
            if roots.iter().any(|(_, m)| *m > 1) || roots.len() + 1 != mp.len() {
                return None;
            }
            for (lambda, _) in roots {
                let shifted = r.sub(&SparseMatrix::scalar(w.dim(), &lambda)).ok()?;
                let vecs = kernel_vectors(&shifted).into_iter().map(|k| {
                    let mut acc = SparseVec::zero();
                    for (i, c) in k.iter() {
                        acc = acc.add_scaled(&w.basis()[i], c);
                    }
                    acc
                });
                let mut v = vals.clone();
                v.push(lambda);
                next.push((Subspace::span(dim, vecs), v));
            }
        }
        spaces = next;
    }
    let mut out: Vec<JointEigenspace> = spaces
        .into_iter()
        .filter(|(w, _)| w.dim() > 0)
        .map(|(w, eigenvalues)| JointEigenspace { basis: w.basis().to_vec(), eigenvalues })
        .collect();
    out.sort_by(|a, b| a.eigenvalues.cmp(&b.eigenvalues));
    Some(out)
}
