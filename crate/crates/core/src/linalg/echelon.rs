use std::collections::BTreeMap;

use super::sparse::{SparseMatrix, SparseVec};
use crate::scalar::Scalar;

/// Incremental row echelon form over a field.
///
/// Each stored row has leading coefficient 1 at a column no other row leads
/// at. With tracking enabled, every stored row is also kept as a combination
/// of the inserted vectors, which is what `solve` and dependency extraction use.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    ncols: usize,
    rows: Vec<SparseVec<S>>,
    pivots: BTreeMap<usize, usize>,
    combos: Option<Vec<SparseVec<S>>>,
    inserted: usize,
}

/// Outcome of inserting one vector.
#[derive(Clone, Debug, PartialEq)]
pub enum Insert<S> {
    /// New pivot row; carries its pivot column.
    Independent(usize),
    /// Vector was in the span. With tracking, a relation `Σ r_k v_k = 0` over
    /// the inserted vectors with coefficient 1 on the new one.
    Dependent(Option<SparseVec<S>>),
}

impl<S: Scalar> Echelon<S> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: BTreeMap::new(), combos: None, inserted: 0 }
    }

    pub fn with_tracking(ncols: usize) -> Self {
        Echelon { combos: Some(Vec::new()), ..Self::new(ncols) }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn rows(&self) -> &[SparseVec<S>] {
        &self.rows
    }

    /// Reduces `v` against the stored rows. Returns the residual and the
    /// coefficients `c_r` with `v = residual + Σ c_r row_r`.
    pub fn reduce(&self, v: &SparseVec<S>) -> (SparseVec<S>, Vec<(usize, S)>) {
        let mut cur = v.clone();
        let mut used = Vec::new();
        let mut from = 0usize;
        loop {
            // pivot rows only touch columns at or after their pivot
            let hit = cur
                .iter()
                .filter(|(i, _)| *i >= from)
                .find_map(|(i, c)| self.pivots.get(&i).map(|&r| (i, r, c.clone())));
            let Some((col, r, c)) = hit else { break };
            cur = cur.add_scaled(&self.rows[r], &-c.clone());
            used.push((r, c));
            from = col + 1;
        }
        (cur, used)
    }

    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        self.reduce(v).0.is_zero()
    }

    pub fn insert(&mut self, v: &SparseVec<S>) -> Insert<S> {
        debug_assert!(v.max_index().is_none_or(|i| i < self.ncols));
        let k = self.inserted;
        self.inserted += 1;
        let (residual, used) = self.reduce(v);
        let combo = self.combos.as_ref().map(|combos| {
            let mut acc = SparseVec::unit(k);
            for (r, c) in &used {
                acc = acc.add_scaled(&combos[*r], &-c.clone());
            }
            acc
        });
        match residual.leading() {
            None => Insert::Dependent(combo),
            Some((col, lead)) => {
                let inv = lead.inv();
                let row = residual.scale(&inv);
                self.pivots.insert(col, self.rows.len());
                self.rows.push(row);
                if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo) {
                    combos.push(c.scale(&inv));
                }
                Insert::Independent(col)
            }
        }
    }

    /// Coefficients `x` over inserted vectors with `Σ x_k v_k = b`, if `b` is
    /// in the span. Requires tracking.
    pub fn express(&self, b: &SparseVec<S>) -> Option<SparseVec<S>> {
        let combos = self.combos.as_ref().expect("express requires a tracking echelon");
        let (residual, used) = self.reduce(b);
        if !residual.is_zero() {
            return None;
        }
        let mut x = SparseVec::zero();
        for (r, c) in used {
            x = x.add_scaled(&combos[r], &c);
        }
        Some(x)
    }

    /// Back-substitutes so every pivot column is zero in all other rows, and
    /// orders rows by pivot column.
    pub fn into_rref(mut self) -> Vec<SparseVec<S>> {
        let order: Vec<(usize, usize)> = self.pivots.iter().map(|(&c, &r)| (c, r)).collect();
        for &(col, r) in order.iter().rev() {
            let pivot_row = self.rows[r].clone();
            for &(_, other) in order.iter() {
                if other == r {
                    continue;
                }
                let c = self.rows[other].get(col);
                if !c.is_zero() {
                    self.rows[other] = self.rows[other].add_scaled(&pivot_row, &-c);
                }
            }
        }
        order.into_iter().map(|(_, r)| std::mem::take(&mut self.rows[r])).collect()
    }
}

/// Row echelon of all rows of `a`.
pub fn row_echelon<S: Scalar>(a: &SparseMatrix<S>) -> Echelon<S> {
    let mut e = Echelon::new(a.ncols());
    for row in a.rows_iter() {
        e.insert(row);
    }
    e
}

pub fn rank<S: Scalar>(a: &SparseMatrix<S>) -> usize {
    // the shorter side bounds the work
    if a.nrows() <= a.ncols() {
        row_echelon(a).rank()
    } else {
        row_echelon(&a.transpose()).rank()
    }
}

/// Basis of `{x : a x = 0}` read off the reduced row echelon form, one vector
/// per free column in increasing column order.
pub fn kernel_vectors<S: Scalar>(a: &SparseMatrix<S>) -> Vec<SparseVec<S>> {
    let rref = row_echelon(a).into_rref();
    let mut is_pivot = vec![false; a.ncols()];
    let mut pivot_rows = Vec::with_capacity(rref.len());
    for row in &rref {
        let (c, _) = row.leading().expect("rref rows are nonzero");
        is_pivot[c] = true;
        pivot_rows.push(c);
    }
    // column-major view of the non-pivot part
    let mut free_entries: BTreeMap<usize, Vec<(usize, S)>> = BTreeMap::new();
    for (row, &pc) in rref.iter().zip(&pivot_rows) {
        for (c, v) in row.iter() {
            if !is_pivot[c] {
                free_entries.entry(c).or_default().push((pc, -v.clone()));
            }
        }
    }
    (0..a.ncols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut pairs = free_entries.remove(&f).unwrap_or_default();
            pairs.push((f, S::one()));
            SparseVec::from_pairs(pairs)
        })
        .collect()
}

/// Reduced echelon basis of the column space of `a`.
pub fn image_vectors<S: Scalar>(a: &SparseMatrix<S>) -> Vec<SparseVec<S>> {
    let mut e = Echelon::new(a.nrows());
    for col in a.columns() {
        e.insert(&col);
    }
    e.into_rref()
}

/// Some `x` with `a x = b`, or `None`.
pub fn solve<S: Scalar>(a: &SparseMatrix<S>, b: &SparseVec<S>) -> Option<SparseVec<S>> {
    let mut e = Echelon::with_tracking(a.nrows());
    for col in a.columns() {
        e.insert(&col);
    }
    e.express(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn m(rows: &[&[i64]]) -> SparseMatrix<Rational> {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect::<Vec<_>>())
    }

    fn v(xs: &[i64]) -> SparseVec<Rational> {
        SparseVec::from_dense(&xs.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel_vectors(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(k[0].get(0) * rat(-1, 1), k[0].get(1) * rat(2, 1));
    }

    #[test]
    fn kernel_trivial_cases() {
        assert_eq!(kernel_vectors(&m(&[&[0, 0], &[0, 0]])), vec![v(&[1, 0]), v(&[0, 1])]);
        assert!(kernel_vectors(&SparseMatrix::<Rational>::identity(3)).is_empty());
    }

    #[test]
    fn image_of_rank_one() {
        assert_eq!(image_vectors(&m(&[&[1, 2], &[2, 4]])), vec![v(&[1, 2])]);
        assert!(image_vectors(&m(&[&[0, 0], &[0, 0]])).is_empty());
        assert_eq!(image_vectors(&SparseMatrix::<Rational>::identity(3)).len(), 3);
    }

    #[test]
    fn solve_cases() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let x = solve(&a, &v(&[1, 2])).unwrap();
        assert_eq!(a.mul_vec(&x), v(&[1, 2]));
        assert!(solve(&a, &v(&[1, 0])).is_none());
        assert!(solve(&m(&[&[0, 0], &[0, 0]]), &v(&[0, 1])).is_none());
        let id = SparseMatrix::<Rational>::identity(3);
        assert_eq!(solve(&id, &v(&[3, 0, -1])).unwrap(), v(&[3, 0, -1]));
    }

    #[test]
    fn dependency_combination_is_a_relation() {
        let mut e = Echelon::with_tracking(3);
        let vs = [v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 2, 1])];
        assert!(matches!(e.insert(&vs[0]), Insert::Independent(0)));
        assert!(matches!(e.insert(&vs[1]), Insert::Independent(1)));
        let Insert::Dependent(Some(rel)) = e.insert(&vs[2]) else { panic!() };
        let mut acc = SparseVec::zero();
        for (k, c) in rel.iter() {
            acc = acc.add_scaled(&vs[k], c);
        }
        assert!(acc.is_zero());
        assert_eq!(rel.get(2), rat(1, 1));
    }

    #[test]
    fn rref_is_reduced() {
        let r = row_echelon(&m(&[&[1, 2, 3], &[2, 5, 7], &[0, 1, 1]])).into_rref();
        assert_eq!(r, vec![v(&[1, 0, 1]), v(&[0, 1, 1])]);
    }
}
