use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<S> {
    entries: Vec<(usize, S)>,
}

impl<S: Scalar> Default for SparseVec<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> SparseVec<S> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, S::one())] }
    }

    /// Builds from arbitrary `(index, value)` pairs; duplicates are summed.
    pub fn from_pairs<I: IntoIterator<Item = (usize, S)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            match acc.get_mut(&i) {
                Some(slot) => *slot += &v,
                None => {
                    acc.insert(i, v);
                }
            }
        }
        Self::from_map(acc)
    }

    pub(crate) fn from_map(map: BTreeMap<usize, S>) -> Self {
        SparseVec { entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    /// Caller guarantees sorted distinct indices and nonzero values.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, S)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[S]) -> Self {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<S> {
        let mut out = vec![S::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> S {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn entries(&self) -> &[(usize, S)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, S)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<(usize, &S)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v.mul_ref(c))).collect() }
    }

    pub fn neg(&self) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, -v.clone())).collect() }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, other: &Self, c: &S) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.mul_ref(c)));
                        b.next();
                    } else {
                        let v = x.add_ref(&y.mul_ref(c));
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.mul_ref(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-S::one())
    }

    pub fn dot(&self, other: &Self) -> S {
        let mut acc = S::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, x) = &self.entries[a];
            let (j, y) = &other.entries[b];
            if i < j {
                a += 1;
            } else if j < i {
                b += 1;
            } else {
                acc += &x.mul_ref(y);
                a += 1;
                b += 1;
            }
        }
        acc
    }

    pub fn dot_dense(&self, dense: &[S]) -> S {
        let mut acc = S::zero();
        for (i, v) in &self.entries {
            acc += &v.mul_ref(&dense[*i]);
        }
        acc
    }

    /// Reindexes every entry through `f`.
    pub fn map_indices(&self, mut f: impl FnMut(usize) -> usize) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }

    /// Adds `offset` to every index.
    pub fn shifted(&self, offset: usize) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect() }
    }

    /// Entries with index in `range`, reindexed from `range.start`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| range.contains(i))
                .map(|(i, v)| (i - range.start, v.clone()))
                .collect(),
        }
    }
}

/// Sparse matrix stored row by row.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<S>>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![SparseVec::zero(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, data: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn scalar(n: usize, c: &S) -> Self {
        Self::identity(n).scale(c)
    }

    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, S)>>(
        rows: usize,
        cols: usize,
        triplets: I,
    ) -> Result<Self> {
        let mut per_row: Vec<Vec<(usize, S)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
            per_row[r].push((c, v));
        }
        Ok(SparseMatrix { rows, cols, data: per_row.into_iter().map(SparseVec::from_pairs).collect() })
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec<S>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|i| i < cols)));
        SparseMatrix { rows: rows.len(), cols, data: rows }
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec<S>]) -> Self {
        let mut per_row: Vec<Vec<(usize, S)>> = vec![Vec::new(); rows];
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col.iter() {
                per_row[r].push((c, v.clone()));
            }
        }
        SparseMatrix {
            rows,
            cols: columns.len(),
            data: per_row.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<S>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        SparseMatrix { rows: rows.len(), cols, data: rows.iter().map(|r| SparseVec::from_dense(r)).collect() }
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec<S> {
        &self.data[r]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &SparseVec<S>> + '_ {
        self.data.iter()
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        self.data[r].get(c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &S)> + '_ {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c, v)))
    }

    pub fn is_diagonal(&self) -> bool {
        self.triplets().all(|(r, c, _)| r == c)
    }

    pub fn transpose(&self) -> Self {
        let mut per_col: Vec<Vec<(usize, S)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                per_col[c].push((r, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: per_col.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    pub fn columns(&self) -> Vec<SparseVec<S>> {
        self.transpose().data
    }

    pub fn mul_vec(&self, v: &SparseVec<S>) -> SparseVec<S> {
        debug_assert!(v.max_index().is_none_or(|i| i < self.cols));
        let dense = v.to_dense(self.cols);
        SparseVec::from_sorted_unchecked(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let x = row.dot_dense(&dense);
                    (!x.is_zero()).then_some((r, x))
                })
                .collect(),
        )
    }

    /// `v^T A`, i.e. the combination of rows with coefficients `v`.
    pub fn left_mul_vec(&self, v: &SparseVec<S>) -> SparseVec<S> {
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for (r, c) in v.iter() {
            for (j, a) in self.data[r].iter() {
                let t = a.mul_ref(c);
                match acc.get_mut(&j) {
                    Some(slot) => *slot += &t,
                    None => {
                        acc.insert(j, t);
                    }
                }
            }
        }
        SparseVec::from_map(acc)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data: self.data.iter().map(|row| other.left_mul_vec(row)).collect(),
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    pub fn add_scaled(&self, other: &Self, c: &S) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_scaled(b, c)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &S::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &-S::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        SparseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.scale(c)).collect() }
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let mut data = a.data.clone();
        data.extend(b.data.iter().map(|r| r.shifted(a.cols)));
        SparseMatrix { rows: a.rows + b.rows, cols: a.cols + b.cols, data }
    }

    pub fn vstack(blocks: &[&Self]) -> Result<Self> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Dimension("vstack with differing column counts".into()));
        }
        let data: Vec<_> = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        Ok(SparseMatrix { rows: data.len(), cols, data })
    }

    pub fn hstack(blocks: &[&Self]) -> Result<Self> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Dimension("hstack with differing row counts".into()));
        }
        let mut data = vec![SparseVec::zero(); rows];
        let mut offset = 0;
        for b in blocks {
            for (r, row) in b.data.iter().enumerate() {
                let mut entries = std::mem::take(&mut data[r]).into_entries();
                entries.extend(row.iter().map(|(c, v)| (c + offset, v.clone())));
                data[r] = SparseVec::from_sorted_unchecked(entries);
            }
            offset += b.cols;
        }
        Ok(SparseMatrix { rows, cols: offset, data })
    }

    /// Sub-block with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            col_pos[c] = k;
        }
        let data = rows
            .iter()
            .map(|&r| {
                SparseVec::from_pairs(
                    self.data[r]
                        .iter()
                        .filter(|(c, _)| col_pos[*c] != usize::MAX)
                        .map(|(c, v)| (col_pos[c], v.clone())),
                )
            })
            .collect();
        SparseMatrix { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn map_scalars<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> SparseMatrix<T> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| SparseVec::from_pairs(r.iter().map(|(c, v)| (c, f(v))))).collect(),
        }
    }
}
