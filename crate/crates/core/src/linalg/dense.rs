//! Independent rank computations used to cross-check the sparse eliminator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::echelon::rank;
use super::sparse::SparseMatrix;
use crate::scalar::{Fp, Rational};

/// Rank by fraction-free Bareiss elimination on the integer matrix obtained by
/// clearing denominators row by row. Dense; meant for small matrices.
pub fn bareiss_rank(a: &SparseMatrix<Rational>) -> usize {
    let mut m: Vec<Vec<BigInt>> = a
        .to_dense()
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect();
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                // exact by Sylvester's identity
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of the reduction mod `2^31 - 1`, or `None` when some denominator is
/// divisible by the modulus. Never larger than the rational rank.
pub fn modular_rank(a: &SparseMatrix<Rational>) -> Option<usize> {
    let mut ok = true;
    let reduced = a.map_scalars(|q| match Fp::from_rational(q) {
        Some(x) => x,
        None => {
            ok = false;
            Fp::new(0)
        }
    });
    ok.then(|| rank(&reduced))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn bareiss_agrees_on_small_cases() {
        let a = SparseMatrix::from_dense(&[
            vec![rat(1, 2), rat(1, 3), rat(0, 1)],
            vec![rat(1, 1), rat(2, 3), rat(0, 1)],
            vec![rat(0, 1), rat(5, 1), rat(-1, 7)],
        ]);
        assert_eq!(bareiss_rank(&a), 2);
        assert_eq!(rank(&a), 2);
        assert_eq!(modular_rank(&a), Some(2));
        assert_eq!(bareiss_rank(&SparseMatrix::<Rational>::zeros(3, 2)), 0);
        assert_eq!(bareiss_rank(&SparseMatrix::<Rational>::identity(4)), 4);
    }
}
