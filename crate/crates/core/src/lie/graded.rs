use super::representation::Representation;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A representation together with the integer eigenvalues of a grading
/// element `h` on the algebra and module bases.
///
/// The module may be a weight-window truncation of a larger module: then
/// `window` is set, components leaving the window are dropped from the action,
/// and consistency is only required where it cannot be affected by the cut.
#[derive(Clone, Debug)]
pub struct GradedRepresentation<S> {
    base: Representation<S>,
    grading_element: usize,
    algebra_weights: Vec<i64>,
    module_weights: Vec<i64>,
    window: Option<(i64, i64)>,
    support_floor: Option<i64>,
}

fn integer_diagonal<S: Scalar>(m: &crate::linalg::SparseMatrix<S>, what: &str) -> Result<Vec<i64>> {
    if !m.is_diagonal() {
        return Err(Error::InvalidGrading(format!("{what} is not diagonal")));
    }
    (0..m.nrows())
        .map(|i| {
            m.get(i, i)
                .to_i64_exact()
                .ok_or_else(|| Error::InvalidGrading(format!("{what} has a non-integer eigenvalue at {i}")))
        })
        .collect()
}

impl<S: Scalar> GradedRepresentation<S> {
    /// Reads weights off `ad(h)` and `ρ(h)` and verifies that every `ρ(e_i)`
    /// shifts weights by `wt(e_i)`.
    pub fn weight_decompose(rep: Representation<S>, h: usize) -> Result<Self> {
        Self::build(rep, h, None, None)
    }

    /// As [`Self::weight_decompose`] for a module truncated to module weights
    /// in `window`. `support_floor` is a lower bound for the weights of the
    /// untruncated module, if it has one.
    pub fn truncated(rep: Representation<S>, h: usize, window: (i64, i64), support_floor: Option<i64>) -> Result<Self> {
        Self::build(rep, h, Some(window), support_floor)
    }

    fn build(rep: Representation<S>, h: usize, window: Option<(i64, i64)>, support_floor: Option<i64>) -> Result<Self> {
        let alg = rep.algebra().clone();
        if h >= alg.dim() {
            return Err(Error::InvalidGrading(format!("grading element {h} outside dim {}", alg.dim())));
        }
        let algebra_weights = integer_diagonal(&alg.ad(h), "ad(h)")?;
        let module_weights = integer_diagonal(rep.rho(h), "rho(h)")?;
        if let Some((lo, hi)) = window {
            if let Some(w) = module_weights.iter().find(|w| **w < lo || **w > hi) {
                return Err(Error::InvalidGrading(format!("module weight {w} outside window [{lo}, {hi}]")));
            }
        }
        let g = GradedRepresentation {
            base: rep,
            grading_element: h,
            algebra_weights,
            module_weights,
            window,
            support_floor,
        };
        g.check_shifts()?;
        if window.is_some() {
            g.check_interior_commutators()?;
        }
        Ok(g)
    }

    fn check_shifts(&self) -> Result<()> {
        for (i, m) in self.base.action().iter().enumerate() {
            for (r, c, _) in m.triplets() {
                if self.module_weights[r] != self.module_weights[c] + self.algebra_weights[i] {
                    return Err(Error::InvalidGrading(format!(
                        "rho(e{i}) maps weight {} to weight {}",
                        self.module_weights[c], self.module_weights[r]
                    )));
                }
            }
        }
        Ok(())
    }

    fn in_window(&self, w: i64) -> bool {
        self.window.is_none_or(|(lo, hi)| lo <= w && w <= hi)
    }

    /// Commutator identity on basis vectors whose whole orbit under the two
    /// factors stays inside the window.
    fn check_interior_commutators(&self) -> Result<()> {
        let alg = self.base.algebra();
        let n = alg.dim();
        for i in 0..n {
            for j in i + 1..n {
                let (wi, wj) = (self.algebra_weights[i], self.algebra_weights[j]);
                let lhs = self.base.rho_of(alg.bracket_basis(i, j));
                let rhs = self.base.rho(i).commutator(self.base.rho(j)).expect("square");
                let diff = lhs.sub(&rhs).expect("same shape");
                for (_, c, _) in diff.triplets() {
                    let w = self.module_weights[c];
                    if self.in_window(w + wi) && self.in_window(w + wj) && self.in_window(w + wi + wj) {
                        return Err(Error::InvalidRepresentation(format!(
                            "commutator identity fails for (e{i}, e{j}) on basis vector {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &Representation<S> {
        &self.base
    }

    pub fn grading_element(&self) -> usize {
        self.grading_element
    }

    pub fn algebra_weights(&self) -> &[i64] {
        &self.algebra_weights
    }

    pub fn module_weights(&self) -> &[i64] {
        &self.module_weights
    }

    pub fn window(&self) -> Option<(i64, i64)> {
        self.window
    }

    /// Module weights a weight-`w` cochain of degree `q` can take: bounds from
    /// the `q` smallest and `q` largest algebra weights.
    pub fn required_module_weights(&self, w: i64, q: usize) -> (i64, i64) {
        let mut sorted = self.algebra_weights.clone();
        sorted.sort_unstable();
        let lo: i64 = sorted.iter().take(q).sum();
        let hi: i64 = sorted.iter().rev().take(q).sum();
        let lo = match self.support_floor {
            Some(f) => (lo + w).max(f),
            None => lo + w,
        };
        (lo, hi + w)
    }

    /// Errors unless every weight-`w` cochain of degree at most `q_max` is
    /// representable in the window.
    pub fn check_window(&self, w: i64, q_max: usize) -> Result<()> {
        let Some((lo, hi)) = self.window else { return Ok(()) };
        let (mut need_lo, mut need_hi) = (i64::MAX, i64::MIN);
        for q in 0..=q_max {
            let (a, b) = self.required_module_weights(w, q);
            if a <= b {
                need_lo = need_lo.min(a);
                need_hi = need_hi.max(b);
            }
        }
        if need_lo > need_hi || (lo <= need_lo && need_hi <= hi) {
            Ok(())
        } else {
            Err(Error::InsufficientWindow { lo, hi, need_lo, need_hi })
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::lie::LieAlgebra;
    use crate::scalar::Rational;

    #[test]
    fn sl2_adjoint_weights() {
        let alg = Arc::new(LieAlgebra::<Rational>::sl2());
        let g = GradedRepresentation::weight_decompose(Representation::adjoint(alg), 2).unwrap();
        assert_eq!(g.algebra_weights(), &[2, -2, 0]);
        assert_eq!(g.module_weights(), &[2, -2, 0]);
    }

    #[test]
    fn abelian_trivial_weights_are_zero() {
        let alg = Arc::new(LieAlgebra::<Rational>::abelian(2));
        let g = GradedRepresentation::weight_decompose(Representation::trivial(alg, 3), 1).unwrap();
        assert_eq!(g.algebra_weights(), &[0, 0]);
        assert_eq!(g.module_weights(), &[0, 0, 0]);
    }

    #[test]
    fn non_diagonal_grading_is_rejected() {
        let alg = Arc::new(LieAlgebra::<Rational>::sl2());
        assert!(matches!(
            GradedRepresentation::weight_decompose(Representation::adjoint(alg), 0),
            Err(Error::InvalidGrading(_))
        ));
    }
}
