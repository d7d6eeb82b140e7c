use std::sync::Arc;

use affcohom::affine::AffineRepresentation;
use affcohom::cohomology::{coboundary, cohomology, Cochain, Complex};
use affcohom::experiments::les_example;
use affcohom::lie::{LieAlgebra, Representation};
use affcohom::linalg::{SparseMatrix, SparseVec};
use affcohom::poly::{
    alpha_cocycle, connecting, connecting_abstract, filtration_ses, long_exact_sequence, tau_section, PolyMap,
};
use affcohom::scalar::rat;
use affcohom::Rational;
use proptest::prelude::*;

/// Borel algebra on a line, `h` acting by `w`, with `λ` times the class.
fn borel(w: i64, lambda: i64) -> AffineRepresentation<Rational> {
    let alg = Arc::new(LieAlgebra::borel_sl2());
    let rho =
        Representation::new(alg, 1, vec![SparseMatrix::zeros(1, 1), SparseMatrix::scalar(1, &rat(w, 1))]).unwrap();
    let gamma = match cohomology(&rho, 1).representatives.first() {
        Some(c) => c.scale(&rat(lambda, 1)),
        None => Cochain::zero(2, 1, 1),
    };
    AffineRepresentation::from_pair(rho, gamma).unwrap()
}

fn poly(k: usize, n: usize, d: usize, c: &[(i64, i64)]) -> PolyMap<Rational> {
    let v = SparseVec::from_pairs(
        c.iter().take(PolyMap::<Rational>::space_dim(k, n, d)).enumerate().map(|(i, &(a, b))| (i, rat(a, b))),
    );
    PolyMap::from_coords(k, n, d, &v).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-6i64..=6, 1i64..=4), 40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn alpha_is_a_cocycle(w in 0i64..=3, lambda in -2i64..=2, k in 1usize..=3) {
        let a = borel(w, lambda);
        let ses = filtration_ses(&a, a.model(), k).unwrap();
        prop_assert!(ses.is_exact_sequence_of_modules());
        let alpha = alpha_cocycle(&a, a.model(), k).unwrap();
        prop_assert!(coboundary(&ses.hom_representation().unwrap(), &alpha).unwrap().is_zero());
    }

    #[test]
    fn tau_after_symbol_differs_in_lower_degree(k in 1usize..=3, c in coeffs()) {
        let p = poly(k, 2, 1, &c);
        let tau = tau_section(p.symbol());
        prop_assert_eq!(tau.symbol(), p.symbol());
        prop_assert!(tau.sub(&p).unwrap().symbol().is_zero());
    }

    #[test]
    fn connecting_formula_matches_lift(w in 0i64..=3, lambda in -2i64..=2, k in 1usize..=2) {
        let a = borel(w, lambda);
        let ses = filtration_ses(&a, a.model(), k).unwrap();
        for p in 0..=1 {
            for t in &Complex::full(&ses.quotient, p).cohomology(p).representatives {
                prop_assert_eq!(connecting(t, &a, a.model(), k).unwrap(), connecting_abstract(&ses, t).unwrap());
            }
        }
    }

    #[test]
    fn long_sequence_is_exact(w in 0i64..=3, lambda in -2i64..=2, k in 1usize..=2) {
        let a = borel(w, lambda);
        for node in long_exact_sequence(&a, a.model(), k, 2).unwrap() {
            prop_assert!(node.exact(), "{:?}", node);
        }
    }

    #[test]
    fn json_round_trip(k in 0usize..=3, c in coeffs()) {
        let p = poly(k, 2, 2, &c);
        prop_assert_eq!(PolyMap::from_json(&p.to_json()).unwrap(), p);
    }
}

#[test]
fn les_example_sequence_is_exact_in_degree_two() {
    let a = les_example().unwrap();
    let triv = Representation::trivial(a.model().algebra().clone(), 1);
    for k in 1..=2 {
        assert!(long_exact_sequence(&a, &triv, k, 2).unwrap().iter().all(|n| n.exact()), "k = {k}");
    }
}
