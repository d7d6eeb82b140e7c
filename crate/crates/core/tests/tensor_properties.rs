use affcohom::scalar::rat;
use affcohom::tensor::{
    bracket, contraction_zero, d_nabla0, monomial_fields, monomials_up_to, projectively_equivalent, Connection,
    OneForm, Polynomial, SymContravariant, VectorField, S12,
};
use affcohom::Rational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Gen(ChaCha8Rng);

impl Gen {
    fn new(seed: u64) -> Self {
        Gen(ChaCha8Rng::seed_from_u64(seed))
    }

    fn scalar(&mut self) -> Rational {
        rat(self.0.gen_range(-3..=3), self.0.gen_range(1..=2))
    }

    fn poly(&mut self, m: usize, deg: u32) -> Polynomial {
        let terms: Vec<_> = monomials_up_to(m, deg)
            .into_iter()
            .filter_map(|e| self.0.gen_bool(0.35).then(|| (e, self.scalar())))
            .collect();
        Polynomial::from_terms(m, terms)
    }

    fn polys(&mut self, m: usize, n: usize, deg: u32) -> Vec<Polynomial> {
        (0..n).map(|_| self.poly(m, deg)).collect()
    }

    fn field(&mut self, m: usize, deg: u32) -> VectorField {
        VectorField::new(m, self.polys(m, m, deg)).unwrap()
    }

    fn form(&mut self, m: usize, deg: u32) -> OneForm {
        OneForm::new(m, self.polys(m, m, deg)).unwrap()
    }

    fn s12(&mut self, m: usize, deg: u32) -> S12 {
        S12::from_components(m, self.polys(m, m * m * (m + 1) / 2, deg)).unwrap()
    }

    fn sym2(&mut self, m: usize, deg: u32) -> SymContravariant {
        let mut p = SymContravariant::zero(m, 2);
        for i in 0..m {
            for j in i..m {
                p.add_to(&[i, j], &self.poly(m, deg));
            }
        }
        p
    }
}

/// `m ∈ {2, 3}` with a seed.
fn setup() -> impl Strategy<Value = (usize, u64)> {
    (2usize..=3, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lie_derivative_is_a_representation((m, seed) in setup()) {
        let mut g = Gen::new(seed);
        let (x, y) = (g.field(m, 2), g.field(m, 2));
        let xy = bracket(&x, &y).unwrap();
        let s = g.s12(m, 2);
        prop_assert_eq!(
            s.lie_derivative(&y).lie_derivative(&x).sub(&s.lie_derivative(&x).lie_derivative(&y)),
            s.lie_derivative(&xy)
        );
        let a = g.form(m, 2);
        prop_assert_eq!(
            a.lie_derivative(&y).lie_derivative(&x).sub(&a.lie_derivative(&x).lie_derivative(&y)),
            a.lie_derivative(&xy)
        );
        let p = g.sym2(m, 2);
        prop_assert_eq!(
            p.lie_derivative(&y).lie_derivative(&x).sub(&p.lie_derivative(&x).lie_derivative(&y)),
            p.lie_derivative(&xy)
        );
    }

    #[test]
    fn trace_projection_and_alpha_one_are_equivariant((m, seed) in setup()) {
        let mut g = Gen::new(seed);
        let x = g.field(m, 3);
        let s = g.s12(m, 2);
        let ls = s.lie_derivative(&x);
        prop_assert_eq!(ls.trace(), s.trace().lie_derivative(&x));
        prop_assert_eq!(ls.pr(), s.pr().lie_derivative(&x));
        prop_assert_eq!(ls.tr_one(), s.tr_one().lie_derivative(&x));
        let a = g.form(m, 2);
        prop_assert_eq!(a.alpha_one().lie_derivative(&x), a.lie_derivative(&x).alpha_one());
    }

    #[test]
    fn contraction_obeys_leibniz((m, seed) in setup()) {
        let mut g = Gen::new(seed);
        let x = g.field(m, 2);
        let (s, p) = (g.s12(m, 2), g.sym2(m, 2));
        let lhs = contraction_zero(&s, &p).lie_derivative(&x);
        let rhs = contraction_zero(&s.lie_derivative(&x), &p).add(&contraction_zero(&s, &p.lie_derivative(&x)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flat_divergence_commutes_with_affine_fields((m, seed) in setup()) {
        let mut g = Gen::new(seed);
        let x = g.field(m, 1);
        let p = g.sym2(m, 3);
        prop_assert_eq!(d_nabla0(&p.lie_derivative(&x)), d_nabla0(&p).lie_derivative(&x));
    }

    #[test]
    fn connection_cocycle_and_base_change((m, seed) in setup()) {
        let mut g = Gen::new(seed);
        let (x, y) = (g.field(m, 2), g.field(m, 2));
        let nabla = Connection::from_christoffel(g.s12(m, 2));
        let lx = nabla.lie_derivative(&x);
        prop_assert_eq!(&lx, &nabla.lie_derivative_by_brackets(&x));
        let xy = bracket(&x, &y).unwrap();
        prop_assert!(nabla.lie_derivative(&y).lie_derivative(&x).sub(&lx.lie_derivative(&y)).sub(&nabla.lie_derivative(&xy)).is_zero());
        let s = g.s12(m, 2);
        let moved = nabla.translate(&s);
        prop_assert_eq!(moved.lie_derivative(&x).sub(&lx), s.lie_derivative(&x));
        let div = x.apply(&y.divergence()).sub(&y.apply(&x.divergence())).sub(&xy.divergence());
        prop_assert!(div.is_zero());
    }

    #[test]
    fn projective_equivalence_recovers_the_form((m, seed) in setup()) {
        let mut g = Gen::new(seed);
        let nabla = Connection::from_christoffel(g.s12(m, 2));
        let a = g.form(m, 2);
        prop_assert_eq!(projectively_equivalent(&nabla, &nabla.translate(&a.alpha_one())).unwrap(), Some(a));
        let s = g.s12(m, 1);
        let pe = projectively_equivalent(&nabla, &nabla.translate(&s)).unwrap();
        prop_assert_eq!(pe.is_some(), s.pr().is_zero());
    }

    #[test]
    fn json_round_trips((m, seed) in setup()) {
        let mut g = Gen::new(seed);
        let x = g.field(m, 3);
        prop_assert_eq!(VectorField::from_json(&x.to_json()).unwrap(), x);
        let a = g.form(m, 3);
        prop_assert_eq!(OneForm::from_json(&a.to_json()).unwrap(), a);
        let s = g.s12(m, 2);
        prop_assert_eq!(S12::from_json(&s.to_json()).unwrap(), s.clone());
        let p = g.sym2(m, 2);
        prop_assert_eq!(SymContravariant::from_json(&p.to_json(), 2).unwrap(), p);
        let nabla = Connection::from_christoffel(s);
        prop_assert_eq!(Connection::from_json(&nabla.to_json()).unwrap(), nabla);
    }
}

#[test]
fn jacobi_on_monomial_triples() {
    for m in [2, 3] {
        let fields: Vec<VectorField> = (0..=3).flat_map(|d| monomial_fields(m, d)).collect();
        let n = if m == 2 { fields.len() } else { 18 };
        for i in 0..n {
            for j in i + 1..n {
                let xy = bracket(&fields[i], &fields[j]).unwrap();
                for k in j + 1..n {
                    let (x, y, z) = (&fields[i], &fields[j], &fields[k]);
                    let sum = bracket(&xy, z)
                        .unwrap()
                        .add(&bracket(&bracket(y, z).unwrap(), x).unwrap())
                        .add(&bracket(&bracket(z, x).unwrap(), y).unwrap());
                    assert!(sum.is_zero(), "m = {m}: {i} {j} {k}");
                }
            }
        }
    }
}

#[test]
fn constructors_reject_dimension_one() {
    assert!(VectorField::new(1, vec![Polynomial::zero(1)]).is_err());
    assert!(OneForm::new(1, vec![Polynomial::zero(1)]).is_err());
    assert!(S12::from_components(1, vec![Polynomial::zero(1)]).is_err());
}
