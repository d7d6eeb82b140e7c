//! Tensor calculus with polynomial coefficients on `R^m`.

mod desk;
mod fields;
mod index;
mod polynomial;
mod projective;

pub use desk::{
    apply_s12, apply_vect, class_sign, classify_s12, connecting_desk, connection_cocycles, desk_h1,
    equivariant_operators, invariant_tensors, monomial_fields, monomial_s12, pr_operator, prettr, s12_operator,
    tr_one_operator, vect_operator, DeskClass, DeskH1, DiffOp, EquivariantBounds, H1Bounds, KernelReport,
    OperatorSpace, PrettrSolution,
};
pub use fields::{
    bracket, contraction_zero, d_nabla0, l_pr, l_tr, lie_derivative_connection, npairs, pair_index, pairs,
    projectively_equivalent, Connection, OneForm, SymContravariant, VectorField, S12,
};
pub use index::TermIndex;
pub use polynomial::{monomials_of_degree, monomials_up_to, Monomial, Polynomial};
pub use projective::{
    divergence_connection_cocycle, kappa, s12_graded_module, s12_module_over, sl_projective, ProjectiveAlgebra,
    S12Module,
};
