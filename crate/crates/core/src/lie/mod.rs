//! Lie algebras by structure constants, their representations and gradings.

mod algebra;
mod graded;
mod representation;

pub use algebra::{LieAlgebra, Violation};
pub use graded::GradedRepresentation;
pub use representation::{hom_index, hom_module, hom_unvectorize, hom_vectorize, Representation};
