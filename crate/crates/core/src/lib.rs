//! Affine representations of Lie algebras, Chevalley–Eilenberg cohomology and
//! polynomial modules, computed in exact arithmetic.

#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod cohomology;
pub mod error;
pub mod experiments;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{Fp, Rational, Scalar};
