//! Exact algebra for commutator identities in Grassmann tensor products and a
//! characteristic-2 group-algebra quotient, plus multilinear membership in the
//! commutator T-ideals of the free associative algebra.

pub mod coeff;
pub mod commutator_calculus;
pub mod error;
pub mod free_algebra;
pub mod grassmann;
pub mod group_construction;
pub mod lincomb;
pub mod tensor_product;
pub mod tideal;
pub mod verify;

pub use coeff::{FieldTag, Scalar, SparseVector};
pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use tensor_product::{Algebra, Elem, TensorAlgebra, TensorBasis, TensorElement, ZeroVerdict};
