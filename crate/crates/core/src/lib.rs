//! Exact verification kernel for Hopf quasigroups built from loops, their
//! integrals, integral duals, and the nonunital function algebras of
//! infinite IP loops.

pub mod dual;
pub mod hopf;
pub mod integrals;
pub mod linalg;
pub mod loops;
pub mod mcq;
pub mod mutation;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod tensor;

pub use linalg::{LinalgError, Matrix};
pub use report::{Expectation, Report};
pub use scalar::{Field, FieldError, Scalar, DEFAULT_PRIME};
pub use tensor::{Element, Tensor, Tensor2, Tensor3};
