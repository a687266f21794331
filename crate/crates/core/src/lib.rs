//! Exact linear algebra over prime fields for studying affine spaces of
//! matrices without full-rank elements.
//!
//! The crate is layered bottom-up:
//!
//! * [`gf`]: prime field arithmetic;
//! * [`exactmat`]: dense matrices, elimination, kernels, the trace pairing;
//! * [`spaces`]: canonical linear and affine matrix spaces;
//! * [`duality`]: trace-orthogonal complements and evaluation operators;
//! * [`structure`]: rank-one space classification, the border lemmas and
//!   the classifier for maximal singular spaces;
//! * [`search`]: exhaustive verification over small parameters.

pub mod duality;
pub mod exactmat;
pub mod gf;
pub mod random;
pub mod search;
pub mod spaces;
pub mod structure;

pub use exactmat::{Matrix, MatrixError};
pub use gf::{Elem, FieldCtx, FieldError};
pub use spaces::{AffineMatrixSpace, LinearMatrixSpace, SpaceError, DEFAULT_CAP};
