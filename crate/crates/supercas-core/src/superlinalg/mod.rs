//! Graded linear algebra over the rationals.

mod matrix;
mod solve;
mod space;
mod tensor;
mod trace;

pub use matrix::{RowIter, StorageKind, SuperMatrix};
pub use solve::{inverse, rank, Coordinates};
pub use space::GradedSpace;
pub use tensor::{graded_kron, place, place_any, superperm};
pub use trace::{graded_bracket, operator_parity, partial_supertrace_second, supertrace, trace};
