//! Exact linear algebra over Q(ω) and Smith normal form over the integers.

mod dense;
mod echelon;
mod intmat;
mod sparse;

pub use dense::{minimal_polynomial, Matrix};
pub use echelon::{Coordinatizer, Echelon};
pub use intmat::{IntMatrix, Smith};
pub use sparse::{DenseAcc, SparseMatrix, SparseVec};
