//! Exact linear algebra over a [`Field`](crate::scalar::Field).

mod echelon;
mod factor;
mod matrix;
mod poly;

pub use echelon::{close_under, kernel_basis, rref, spin, spin_subspace, Subspace};
pub use factor::{factor_over_q, squarefree_decomposition, Factor, DEFAULT_MAX_FACTOR_DEGREE};
pub use matrix::Matrix;
pub use poly::{char_poly, Poly};
