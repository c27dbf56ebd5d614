//! Abelianization to `GL(n, Z)`, reduction mod `p`, and exhaustive
//! computation with finite matrix groups over `F_p`.

mod group;
mod matrix;

pub use group::{FiniteMatrixGroup, SimplicityMode, DEFAULT_MATRIX_CAP};
pub use matrix::{abelianize, is_prime, IntMatrix, ModPMatrix};
