//! Linear algebra over a coefficient domain: explicit kernel generators,
//! the row recursion for matrices, and a Hermite-form oracle.

mod fraction_free;
mod generators;
mod hnf;
mod matrix;
mod solve;

pub use generators::{
    kernel_hnf, kernel_matrix_recursive, kernel_row, kernel_row_unit, minimize, Construction, GeneratorSet,
};
pub use hnf::{hnf, same_span, span_basis, span_contains, Echelon, Hnf};
pub use matrix::Matrix;
pub use solve::{determinant, heger_solvable, kernel, kernel_basis_hnf, minor_ideal, rank, solve, solve_hnf};
