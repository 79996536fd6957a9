//! Exact matrices over the scalar tower.

mod elim;
mod exterior;
mod field_matrix;
mod matrix;
mod smith;

pub use elim::{bareiss_det, bareiss_rank, gauss_det, gauss_rank, kernel_basis, rank_nullity};
pub use exterior::{cyclic_h2_change_of_basis, exterior_power, k_subsets};
pub use field_matrix::{Elimination, FieldMatrix};
pub use matrix::Matrix;
pub use smith::{smith_normal_form, SmithForm};
