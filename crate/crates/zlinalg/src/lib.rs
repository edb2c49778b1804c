//! Exact linear algebra over the integers and over cyclotomic integers.

pub mod abgroup;
pub mod cyclotomic;
pub mod hom;
pub mod int;
pub mod lattice;
pub mod matrix;
pub mod smith;

pub use abgroup::{group_invariants, AbGroup, Homology, Invariants, PresentedAbGroup, Presentation, Subgroup};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycInt};
pub use hom::{hom_diagonal, hom_group, Congruence, HomError, HomGroup, LinearSystem, SolutionGroup};
pub use int::{int, Int};
pub use lattice::{kernel, lattice_basis, solve, ColumnEchelon, LatticeCoords};
pub use matrix::IntMatrix;
pub use smith::{smith_diagonal, smith_normal_form, SmithForm};

/// Solves `a x = b` over the integers.
pub fn solve_linear(a: &IntMatrix, b: &[Int]) -> Result<Option<Vec<Int>>, DimensionError> {
    if a.rows() != b.len() {
        return Err(DimensionError {
            rows: a.rows(),
            rhs: b.len(),
        });
    }
    Ok(solve(a, b))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("matrix has {rows} rows but right-hand side has length {rhs}")]
pub struct DimensionError {
    pub rows: usize,
    pub rhs: usize,
}
