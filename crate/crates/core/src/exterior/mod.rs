//! The exterior-calculus operator family in 3 and 4 dimensions, the
//! homotopy-operator potential and exact Stokes checks.

mod forms;
mod operators;
mod stokes;

pub use forms::{homotopy_operator, poincare_potential, DifferentialForm};
pub use operators::{
    big_curl, chi, cross3, cross4, cross4_checked, curl3, curl4_dyad, curl4_vec, div_dyad,
    div_vec, grad,
};
pub use stokes::{boundary_integral, integral_of_derivative, stokes_residual, Cell, Side};
