//! Exact verification of 3D exterior calculus, its Euclidean 4D analogue and
//! the correspondence between magnetostatics and electrodynamics.
//!
//! Polynomial fields carry Gaussian-rational coefficients, so every identity
//! is checked as an exact zero. Kinematics along sampled worldlines uses
//! `f64` and complex floats.

pub mod algebra;
pub mod electrodynamics;
pub mod error;
pub mod exterior;
pub mod kinematics;
pub mod polytopes;
pub mod random;
pub mod stress_energy;
pub mod verify;

pub use error::{Error, Result};
