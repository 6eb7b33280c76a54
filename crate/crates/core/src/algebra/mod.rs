//! Exact scalars, polynomials, dense tensors and the Levi-Civita symbol.

mod integrate;
mod levi_civita;
mod poly;
mod scalar;
mod tensor;

pub use integrate::{integrate_box, BoxRegion};
pub use levi_civita::{levi_civita, LeviCivita};
pub use poly::{Exponents, MultiPoly, MAX_VARS};
pub use scalar::{GaussianRational, Scalar};
pub use tensor::{
    contract, AntisymmetricDyad, AntisymmetricDyadField, IndexTuples, MetricConfig, Tensor,
    TensorField,
};
