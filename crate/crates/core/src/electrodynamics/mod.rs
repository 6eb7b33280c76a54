//! Field-strength dictionary, Lorentz forces, the 4D reading of the
//! magnetostatic equations, continuity, potentials and rotation planes.

mod fields;
mod fieldspec;
mod lorentz;
mod maxwell;
mod potential;
mod rotation;

pub use fields::{
    b_dyad, dual, e_dyad, four_current, to_coordinate_time, to_euclidean, EMField3, ESign,
    FieldStrength, TIME_AXIS,
};
pub use fieldspec::{parse_expression, parse_field_spec};
pub use lorentz::{field_contraction, lorentz3, lorentz4};
pub use maxwell::{
    build_field_strength, check_equivalence, continuity_residual, continuity_residual_3,
    curl_of_b_dyad, homogeneous_4d, maxwell_homogeneous_residuals,
    maxwell_homogeneous_residuals_with, maxwell_inhomogeneous_residuals,
    maxwell_inhomogeneous_residuals_with, Calibration, Equivalence, HomogeneousResiduals,
    InhomogeneousResiduals,
};
pub use potential::{potential_residuals, reconstruct_potential};
pub use rotation::{rotation_plane_count, skew_from_axial, RANK_RTOL};
