use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Relative singular-value threshold for the numeric rank.
pub const RANK_RTOL: f64 = 1e-10;

/// Skew matrix `B_ij = ε_ijk b_k` of a 3D axial vector.
pub fn skew_from_axial(b: [f64; 3]) -> DMatrix<f64> {
    DMatrix::from_row_slice(
        3,
        3,
        &[0.0, b[2], -b[1], -b[2], 0.0, b[0], b[1], -b[0], 0.0],
    )
}

/// Number of independent momentary rotation planes of an angular-velocity
/// skew matrix: half its rank.
pub fn rotation_plane_count(omega: &DMatrix<f64>) -> Result<usize> {
    let n = omega.nrows();
    if omega.ncols() != n || !(3..=4).contains(&n) {
        return Err(Error::Shape(format!(
            "expected a 3x3 or 4x4 matrix, got {}x{}",
            n,
            omega.ncols()
        )));
    }
    let scale = omega.amax();
    let skew_defect = (omega + omega.transpose()).amax();
    if skew_defect > 1e-12 * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::Invariant(format!(
            "matrix is not antisymmetric (max |Ω + Ωᵀ| = {skew_defect:e})"
        )));
    }
    if scale == 0.0 {
        return Ok(0);
    }
    let sv = omega.clone().svd(false, false).singular_values;
    let largest = sv.max();
    let rank = sv.iter().filter(|&&s| s > RANK_RTOL * largest).count();
    Ok(rank / 2)
}
