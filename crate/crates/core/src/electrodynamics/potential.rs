use super::fields::{b_dyad, e_dyad, FieldStrength};
use super::maxwell::homogeneous_4d;
use crate::algebra::{AntisymmetricDyadField, GaussianRational, MultiPoly, TensorField};
use crate::error::{Error, Result};
use crate::exterior::{chi, curl4_vec, poincare_potential, DifferentialForm};

/// Four-potential `A` with `F = dA`, so that `B_dyad(F) = curl4_vec(A)` and
/// `E_dyad(F) = chi(i A)`.
///
/// `F` itself is the closed two-form `2·(−i)·E_dyad`; its closedness is the
/// 4D homogeneous equation, which is checked first.
pub fn reconstruct_potential(f: &FieldStrength) -> Result<TensorField> {
    let residual = homogeneous_4d(f);
    if let Some(bad) = residual.components().iter().find(|c| !c.is_zero()) {
        return Err(Error::NotClosed {
            residual: bad.to_string(),
        });
    }
    let omega = DifferentialForm::from_dyad(f.dyad())?;
    Ok(poincare_potential(&omega)?.components().clone())
}

/// Residuals `curl4_vec(A) − B_dyad(F)` and `chi(iA) − E_dyad(F)`.
pub fn potential_residuals(
    f: &FieldStrength,
    a: &TensorField,
) -> Result<(AntisymmetricDyadField, AntisymmetricDyadField)> {
    let b = b_dyad(f.dyad())?;
    let e = e_dyad(f.dyad())?;
    let ia = a.scale(&MultiPoly::constant(GaussianRational::imag(1, 1)));
    Ok((curl4_vec(a)?.try_sub(&b)?, chi(&ia)?.try_sub(&e)?))
}
