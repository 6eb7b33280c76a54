use super::fields::b_dyad;
use crate::algebra::{AntisymmetricDyad, Scalar, Tensor};
use crate::error::{Error, Result};
use crate::exterior::{cross3, cross4};

/// Magnetic Lorentz force `q V × B` in 3D.
pub fn lorentz3<S: Scalar>(q: &S, v: &Tensor<S>, b: &Tensor<S>) -> Result<Tensor<S>> {
    Ok(cross3(v, b)?.scale(q))
}

/// 4D Lorentz force `q V × B_dyad(F)`, with the 4D cross product of a vector
/// and an antisymmetric dyad.
pub fn lorentz4<S: Scalar>(q: &S, v: &Tensor<S>, f: &AntisymmetricDyad<S>) -> Result<Tensor<S>> {
    Ok(cross4(v, &b_dyad(f)?)?.scale(q))
}

/// `q F_αβ V_β`, the conventional covariant form of the Lorentz force.
pub fn field_contraction<S: Scalar>(q: &S, v: &Tensor<S>, f: &AntisymmetricDyad<S>) -> Result<Tensor<S>> {
    if v.rank() != 1 || v.dim() != f.dim() {
        return Err(Error::Shape("field contraction needs a vector matching the dyad".into()));
    }
    let n = v.dim();
    Ok(Tensor::vector(
        (1..=n)
            .map(|a| {
                (1..=n).fold(S::zero(), |acc, b| acc + f.at(a, b).clone() * v.at(&[b]).clone())
                    * q.clone()
            })
            .collect(),
    ))
}
