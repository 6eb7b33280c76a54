//! Differential and algebraic operators on vector and dyad fields.
//!
//! Conventions (all indices 1-based, metric `δ`):
//!
//! | operator            | definition                                   |
//! |---------------------|----------------------------------------------|
//! | `curl3(b)_i`        | `ε_ijk ∂_j b_k`                              |
//! | `big_curl(b)_ij`    | `∂_i b_j − ∂_j b_i`                          |
//! | `chi(b)_μν`         | `½ (∂_μ b_ν − ∂_ν b_μ)`                      |
//! | `curl4_dyad(C)_α`   | `ε_αβγδ ∂_β C_γδ`                            |
//! | `curl4_vec(b)_αβ`   | `½ ε_αβγδ ∂_γ b_δ`                           |
//! | `div_vec(b)`        | `∂_β b_β`                                    |
//! | `div_dyad(C)_β`     | `∂_α C_αβ`                                   |
//! | `cross3(a, b)_i`    | `ε_ijk a_j b_k`                              |
//! | `cross4(b, C)_α`    | `ε_αβγδ b_β C_γδ`                            |

use crate::algebra::{
    levi_civita, AntisymmetricDyad, AntisymmetricDyadField, MultiPoly, Scalar, Tensor, TensorField,
};
use crate::error::{Error, Result};

fn require_vector<S>(b: &Tensor<S>, dims: &[usize], what: &str) -> Result<()>
where
    S: Scalar,
{
    if b.rank() != 1 {
        return Err(Error::Shape(format!("{what}: expected a vector, got rank {}", b.rank())));
    }
    if !dims.contains(&b.dim()) {
        return Err(Error::Shape(format!(
            "{what}: expected dimension in {dims:?}, got {}",
            b.dim()
        )));
    }
    Ok(())
}

fn require_dyad_dim<S: Scalar>(c: &AntisymmetricDyad<S>, dims: &[usize], what: &str) -> Result<()> {
    if !dims.contains(&c.dim()) {
        return Err(Error::Shape(format!(
            "{what}: expected dimension in {dims:?}, got {}",
            c.dim()
        )));
    }
    Ok(())
}

fn d(p: &MultiPoly, axis: usize) -> MultiPoly {
    p.partial_derivative(axis)
        .expect("operator axes are within 1..=4")
}

/// Gradient `(∂_1 f, …, ∂_D f)`.
pub fn grad(f: &MultiPoly, dim: usize) -> Result<TensorField> {
    if !(1..=4).contains(&dim) {
        return Err(Error::UnsupportedDimension(dim));
    }
    Ok(Tensor::vector((1..=dim).map(|k| d(f, k)).collect()))
}

/// The 3D curl of a vector field.
pub fn curl3(b: &TensorField) -> Result<TensorField> {
    require_vector(b, &[3], "curl3")?;
    let eps = levi_civita(3)?;
    let mut out = vec![MultiPoly::zero(); 3];
    for (idx, sign) in eps.nonzero_entries() {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let term = d(b.at(&[k]), j);
        out[i - 1] = if sign > 0 { &out[i - 1] + &term } else { &out[i - 1] - &term };
    }
    Ok(Tensor::vector(out))
}

/// The tensorial CURL `∂_i b_j − ∂_j b_i` in 3 or 4 dimensions.
pub fn big_curl(b: &TensorField) -> Result<AntisymmetricDyadField> {
    require_vector(b, &[3, 4], "big_curl")?;
    Ok(AntisymmetricDyad::from_upper(b.dim(), |i, j| {
        &d(b.at(&[j]), i) - &d(b.at(&[i]), j)
    }))
}

/// The chiasm, half the tensorial CURL in 4D.
pub fn chi(b: &TensorField) -> Result<AntisymmetricDyadField> {
    require_vector(b, &[4], "chi")?;
    let half = MultiPoly::from_ratio(1, 2);
    Ok(big_curl(b)?.scale(&half))
}

/// The 4D curl of an antisymmetric dyad, yielding a vector.
pub fn curl4_dyad(c: &AntisymmetricDyadField) -> Result<TensorField> {
    require_dyad_dim(c, &[4], "curl4_dyad")?;
    let eps = levi_civita(4)?;
    let mut out = vec![MultiPoly::zero(); 4];
    for (idx, sign) in eps.nonzero_entries() {
        let (a, b, g, dd) = (idx[0], idx[1], idx[2], idx[3]);
        let term = d(c.at(g, dd), b);
        out[a - 1] = if sign > 0 { &out[a - 1] + &term } else { &out[a - 1] - &term };
    }
    Ok(Tensor::vector(out))
}

/// The 4D curl of a vector, yielding an antisymmetric dyad.
pub fn curl4_vec(b: &TensorField) -> Result<AntisymmetricDyadField> {
    require_vector(b, &[4], "curl4_vec")?;
    let eps = levi_civita(4)?;
    let mut out = Tensor::<MultiPoly>::zeros(4, 2);
    for (idx, sign) in eps.nonzero_entries() {
        let (a, bb, g, dd) = (idx[0], idx[1], idx[2], idx[3]);
        let term = d(b.at(&[dd]), g);
        let cur = out.at(&[a, bb]).clone();
        out.set(&[a, bb], if sign > 0 { &cur + &term } else { &cur - &term })?;
    }
    Ok(AntisymmetricDyad::new_unchecked(
        out.scale(&MultiPoly::from_ratio(1, 2)),
    ))
}

/// Divergence of a vector field.
pub fn div_vec(b: &TensorField) -> Result<MultiPoly> {
    require_vector(b, &[3, 4], "div_vec")?;
    Ok((1..=b.dim()).fold(MultiPoly::zero(), |acc, k| &acc + &d(b.at(&[k]), k)))
}

/// Divergence of an antisymmetric dyad over its first index.
pub fn div_dyad(c: &AntisymmetricDyadField) -> Result<TensorField> {
    require_dyad_dim(c, &[3, 4], "div_dyad")?;
    let n = c.dim();
    Ok(Tensor::vector(
        (1..=n)
            .map(|b| (1..=n).fold(MultiPoly::zero(), |acc, a| &acc + &d(c.at(a, b), a)))
            .collect(),
    ))
}

/// The 3D cross product.
pub fn cross3<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>) -> Result<Tensor<S>> {
    require_vector(a, &[3], "cross3")?;
    require_vector(b, &[3], "cross3")?;
    let eps = levi_civita(3)?;
    let mut out = vec![S::zero(); 3];
    for (idx, sign) in eps.nonzero_entries() {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let term = a.at(&[j]).clone() * b.at(&[k]).clone();
        let cur = std::mem::replace(&mut out[i - 1], S::zero());
        out[i - 1] = if sign > 0 { cur + term } else { cur - term };
    }
    Ok(Tensor::vector(out))
}

/// The 4D cross product of a vector with an antisymmetric dyad.
pub fn cross4<S: Scalar>(b: &Tensor<S>, c: &AntisymmetricDyad<S>) -> Result<Tensor<S>> {
    require_vector(b, &[4], "cross4")?;
    require_dyad_dim(c, &[4], "cross4")?;
    let eps = levi_civita(4)?;
    let mut out = vec![S::zero(); 4];
    for (idx, sign) in eps.nonzero_entries() {
        let (a, bb, g, dd) = (idx[0], idx[1], idx[2], idx[3]);
        let term = b.at(&[bb]).clone() * c.at(g, dd).clone();
        let cur = std::mem::replace(&mut out[a - 1], S::zero());
        out[a - 1] = if sign > 0 { cur + term } else { cur - term };
    }
    Ok(Tensor::vector(out))
}

/// `cross4` on a raw rank-2 tensor, validating antisymmetry first.
pub fn cross4_checked<S: Scalar>(b: &Tensor<S>, c: &Tensor<S>) -> Result<Tensor<S>> {
    let c = AntisymmetricDyad::new(c.clone())?;
    cross4(b, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussianRational as Q;

    fn x(k: usize) -> MultiPoly {
        MultiPoly::var(k).unwrap()
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }
    fn vecp(v: Vec<MultiPoly>) -> TensorField {
        Tensor::vector(v)
    }

    #[test]
    fn curl3_of_rotation_field() {
        let b = vecp(vec![-x(2), x(1), c(0)]);
        assert_eq!(curl3(&b).unwrap(), vecp(vec![c(0), c(0), c(2)]));
    }

    #[test]
    fn curl3_of_constant_is_zero() {
        assert!(curl3(&vecp(vec![c(3), c(-1), c(5)])).unwrap().is_zero());
    }

    #[test]
    fn curl3_shape_errors() {
        assert!(matches!(curl3(&vecp(vec![c(1); 4])), Err(Error::Shape(_))));
        assert!(curl3(&Tensor::zeros(3, 2)).is_err());
    }

    #[test]
    fn big_curl_direct_formula() {
        let b = vecp(vec![x(2), c(0), c(0)]);
        let cb = big_curl(&b).unwrap();
        assert_eq!(*cb.get(1, 2).unwrap(), c(-1));
        assert_eq!(*cb.get(2, 1).unwrap(), c(1));
        assert!(cb.get(1, 3).unwrap().is_zero());
    }

    #[test]
    fn chi_direct_formula() {
        let b = vecp(vec![x(2), c(0), c(0), c(0)]);
        let ch = chi(&b).unwrap();
        assert_eq!(*ch.get(1, 2).unwrap(), MultiPoly::from_ratio(-1, 2));
        assert!(chi(&vecp(vec![x(1), c(0), c(0)])).is_err());
    }

    #[test]
    fn curl4_dyad_example() {
        let cdy = AntisymmetricDyad::from_upper(4, |i, j| if (i, j) == (3, 4) { x(2) } else { c(0) });
        assert_eq!(curl4_dyad(&cdy).unwrap(), vecp(vec![c(2), c(0), c(0), c(0)]));
        let konst = AntisymmetricDyad::from_upper(4, |i, j| c((i * 10 + j) as i64));
        assert!(curl4_dyad(&konst).unwrap().is_zero());
    }

    #[test]
    fn curl4_vec_example() {
        let b = vecp(vec![c(0), c(0), c(0), x(3)]);
        let cb = curl4_vec(&b).unwrap();
        assert_eq!(*cb.get(1, 2).unwrap(), MultiPoly::from_ratio(1, 2));
        assert_eq!(*cb.get(2, 1).unwrap(), MultiPoly::from_ratio(-1, 2));
        for (i, j) in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            assert!(cb.get(i, j).unwrap().is_zero());
        }
        assert!(curl4_vec(&vecp(vec![c(1), c(2), c(3), c(4)])).unwrap().is_zero());
    }

    #[test]
    fn div_vec_of_position() {
        let b = vecp((1..=4).map(x).collect());
        assert_eq!(div_vec(&b).unwrap(), c(4));
    }

    #[test]
    fn div_dyad_example() {
        let cdy = AntisymmetricDyad::from_upper(4, |i, j| if (i, j) == (1, 2) { x(1) } else { c(0) });
        assert_eq!(div_dyad(&cdy).unwrap(), vecp(vec![c(0), c(1), c(0), c(0)]));
    }

    #[test]
    fn cross3_basis() {
        let e = |k: usize| Tensor::vector((1..=3).map(|i| Q::from((i == k) as i64)).collect());
        assert_eq!(cross3(&e(1), &e(2)).unwrap(), e(3));
        assert!(cross3(&e(2), &e(2)).unwrap().is_zero());
    }

    #[test]
    fn cross4_example() {
        let b = Tensor::vector(vec![Q::from(1), Q::from(0), Q::from(0), Q::from(0)]);
        let cdy = AntisymmetricDyad::from_upper(4, |i, j| Q::from(((i, j) == (3, 4)) as i64));
        let r = cross4(&b, &cdy).unwrap();
        assert_eq!(r, Tensor::vector(vec![Q::from(0), Q::from(-2), Q::from(0), Q::from(0)]));
        assert!(cross4(&b, &AntisymmetricDyad::zeros(4)).unwrap().is_zero());
    }

    #[test]
    fn cross4_rejects_symmetric_input() {
        let b = Tensor::vector(vec![Q::from(1); 4]);
        let sym = Tensor::<Q>::identity(4);
        assert!(matches!(cross4_checked(&b, &sym), Err(Error::Invariant(_))));
    }
}
