//! Polynomial differential forms, the exterior derivative and the homotopy
//! operator.
//!
//! A `p`-form is stored by its full, totally antisymmetric component tensor
//! `ω_{i1…ip}`, meaning `ω = Σ_{i1<…<ip} ω_{i1…ip} dx^{i1}∧…∧dx^{ip}`.
//! In this convention `(dω)_{i0…ip} = Σ_k (−1)^k ∂_{ik} ω_{i0…î_k…ip}`; for a
//! 1-form `b` this is the tensorial CURL `∂_i b_j − ∂_j b_i`.

use crate::algebra::{
    levi_civita, AntisymmetricDyad, AntisymmetricDyadField, GaussianRational, IndexTuples,
    MultiPoly, Tensor, TensorField,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct DifferentialForm {
    dim: usize,
    degree: usize,
    components: TensorField,
}

impl DifferentialForm {
    /// Validates dimension, degree and total antisymmetry.
    pub fn new(dim: usize, degree: usize, components: TensorField) -> Result<Self> {
        if !(3..=4).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if degree > dim {
            return Err(Error::Shape(format!("degree {degree} exceeds dimension {dim}")));
        }
        if components.rank() != degree || (degree > 0 && components.dim() != dim) {
            return Err(Error::Shape(format!(
                "{degree}-form in {dim}D needs a rank-{degree} {dim}D tensor"
            )));
        }
        if !components.is_totally_antisymmetric() {
            return Err(Error::Invariant("form components are not totally antisymmetric".into()));
        }
        Ok(Self {
            dim,
            degree,
            components,
        })
    }

    pub fn zero(dim: usize, degree: usize) -> Result<Self> {
        let comps = if degree == 0 {
            Tensor::scalar(MultiPoly::zero())
        } else {
            Tensor::zeros(dim, degree)
        };
        Self::new(dim, degree, comps)
    }

    pub fn from_function(dim: usize, f: MultiPoly) -> Result<Self> {
        Self::new(dim, 0, Tensor::scalar(f))
    }

    pub fn from_vector(b: &TensorField) -> Result<Self> {
        Self::new(b.dim(), 1, b.clone())
    }

    pub fn from_dyad(c: &AntisymmetricDyadField) -> Result<Self> {
        Self::new(c.dim(), 2, c.as_tensor().clone())
    }

    /// The 3D two-form `ω_jk = ε_jkm b_m` carrying the flux of an axial vector.
    pub fn two_form_from_axial(b: &TensorField) -> Result<Self> {
        if b.rank() != 1 || b.dim() != 3 {
            return Err(Error::Shape("axial vector must be a 3D vector".into()));
        }
        let eps = levi_civita(3)?;
        let dy = AntisymmetricDyad::from_upper(3, |j, k| {
            (1..=3).fold(MultiPoly::zero(), |acc, m| match eps.value(&[j, k, m]) {
                1 => &acc + b.at(&[m]),
                -1 => &acc - b.at(&[m]),
                _ => acc,
            })
        });
        Self::from_dyad(&dy)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &TensorField {
        &self.components
    }

    /// Component for a 1-based index tuple of length `degree`.
    pub fn component(&self, idx: &[usize]) -> &MultiPoly {
        self.components.at(idx)
    }

    pub fn as_dyad(&self) -> Result<AntisymmetricDyadField> {
        if self.degree != 2 {
            return Err(Error::Shape(format!("expected a 2-form, got degree {}", self.degree)));
        }
        AntisymmetricDyad::new(self.components.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_zero()
    }

    /// Exterior derivative. The derivative of a top-degree form is zero and
    /// has no representable degree, so it is reported as `None`.
    pub fn exterior_derivative(&self) -> Option<Self> {
        if self.degree == self.dim {
            return None;
        }
        let p = self.degree;
        let comps = Tensor::from_fn(self.dim, p + 1, |idx| {
            let mut acc = MultiPoly::zero();
            for k in 0..=p {
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|&(n, _)| n != k)
                    .map(|(_, &v)| v)
                    .collect();
                let term = self
                    .components
                    .at(&rest)
                    .partial_derivative(idx[k])
                    .expect("axes within 1..=4");
                acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        });
        Some(Self {
            dim: self.dim,
            degree: p + 1,
            components: comps,
        })
    }

    /// `true` if `dω = 0` exactly (top-degree forms are always closed).
    pub fn is_closed(&self) -> bool {
        self.exterior_derivative().is_none_or(|dw| dw.is_zero())
    }
}

/// Origin-centred homotopy operator `(Kω)(x) = ∫_0^1 t^{p−1} ι_x ω(tx) dt`.
///
/// Applied term by term: a monomial of degree `n` in `ω_{j I}` contributes
/// `x_j · monomial / (n + p)` to `(Kω)_I`. Satisfies `dK + Kd = id` on forms
/// of degree `p ≥ 1`.
pub fn homotopy_operator(omega: &DifferentialForm) -> Result<DifferentialForm> {
    let p = omega.degree;
    if p == 0 {
        return Err(Error::Shape("homotopy operator needs degree >= 1".into()));
    }
    let dim = omega.dim;
    let weight = |poly: &MultiPoly| {
        poly.map_coeffs(|e, c| {
            let n: u32 = e.iter().sum();
            c * &GaussianRational::real(1, (n as usize + p) as i64)
        })
    };
    let comps = if p == 1 {
        let f = (1..=dim).fold(MultiPoly::zero(), |acc, j| {
            &acc + &weight(omega.components.at(&[j])).mul_var(j).expect("axis")
        });
        Tensor::scalar(f)
    } else {
        let mut out = Tensor::zeros(dim, p - 1);
        for idx in IndexTuples::new(dim, p - 1) {
            let mut acc = MultiPoly::zero();
            for j in 1..=dim {
                let mut full = Vec::with_capacity(p);
                full.push(j);
                full.extend_from_slice(&idx);
                let w = omega.components.at(&full);
                if !w.is_zero() {
                    acc = &acc + &weight(w).mul_var(j).expect("axis");
                }
            }
            out.set(&idx, acc)?;
        }
        out
    };
    Ok(DifferentialForm {
        dim,
        degree: p - 1,
        components: comps,
    })
}

/// Potential `η` with `dη = ω` for a closed polynomial form of degree ≥ 1.
pub fn poincare_potential(omega: &DifferentialForm) -> Result<DifferentialForm> {
    if let Some(dw) = omega.exterior_derivative() {
        if !dw.is_zero() {
            let residual = dw
                .components
                .components()
                .iter()
                .find(|c| !c.is_zero())
                .map(|c| c.to_string())
                .unwrap_or_default();
            return Err(Error::NotClosed { residual });
        }
    }
    homotopy_operator(omega)
}
