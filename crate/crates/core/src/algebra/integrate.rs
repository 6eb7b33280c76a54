//! Exact integration of polynomials over axis-aligned boxes.

use num_rational::BigRational;

use super::poly::{MultiPoly, MAX_VARS};
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// Axis-aligned box `[lo_1, hi_1] × … × [lo_D, hi_D]` with rational bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxRegion {
    bounds: Vec<(BigRational, BigRational)>,
}

impl BoxRegion {
    pub fn new(bounds: Vec<(BigRational, BigRational)>) -> Result<Self> {
        if bounds.is_empty() || bounds.len() > MAX_VARS {
            return Err(Error::Validation(format!(
                "box must have 1..={MAX_VARS} axes, got {}",
                bounds.len()
            )));
        }
        for (k, (lo, hi)) in bounds.iter().enumerate() {
            if lo > hi {
                return Err(Error::Validation(format!(
                    "axis {}: lower bound {lo} exceeds upper bound {hi}",
                    k + 1
                )));
            }
        }
        Ok(Self { bounds })
    }

    /// Box from integer `(lo, hi)` pairs.
    pub fn from_ints(bounds: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            bounds
                .iter()
                .map(|&(lo, hi)| (BigRational::from_integer(lo.into()), BigRational::from_integer(hi.into())))
                .collect(),
        )
    }

    /// `[0,1]^dim`.
    pub fn unit(dim: usize) -> Result<Self> {
        Self::from_ints(&vec![(0, 1); dim])
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    /// Bounds of a 1-based axis.
    pub fn axis(&self, axis: usize) -> Result<(&BigRational, &BigRational)> {
        self.bounds
            .get(axis.wrapping_sub(1))
            .map(|(lo, hi)| (lo, hi))
            .ok_or(Error::IndexOutOfRange {
                index: axis,
                bound: self.bounds.len(),
            })
    }

    pub fn lo(&self, axis: usize) -> Result<GaussianRational> {
        Ok(GaussianRational::from_rational(self.axis(axis)?.0.clone()))
    }

    pub fn hi(&self, axis: usize) -> Result<GaussianRational> {
        Ok(GaussianRational::from_rational(self.axis(axis)?.1.clone()))
    }
}

/// `∫_box p`, by iterated exact antiderivatives over every axis of the box.
///
/// The polynomial may only depend on the box's axes.
pub fn integrate_box(p: &MultiPoly, region: &BoxRegion) -> Result<GaussianRational> {
    let mut acc = p.clone();
    for axis in 1..=region.dim() {
        acc = acc.definite_integral(axis, &region.lo(axis)?, &region.hi(axis)?)?;
    }
    acc.as_constant().ok_or_else(|| {
        Error::Validation(format!(
            "integrand depends on variables outside the {}-dimensional box",
            region.dim()
        ))
    })
}
