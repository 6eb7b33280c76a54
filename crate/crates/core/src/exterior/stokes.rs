//! Exact generalized-Stokes checks on axis-aligned cells.
//!
//! A cell is a `p`-dimensional face of a [`BoxRegion`]: `p` spanning axes
//! `a_1 < … < a_p` with the standard orientation `dx^{a_1}∧…∧dx^{a_p}`, and
//! every other axis pinned to its lower or upper bound. Its boundary carries
//! the induced (outward-normal first) orientation: the face `x_{a_k} = hi`
//! enters with sign `(−1)^{k−1}` and `x_{a_k} = lo` with the opposite sign.

use crate::algebra::{BoxRegion, GaussianRational, MultiPoly};
use crate::error::{Error, Result};

use super::forms::DifferentialForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lo,
    Hi,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    region: BoxRegion,
    axes: Vec<usize>,
    pins: Vec<(usize, Side)>,
}

impl Cell {
    /// Cell spanning `axes` (1-based, strictly increasing); the remaining axes
    /// are pinned by `sides`, given in increasing axis order.
    pub fn new(region: BoxRegion, axes: Vec<usize>, sides: &[Side]) -> Result<Self> {
        let dim = region.dim();
        if axes.is_empty() || axes.len() > dim {
            return Err(Error::Validation(format!(
                "cell needs 1..={dim} spanning axes, got {}",
                axes.len()
            )));
        }
        if axes.windows(2).any(|w| w[0] >= w[1]) || axes.iter().any(|&a| !(1..=dim).contains(&a)) {
            return Err(Error::Validation(format!("invalid spanning axes {axes:?}")));
        }
        let others: Vec<usize> = (1..=dim).filter(|a| !axes.contains(a)).collect();
        if others.len() != sides.len() {
            return Err(Error::Validation(format!(
                "{} pinned axes but {} sides given",
                others.len(),
                sides.len()
            )));
        }
        for &a in &axes {
            let (lo, hi) = region.axis(a)?;
            if lo == hi {
                return Err(Error::DegenerateCell { axis: a });
            }
        }
        Ok(Self {
            region,
            axes,
            pins: others.into_iter().zip(sides.iter().copied()).collect(),
        })
    }

    /// The full box as a top-dimensional cell.
    pub fn whole(region: BoxRegion) -> Result<Self> {
        let axes = (1..=region.dim()).collect();
        Self::new(region, axes, &[])
    }

    /// Every `p`-dimensional face of the box: all axis subsets, all pin sides.
    pub fn faces(region: &BoxRegion, p: usize) -> Result<Vec<Self>> {
        let dim = region.dim();
        let mut out = vec![];
        for mask in 0u32..(1 << dim) {
            if mask.count_ones() as usize != p {
                continue;
            }
            let axes: Vec<usize> = (1..=dim).filter(|a| mask & (1 << (a - 1)) != 0).collect();
            let q = dim - p;
            for side_bits in 0u32..(1 << q) {
                let sides: Vec<Side> = (0..q)
                    .map(|k| if side_bits & (1 << k) != 0 { Side::Hi } else { Side::Lo })
                    .collect();
                out.push(Self::new(region.clone(), axes.clone(), &sides)?);
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[usize] {
        &self.axes
    }

    fn pin_value(&self, axis: usize, side: Side) -> Result<GaussianRational> {
        match side {
            Side::Lo => self.region.lo(axis),
            Side::Hi => self.region.hi(axis),
        }
    }

    /// `∫ g` over the spanning axes in `span`, with `pins` substituted.
    fn integrate(
        &self,
        g: &MultiPoly,
        span: &[usize],
        pins: &[(usize, GaussianRational)],
    ) -> Result<GaussianRational> {
        let mut acc = g.clone();
        for (axis, v) in pins {
            acc = acc.substitute(*axis, v)?;
        }
        for &a in span {
            acc = acc.definite_integral(a, &self.region.lo(a)?, &self.region.hi(a)?)?;
        }
        acc.as_constant().ok_or_else(|| {
            Error::Validation("integrand depends on variables outside the cell's box".into())
        })
    }

    fn base_pins(&self) -> Result<Vec<(usize, GaussianRational)>> {
        self.pins
            .iter()
            .map(|&(a, s)| Ok((a, self.pin_value(a, s)?)))
            .collect()
    }
}

/// `∫_cell dω` computed directly.
pub fn integral_of_derivative(omega: &DifferentialForm, cell: &Cell) -> Result<GaussianRational> {
    check_degree(omega, cell)?;
    let dw = omega
        .exterior_derivative()
        .ok_or_else(|| Error::Shape("form has top degree".into()))?;
    cell.integrate(dw.component(&cell.axes), &cell.axes, &cell.base_pins()?)
}

/// `∮_∂cell ω` with the induced orientation.
pub fn boundary_integral(omega: &DifferentialForm, cell: &Cell) -> Result<GaussianRational> {
    check_degree(omega, cell)?;
    let base = cell.base_pins()?;
    let mut total = GaussianRational::from(0);
    for (k, &a) in cell.axes.iter().enumerate() {
        let rest: Vec<usize> = cell.axes.iter().copied().filter(|&b| b != a).collect();
        let integrand = omega.component(&rest);
        for (side, outward) in [(Side::Hi, true), (Side::Lo, false)] {
            let mut pins = base.clone();
            pins.push((a, cell.pin_value(a, side)?));
            let v = cell.integrate(integrand, &rest, &pins)?;
            let positive = (k % 2 == 0) == outward;
            total = if positive { &total + &v } else { &total - &v };
        }
    }
    Ok(total)
}

fn check_degree(omega: &DifferentialForm, cell: &Cell) -> Result<()> {
    if omega.dim() != cell.region.dim() {
        return Err(Error::Shape(format!(
            "{}D form on a {}D box",
            omega.dim(),
            cell.region.dim()
        )));
    }
    if omega.degree() + 1 != cell.dim() {
        return Err(Error::Shape(format!(
            "a {}-form pairs with a {}-cell, got a {}-cell",
            omega.degree(),
            omega.degree() + 1,
            cell.dim()
        )));
    }
    Ok(())
}

/// `∫_cell dω − ∮_∂cell ω`, exactly zero for polynomial forms.
pub fn stokes_residual(omega: &DifferentialForm, cell: &Cell) -> Result<GaussianRational> {
    Ok(&integral_of_derivative(omega, cell)? - &boundary_integral(omega, cell)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Scalar, Tensor};

    #[test]
    fn x1_dx2_over_unit_square() {
        let region = BoxRegion::unit(3).unwrap();
        let cell = Cell::new(region, vec![1, 2], &[Side::Lo]).unwrap();
        let x1 = MultiPoly::var(1).unwrap();
        let omega = DifferentialForm::from_vector(&Tensor::vector(vec![
            MultiPoly::zero(),
            x1,
            MultiPoly::zero(),
        ]))
        .unwrap();
        assert_eq!(integral_of_derivative(&omega, &cell).unwrap(), GaussianRational::from(1));
        assert_eq!(boundary_integral(&omega, &cell).unwrap(), GaussianRational::from(1));
        assert!(stokes_residual(&omega, &cell).unwrap().is_zero());
    }

    #[test]
    fn zero_form_zero_residual() {
        let region = BoxRegion::unit(4).unwrap();
        let omega = DifferentialForm::zero(4, 3).unwrap();
        let cell = Cell::whole(region).unwrap();
        assert!(stokes_residual(&omega, &cell).unwrap().is_zero());
    }

    #[test]
    fn degenerate_cell_rejected() {
        let region = BoxRegion::from_ints(&[(0, 1), (2, 2), (0, 1)]).unwrap();
        assert_eq!(
            Cell::new(region.clone(), vec![1, 2], &[Side::Lo]),
            Err(Error::DegenerateCell { axis: 2 })
        );
        // pinning the zero-extent axis is fine
        assert!(Cell::new(region, vec![1, 3], &[Side::Hi]).is_ok());
    }

    #[test]
    fn face_enumeration_counts() {
        let region = BoxRegion::unit(4).unwrap();
        // C(4,3) axis choices × 2 sides
        assert_eq!(Cell::faces(&region, 3).unwrap().len(), 8);
        assert_eq!(Cell::faces(&region, 2).unwrap().len(), 24);
        assert_eq!(Cell::faces(&region, 4).unwrap().len(), 1);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let region = BoxRegion::unit(3).unwrap();
        let cell = Cell::whole(region).unwrap();
        let omega = DifferentialForm::zero(3, 1).unwrap();
        assert!(matches!(stokes_residual(&omega, &cell), Err(Error::Shape(_))));
    }
}
