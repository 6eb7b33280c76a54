//! Exact generalized Stokes theorem on faces of rational boxes.
//!
//! cargo run --example stokes

use selfsim::algebra::{AntisymmetricDyad, BoxRegion, MultiPoly, Tensor};
use selfsim::exterior::{boundary_integral, integral_of_derivative, stokes_residual, Cell, DifferentialForm, Side};

fn main() -> selfsim::Result<()> {
    let x = |k| MultiPoly::var(k).unwrap();

    // ω = x1 dx2 on the unit square x3 = 0: ∫ dω = ∮ ω = 1
    let omega = DifferentialForm::from_vector(&Tensor::vector(vec![MultiPoly::zero(), x(1), MultiPoly::zero()]))?;
    let cell3 = Cell::new(BoxRegion::unit(3)?, vec![1, 2], &[Side::Lo])?;
    println!("x1 dx2 on the unit square: {} = {}", integral_of_derivative(&omega, &cell3)?, boundary_integral(&omega, &cell3)?);

    // a 2-form in 4D over the x1-x3-x4 face of a box
    let region = BoxRegion::from_ints(&[(0, 2), (-1, 1), (1, 3), (0, 1)])?;
    let c = AntisymmetricDyad::from_upper(4, |i, j| &(&x(i) * &x(j)) + &x(4).scale(&selfsim::algebra::GaussianRational::from((i + j) as i64)));
    let omega = DifferentialForm::from_dyad(&c)?;
    for cell in Cell::faces(&region, 3)? {
        println!(
            "axes {:?}: ∫dω = {:>8}  residual {}",
            cell.axes(),
            integral_of_derivative(&omega, &cell)?.to_string(),
            stokes_residual(&omega, &cell)?
        );
    }
    Ok(())
}
