//! Recovering a four-potential from a closed field strength.
//!
//! cargo run --example poincare_potential

use selfsim::algebra::MultiPoly;
use selfsim::electrodynamics::{
    build_field_strength, potential_residuals, reconstruct_potential, EMField3, FieldStrength,
};
use selfsim::exterior::{big_curl, poincare_potential, DifferentialForm};
use selfsim::random::{seeded_rng, PolySampler};

fn main() -> selfsim::Result<()> {
    // uniform magnetic field along x3
    let b = [MultiPoly::zero(), MultiPoly::zero(), MultiPoly::int(2)];
    let f = build_field_strength(&EMField3::vacuum(Default::default(), b));
    let a = reconstruct_potential(&f)?;
    println!("B = (0, 0, 2):  A = {:?}", a.components());

    // random exact field F = dA
    let mut rng = seeded_rng(5, 0);
    let a0 = PolySampler::new(3).vector(&mut rng, 4, 4);
    let f = FieldStrength::new(big_curl(&a0)?)?;
    let a = reconstruct_potential(&f)?;
    let (rb, re) = potential_residuals(&f, &a)?;
    println!("random F = dA:  curl4_vec A = B_dyad {}, chi(iA) = E_dyad {}", rb.is_zero(), re.is_zero());

    // the homotopy operator refuses forms that are not closed
    let x1 = MultiPoly::var(1)?;
    let omega = DifferentialForm::two_form_from_axial(&selfsim::algebra::Tensor::vector(vec![
        x1,
        MultiPoly::zero(),
        MultiPoly::zero(),
    ]))?;
    match poincare_potential(&omega) {
        Ok(_) => println!("unexpected potential"),
        Err(e) => println!("B = (x1, 0, 0): {e}"),
    }
    Ok(())
}
