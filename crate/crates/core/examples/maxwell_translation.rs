//! Reading the magnetostatic equations in 4D gives the full Maxwell system.
//!
//! Builds a field from potentials, then breaks Faraday's law on purpose and
//! shows the 4D residual tracking the 3+1 one with the calibrated ratio.
//!
//! cargo run --example maxwell_translation

use selfsim::algebra::MultiPoly;
use selfsim::electrodynamics::{
    check_equivalence, maxwell_homogeneous_residuals, parse_field_spec, Calibration, EMField3,
};

fn x(k: usize) -> MultiPoly {
    MultiPoly::var(k).unwrap()
}

fn main() -> selfsim::Result<()> {
    let cal = Calibration::get();
    println!("E sign s = {:+}, Lorentz sign s' = {:+}", cal.e_sign.value(), cal.lorentz_sign);
    println!("homogeneous ratios   {:?}", cal.homogeneous_ratios);
    println!("inhomogeneous ratios {:?}", cal.inhomogeneous_ratios);

    // A = (x2 t, x3^2, x1), phi = x1 x2
    let a = [&x(2) * &x(4), &x(3) * &x(3), x(1)];
    let phi = &x(1) * &x(2);
    let field = EMField3::with_consistent_sources(
        EMField3::from_potentials(&a, &phi).e,
        EMField3::from_potentials(&a, &phi).b,
    );
    let h = maxwell_homogeneous_residuals(&field);
    println!("\npotential field: 3+1 zero {}, 4D zero {}", h.three_plus_one_zero(), h.four_d_zero());
    println!("equivalence holds: {}", check_equivalence(&field, cal).holds());

    let broken = parse_field_spec("E2 = x1\nB3 = t\n")?;
    let h = maxwell_homogeneous_residuals(&broken);
    println!("\nE2 = x1, B3 = t (Faraday violated):");
    println!("  (curl E + dB/dt)_3 = {}", h.faraday[2]);
    println!("  4D slot 3          = {}", h.four_d.component(3)?);
    println!("equivalence holds: {}", check_equivalence(&broken, cal).holds());
    Ok(())
}
