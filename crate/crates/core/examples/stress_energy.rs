//! The stress-energy tensor from Ω^(2) = ½ F⊗F against its direct form.
//!
//! cargo run --example stress_energy

use selfsim::algebra::{AntisymmetricDyad, GaussianRational as Q, Scalar};
use selfsim::stress_energy::{omega2, symmetry_sweep, theta2_direct, theta_k};

fn main() -> selfsim::Result<()> {
    let f = AntisymmetricDyad::from_upper(4, |i, j| match (i, j) {
        (1, 2) => Q::from(1),
        (3, 4) => Q::from(2),
        (1, 4) => Q::imag(1, 1),
        _ => Q::zero(),
    });
    let omega = omega2(&f)?;
    let sweep = symmetry_sweep(omega.as_tensor())?;
    println!("Ω symmetries: {} tuples, {} violations", sweep.tuples_checked, sweep.violations.len());

    let via_omega = theta_k(&omega, 2)?;
    let direct = theta2_direct(&f)?;
    println!("Θ from Ω equals direct Θ: {}", via_omega == direct);
    for mu in 1..=4 {
        let row: Vec<String> = (1..=4).map(|nu| format!("{:>8}", direct.get(mu, nu).unwrap().to_string())).collect();
        println!("  {}", row.join(" "));
    }
    println!("trace = {}, symmetric = {}", direct.trace(), direct.is_symmetric());
    Ok(())
}
