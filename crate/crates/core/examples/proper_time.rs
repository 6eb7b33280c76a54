//! Proper time and four-velocity along worldlines, in 3D and 4D mode.
//!
//! cargo run --example proper_time

use num_complex::Complex64;
use selfsim::kinematics::{evaluate, proper_time, KinematicsConfig, Mode, Worldline};

fn main() -> selfsim::Result<()> {
    let cfg = KinematicsConfig::default();

    let uniform = Worldline::uniform([0.6, 0.0, 0.0], 0.0, 10.0, 11, Mode::D4)?;
    let tau = proper_time(&uniform, &cfg)?;
    println!("v = 0.6c:");
    for (t, tau) in uniform.times().iter().zip(&tau).step_by(5) {
        println!("  t = {t:5.2}  T = {tau:.12}");
    }

    // circular motion with drift, sampled
    let helix = Worldline::from_fn(
        |t| [0.5 * t.cos(), 0.5 * t.sin(), 0.2 * t],
        0.0,
        6.0,
        600,
        Mode::D4,
    )?;
    let k = evaluate(&helix, &cfg)?;
    let ic = Complex64::new(0.0, cfg.c);
    let worst = k.velocity.iter().map(|v| (v.length() - ic).norm()).fold(0.0, f64::max);
    let ortho = k.velocity.iter().zip(&k.force).map(|(v, f)| v.dot(f).norm()).fold(0.0, f64::max);
    println!("\nhelix: T(6) = {:.9}", k.proper_time.last().unwrap());
    println!("  max |L(V) - ic| = {worst:.2e}");
    println!("  max |V . F|     = {ortho:.2e}");
    println!("  V at t = 3: {:.6}", k.velocity[300]);

    let classical = helix.with_mode(Mode::D3);
    let k3 = evaluate(&classical, &cfg)?;
    println!("\nsame path in 3D mode: T(6) = {}, V at t = 3: {}", k3.proper_time.last().unwrap(), k3.velocity[300]);

    if let Err(e) = Worldline::uniform([1.2, 0.0, 0.0], 0.0, 1.0, 5, Mode::D4).and_then(|w| proper_time(&w, &cfg)) {
        println!("\nfaster than light: {e}");
    }
    Ok(())
}
