//! Coordinate vectors, generalized length, proper time and the derived
//! velocity, acceleration, momentum and force, in 3D and Euclidean 4D.
//!
//! In 4D mode an event is `x = (x⃗, i c t)`. With `x' = dx/dt` and
//! `g = dT/dt`, both modes share
//!
//! ```text
//! V = x' / g        𝒜 = x'' / g² − x' g' / g³        P = m V        𝓕 = m 𝒜
//! ```
//!
//! where `g = 1` in 3D (`T = t`) and `g = −i L(x') / c = √(1 − v²/c²)` in 4D.

mod numerics;
mod worldline;

pub use numerics::{cumulative_integral, derivatives, fornberg_weights};
pub use worldline::{Mode, Worldline};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Physical constants of a kinematics run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KinematicsConfig {
    pub c: f64,
    pub m: f64,
    pub q: f64,
}

impl Default for KinematicsConfig {
    fn default() -> Self {
        KinematicsConfig { c: 1.0, m: 1.0, q: 1.0 }
    }
}

impl KinematicsConfig {
    pub fn new(c: f64, m: f64, q: f64) -> Result<Self> {
        let cfg = KinematicsConfig { c, m, q };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(Error::Parameter(format!("c must be positive, got {}", self.c)));
        }
        if !(self.m.is_finite() && self.m > 0.0) {
            return Err(Error::Parameter(format!("m must be positive, got {}", self.m)));
        }
        if !self.q.is_finite() {
            return Err(Error::Parameter(format!("q must be finite, got {}", self.q)));
        }
        Ok(())
    }
}

/// A 3- or 4-component complex vector.
#[derive(Clone, Debug, PartialEq)]
pub struct FourVector(pub Vec<Complex64>);

impl FourVector {
    pub fn new(components: Vec<Complex64>) -> Self {
        FourVector(components)
    }

    pub fn real(components: &[f64]) -> Self {
        FourVector(components.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn components(&self) -> &[Complex64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Bilinear (not Hermitian) product `Σ x_k y_k`.
    pub fn dot(&self, other: &FourVector) -> Complex64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, s: Complex64) -> FourVector {
        FourVector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn length(&self) -> Complex64 {
        gen_length(&self.0)
    }

    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl std::fmt::Display for FourVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let prec = f.precision();
        let num = |x: f64, sign: bool| match (prec, sign) {
            (Some(p), false) => format!("{x:.p$}"),
            (Some(p), true) => format!("{x:+.p$}"),
            (None, false) => format!("{x}"),
            (None, true) => format!("{x:+}"),
        };
        f.write_str("(")?;
        for (k, z) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            match (z.re == 0.0, z.im == 0.0) {
                (_, true) => f.write_str(&num(z.re, false))?,
                (true, false) => write!(f, "{}i", num(z.im, false))?,
                (false, false) => write!(f, "{}{}i", num(z.re, false), num(z.im, true))?,
            }
        }
        f.write_str(")")
    }
}

/// Generalized length `L(x) = √(Σ x_k²)`, principal branch.
///
/// A negative real radicand maps to the positive imaginary axis, so
/// `L((0, 0, 0, 2i)) = 2i`.
pub fn gen_length(x: &[Complex64]) -> Complex64 {
    let mut s: Complex64 = x.iter().map(|a| a * a).sum();
    if s.im == 0.0 {
        // -0.0 would select the lower branch.
        s.im = 0.0;
    }
    s.sqrt()
}

/// Everything computed along a worldline, one entry per sample.
#[derive(Clone, Debug)]
pub struct Kinematics {
    pub t: Vec<f64>,
    pub proper_time: Vec<f64>,
    pub event: Vec<FourVector>,
    pub velocity: Vec<FourVector>,
    pub acceleration: Vec<FourVector>,
    pub momentum: Vec<FourVector>,
    pub force: Vec<FourVector>,
}

struct Local {
    dx: Vec<FourVector>,
    ddx: Vec<FourVector>,
    g: Vec<f64>,
    dg: Vec<f64>,
}

fn lift(mode: Mode, v: [f64; 3], fourth: Complex64) -> FourVector {
    let mut out: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    if mode == Mode::D4 {
        out.push(fourth);
    }
    FourVector(out)
}

fn superluminal(w: &Worldline, k: usize, speed: f64, c: f64) -> Error {
    let t = w.times();
    let (a, b) = if k + 1 < t.len() { (t[k], t[k + 1]) } else { (t[k.saturating_sub(1)], t[k]) };
    Error::Causality { t0: a, t1: b, speed, c }
}

fn local_quantities(w: &Worldline, cfg: &KinematicsConfig) -> Result<Local> {
    cfg.validate()?;
    let (v, a) = w.coordinate_derivatives()?;
    let mode = w.mode();
    let ic = Complex64::new(0.0, cfg.c);
    let dx: Vec<FourVector> = v.iter().map(|&vi| lift(mode, vi, ic)).collect();
    let ddx: Vec<FourVector> = a.iter().map(|&ai| lift(mode, ai, Complex64::new(0.0, 0.0))).collect();
    let (g, dg) = match mode {
        Mode::D3 => (vec![1.0; v.len()], vec![0.0; v.len()]),
        Mode::D4 => {
            check_subluminal(w, &v, cfg.c)?;
            let g: Vec<f64> = dx.iter().map(|d| (-Complex64::i() * d.length() / cfg.c).re).collect();
            let dg = v
                .iter()
                .zip(&a)
                .zip(&g)
                .map(|((vi, ai), gi)| {
                    let va: f64 = (0..3).map(|k| vi[k] * ai[k]).sum();
                    -va / (cfg.c * cfg.c * gi)
                })
                .collect();
            (g, dg)
        }
    };
    Ok(Local { dx, ddx, g, dg })
}

fn check_subluminal(w: &Worldline, v: &[[f64; 3]], c: f64) -> Result<()> {
    let norm = |u: &[f64; 3]| u.iter().map(|x| x * x).sum::<f64>().sqrt();
    for (k, vk) in v.iter().enumerate() {
        let s = norm(vk);
        if s >= c {
            return Err(superluminal(w, k, s, c));
        }
    }
    if !w.is_polynomial() {
        let t = w.times();
        let x = w.positions();
        for k in 0..t.len() - 1 {
            let d = [0, 1, 2].map(|i| x[k + 1][i] - x[k][i]);
            let s = norm(&d) / (t[k + 1] - t[k]);
            if s >= c {
                return Err(superluminal(w, k, s, c));
            }
        }
    }
    Ok(())
}

/// Proper time `T(t)` at every sample, with `T(t₀) = 0`.
///
/// 3D mode returns `t − t₀`. In 4D the integrand is `−i L(dx/dt) / c`:
/// exact for constant-velocity polynomials, Gauss–Legendre per interval for
/// other polynomials and a fourth-order cumulative rule for samples.
pub fn proper_time(w: &Worldline, cfg: &KinematicsConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    let t = w.times();
    let t0 = t[0];
    if w.mode() == Mode::D3 {
        return Ok(t.iter().map(|x| x - t0).collect());
    }
    if w.is_polynomial() {
        let rate = |t: f64| -> Result<f64> {
            let v2 = w.speed_sq_at(t).unwrap_or(0.0);
            if v2 >= cfg.c * cfg.c {
                return Err(Error::Causality { t0: t, t1: t, speed: v2.sqrt(), c: cfg.c });
            }
            let dx = [Complex64::new(v2.sqrt(), 0.0), Complex64::new(0.0, cfg.c)];
            Ok((-Complex64::i() * gen_length(&dx) / cfg.c).re)
        };
        if w.is_uniform() {
            let g = rate(t0).map_err(|e| match e {
                Error::Causality { speed, c, .. } => Error::Causality { t0, t1: t[t.len() - 1], speed, c },
                other => other,
            })?;
            return Ok(t.iter().map(|x| g * (x - t0)).collect());
        }
        for (k, &tk) in t.iter().enumerate() {
            if let Err(Error::Causality { speed, .. }) = rate(tk) {
                return Err(superluminal(w, k, speed, cfg.c));
            }
        }
        for k in 0..t.len() - 1 {
            for (z, _) in numerics::GAUSS_LEGENDRE_5 {
                let tz = (t[k] + t[k + 1]) / 2.0 + z * (t[k + 1] - t[k]) / 2.0;
                if let Err(Error::Causality { speed, .. }) = rate(tz) {
                    return Err(Error::Causality { t0: t[k], t1: t[k + 1], speed, c: cfg.c });
                }
            }
        }
        return Ok(numerics::cumulative_integral_fn(t, |x| rate(x).unwrap_or(f64::NAN)));
    }
    let local = local_quantities(w, cfg)?;
    Ok(numerics::cumulative_integral(t, &local.g))
}

/// `V = dx/dT` at every sample.
pub fn four_velocity(w: &Worldline, cfg: &KinematicsConfig) -> Result<Vec<FourVector>> {
    let l = local_quantities(w, cfg)?;
    Ok(velocity_from(&l))
}

/// `𝒜 = d²x/dT²` at every sample.
pub fn four_acceleration(w: &Worldline, cfg: &KinematicsConfig) -> Result<Vec<FourVector>> {
    let l = local_quantities(w, cfg)?;
    Ok(acceleration_from(&l))
}

/// `P = m V`.
pub fn momentum(w: &Worldline, cfg: &KinematicsConfig) -> Result<Vec<FourVector>> {
    let m = Complex64::new(cfg.m, 0.0);
    Ok(four_velocity(w, cfg)?.iter().map(|v| v.scale(m)).collect())
}

/// `𝓕 = m 𝒜`.
pub fn force(w: &Worldline, cfg: &KinematicsConfig) -> Result<Vec<FourVector>> {
    let m = Complex64::new(cfg.m, 0.0);
    Ok(four_acceleration(w, cfg)?.iter().map(|a| a.scale(m)).collect())
}

fn velocity_from(l: &Local) -> Vec<FourVector> {
    l.dx.iter().zip(&l.g).map(|(d, g)| d.scale(Complex64::new(1.0 / g, 0.0))).collect()
}

fn acceleration_from(l: &Local) -> Vec<FourVector> {
    (0..l.g.len())
        .map(|i| {
            let (g, dg) = (l.g[i], l.dg[i]);
            let a = l.ddx[i].scale(Complex64::new(1.0 / (g * g), 0.0));
            let b = l.dx[i].scale(Complex64::new(dg / (g * g * g), 0.0));
            FourVector(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
        })
        .collect()
}

/// Evaluates every kinematic quantity along `w`.
pub fn evaluate(w: &Worldline, cfg: &KinematicsConfig) -> Result<Kinematics> {
    let l = local_quantities(w, cfg)?;
    let tau = proper_time(w, cfg)?;
    let m = Complex64::new(cfg.m, 0.0);
    let velocity = velocity_from(&l);
    let acceleration = acceleration_from(&l);
    let ict = |t: f64| Complex64::new(0.0, cfg.c * t);
    Ok(Kinematics {
        t: w.times().to_vec(),
        proper_time: tau,
        event: w.positions().iter().zip(w.times()).map(|(x, &t)| lift(w.mode(), *x, ict(t))).collect(),
        momentum: velocity.iter().map(|v| v.scale(m)).collect(),
        force: acceleration.iter().map(|a| a.scale(m)).collect(),
        velocity,
        acceleration,
    })
}
