use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};

type Point3 = [f64; 3];

/// Whether kinematics runs in classical 3D (`T = t`) or Euclidean 4D mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    D3,
    D4,
}

impl Mode {
    pub fn dim(self) -> usize {
        match self {
            Mode::D3 => 3,
            Mode::D4 => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Path3 {
    /// Coefficients in ascending powers of `t`, per spatial axis.
    Polynomial([Vec<f64>; 3]),
    Sampled(Vec<[f64; 3]>),
}

/// A trajectory `x⃗(t)` on a strictly increasing time grid.
#[derive(Clone, Debug, PartialEq)]
pub struct Worldline {
    mode: Mode,
    times: Vec<f64>,
    path: Path3,
}

fn check_times(times: &[f64]) -> Result<()> {
    if times.is_empty() {
        return Err(Error::InsufficientData("worldline has no samples".into()));
    }
    if let Some(t) = times.iter().find(|t| !t.is_finite()) {
        return Err(Error::Validation(format!("non-finite time {t}")));
    }
    if let Some(k) = times.windows(2).position(|w| w[1] <= w[0]) {
        return Err(Error::Validation(format!(
            "time must be strictly increasing: t[{}] = {} follows t[{}] = {}",
            k + 1,
            times[k + 1],
            k,
            times[k]
        )));
    }
    Ok(())
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, a| acc * t + a)
}

fn derivative_coeffs(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(k, a)| k as f64 * a).collect()
}

impl Worldline {
    /// Polynomial worldline `x_k(t) = Σ_n coeffs[k][n] tⁿ`, evaluated on `times`.
    pub fn polynomial(coeffs: [Vec<f64>; 3], times: Vec<f64>, mode: Mode) -> Result<Self> {
        check_times(&times)?;
        Ok(Worldline { mode, times, path: Path3::Polynomial(coeffs) })
    }

    /// Polynomial worldline on `n` evenly spaced times in `[t0, t1]`.
    pub fn polynomial_grid(coeffs: [Vec<f64>; 3], t0: f64, t1: f64, n: usize, mode: Mode) -> Result<Self> {
        Self::polynomial(coeffs, linspace(t0, t1, n)?, mode)
    }

    /// Constant-velocity motion from the origin.
    pub fn uniform(velocity: [f64; 3], t0: f64, t1: f64, n: usize, mode: Mode) -> Result<Self> {
        let coeffs = velocity.map(|v| vec![0.0, v]);
        Self::polynomial_grid(coeffs, t0, t1, n, mode)
    }

    pub fn sampled(times: Vec<f64>, points: Vec<[f64; 3]>, mode: Mode) -> Result<Self> {
        if times.len() != points.len() {
            return Err(Error::Shape(format!(
                "{} times but {} positions",
                times.len(),
                points.len()
            )));
        }
        check_times(&times)?;
        if points.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Validation("non-finite position".into()));
        }
        Ok(Worldline { mode, times, path: Path3::Sampled(points) })
    }

    /// Samples `f` at `n` evenly spaced times in `[t0, t1]`.
    pub fn from_fn<F: Fn(f64) -> [f64; 3]>(f: F, t0: f64, t1: f64, n: usize, mode: Mode) -> Result<Self> {
        let times = linspace(t0, t1, n)?;
        let points = times.iter().map(|&t| f(t)).collect();
        Self::sampled(times, points, mode)
    }

    /// Reads `t,x1,x2,x3` CSV data.
    pub fn from_csv<R: Read>(reader: R, mode: Mode) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).flexible(true).from_reader(reader);
        let header = rdr.headers().map_err(csv_error)?.clone();
        let expected = ["t", "x1", "x2", "x3"];
        if header.len() != 4 || header.iter().zip(expected).any(|(h, e)| h != e) {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!(
                    "expected header `t,x1,x2,x3`, found `{}`",
                    header.iter().collect::<Vec<_>>().join(",")
                ),
            });
        }
        let mut times = Vec::new();
        let mut points = Vec::new();
        for record in rdr.records() {
            let record = record.map_err(csv_error)?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            if record.len() != 4 {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: format!("expected 4 fields, found {}", record.len()),
                });
            }
            let mut row = [0.0; 4];
            for (k, field) in record.iter().enumerate() {
                row[k] = field.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| Error::Parse {
                    line,
                    column: k + 1,
                    message: format!("`{field}` is not a finite decimal number"),
                })?;
            }
            if let Some(&prev) = times.last() {
                if row[0] <= prev {
                    return Err(Error::Parse {
                        line,
                        column: 1,
                        message: format!("time {} does not increase past {prev}", row[0]),
                    });
                }
            }
            times.push(row[0]);
            points.push([row[1], row[2], row[3]]);
        }
        Self::sampled(times, points, mode)
    }

    pub fn from_csv_path(path: impl AsRef<Path>, mode: Mode) -> Result<Self> {
        let file = std::fs::File::open(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_csv(file, mode)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self.path, Path3::Polynomial(_))
    }

    /// True for polynomial worldlines of degree at most one.
    pub fn is_uniform(&self) -> bool {
        match &self.path {
            Path3::Polynomial(c) => c.iter().all(|p| p.iter().skip(2).all(|&a| a == 0.0)),
            Path3::Sampled(_) => false,
        }
    }

    pub fn positions(&self) -> Vec<[f64; 3]> {
        match &self.path {
            Path3::Polynomial(c) => self
                .times
                .iter()
                .map(|&t| [0, 1, 2].map(|k| horner(&c[k], t)))
                .collect(),
            Path3::Sampled(p) => p.clone(),
        }
    }

    /// Velocity and acceleration with respect to coordinate time at every
    /// sample: analytic for polynomials, 5-point stencils for samples.
    pub(crate) fn coordinate_derivatives(&self) -> Result<(Vec<Point3>, Vec<Point3>)> {
        match &self.path {
            Path3::Polynomial(c) => {
                let d1 = c.clone().map(|p| derivative_coeffs(&p));
                let d2 = d1.clone().map(|p| derivative_coeffs(&p));
                let at = |d: &[Vec<f64>; 3]| -> Vec<[f64; 3]> {
                    self.times.iter().map(|&t| [0, 1, 2].map(|k| horner(&d[k], t))).collect()
                };
                Ok((at(&d1), at(&d2)))
            }
            Path3::Sampled(p) => {
                if p.len() < 5 {
                    return Err(Error::InsufficientData(format!(
                        "sampled worldline needs at least 5 points, got {}",
                        p.len()
                    )));
                }
                let mut v = vec![[0.0; 3]; p.len()];
                let mut a = vec![[0.0; 3]; p.len()];
                for k in 0..3 {
                    let xs: Vec<f64> = p.iter().map(|q| q[k]).collect();
                    let (d1, d2) = super::numerics::derivatives(&self.times, &xs);
                    for i in 0..p.len() {
                        v[i][k] = d1[i];
                        a[i][k] = d2[i];
                    }
                }
                Ok((v, a))
            }
        }
    }

    /// Analytic speed² at arbitrary `t`, for polynomial worldlines.
    pub(crate) fn speed_sq_at(&self, t: f64) -> Option<f64> {
        match &self.path {
            Path3::Polynomial(c) => Some(
                c.iter()
                    .map(|p| horner(&derivative_coeffs(p), t).powi(2))
                    .sum(),
            ),
            Path3::Sampled(_) => None,
        }
    }
}

fn linspace(t0: f64, t1: f64, n: usize) -> Result<Vec<f64>> {
    if n < 2 || t1 <= t0 {
        return Err(Error::Validation(format!(
            "grid needs n >= 2 and t1 > t0 (got n = {n}, [{t0}, {t1}])"
        )));
    }
    let h = (t1 - t0) / (n - 1) as f64;
    Ok((0..n).map(|k| if k == n - 1 { t1 } else { t0 + h * k as f64 }).collect())
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::Parse { line, column: 1, message: e.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let w = Worldline::from_csv("t,x1,x2,x3\n0,0,0,0\n1, 0.5,0,0\n2,1,0,0\n".as_bytes(), Mode::D4).unwrap();
        assert_eq!(w.times(), &[0.0, 1.0, 2.0]);
        assert_eq!(w.positions()[1], [0.5, 0.0, 0.0]);
    }

    #[test]
    fn csv_errors_name_lines() {
        let err = Worldline::from_csv("t,x1,x2,x3\n0,0,0,0\n1,abc,0,0\n".as_bytes(), Mode::D4).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 2, .. }), "{err:?}");
        let err = Worldline::from_csv("t,x1,x2,x3\n0,0,0,0\n1,0,0,0\n1,0,0,0\n".as_bytes(), Mode::D4).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err:?}");
        let err = Worldline::from_csv("time,x,y,z\n0,0,0,0\n".as_bytes(), Mode::D4).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = Worldline::from_csv("t,x1,x2,x3\n0,0,0\n".as_bytes(), Mode::D4).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn rejects_non_monotonic_times() {
        let r = Worldline::sampled(vec![0.0, 2.0, 1.0], vec![[0.0; 3]; 3], Mode::D3);
        assert!(matches!(r, Err(Error::Validation(_))));
    }

    #[test]
    fn polynomial_derivatives() {
        let w = Worldline::polynomial([vec![1.0, 2.0, 3.0], vec![], vec![0.0]], vec![2.0], Mode::D3).unwrap();
        let (v, a) = w.coordinate_derivatives().unwrap();
        assert_eq!(w.positions()[0], [17.0, 0.0, 0.0]);
        assert_eq!(v[0], [14.0, 0.0, 0.0]);
        assert_eq!(a[0], [6.0, 0.0, 0.0]);
    }
}
