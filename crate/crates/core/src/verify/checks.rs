use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{CheckMode, CheckResult, Residual, Status};
use crate::algebra::{
    levi_civita, AntisymmetricDyad, BoxRegion, GaussianRational, MultiPoly, Scalar, Tensor, TensorField,
};
use crate::electrodynamics::{
    b_dyad, check_equivalence, continuity_residual, continuity_residual_3, dual, e_dyad, field_contraction,
    lorentz3, lorentz4, maxwell_homogeneous_residuals, potential_residuals, reconstruct_potential,
    rotation_plane_count, skew_from_axial, Calibration, EMField3, FieldStrength,
};
use crate::error::Result;
use crate::exterior::{
    big_curl, chi, cross3, cross4, curl3, curl4_dyad, curl4_vec, div_dyad, div_vec, grad, homotopy_operator,
    stokes_residual, Cell, DifferentialForm, Side,
};
use crate::kinematics::{
    evaluate, four_velocity, gen_length, proper_time, FourVector, KinematicsConfig, Mode, Worldline,
};
use crate::polytopes::{n_platonic, n_star_inclusive, PolytopeCount};
use crate::random::{constant_dyad, constant_vector, seeded_rng, small_coeff, PolySampler};
use crate::stress_energy::{omega2, symmetry_sweep, theta2_direct, theta_k, OmegaTensor};

pub(super) struct Context<'a> {
    pub seed: u64,
    pub trials: u32,
    pub degree: u32,
    pub cal: &'a Calibration,
}

pub(super) enum Outcome {
    Exact {
        trials: u32,
        failures: u32,
        first_failure: Option<String>,
        note: String,
    },
    Float {
        max_abs: f64,
        tol: f64,
        violations: Vec<String>,
        note: String,
    },
}

type Body = fn(&Context, &mut ChaCha8Rng) -> Result<Outcome>;

pub(super) struct Check {
    pub name: &'static str,
    formula: &'static str,
    mode: CheckMode,
    body: Body,
}

/// FNV-1a, so each check's random stream depends only on its name.
fn stream_of(name: &str) -> u64 {
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

impl Check {
    pub fn run(&self, ctx: &Context) -> CheckResult {
        let mut rng = seeded_rng(ctx.seed, stream_of(self.name));
        let (status, residual, details) = match (self.body)(ctx, &mut rng) {
            Ok(Outcome::Exact { trials, failures, first_failure, note }) => {
                let mut details = if trials == 1 { "1 trial".to_string() } else { format!("{trials} trials") };
                if !note.is_empty() {
                    details = format!("{details}, {note}");
                }
                if let Some(f) = first_failure {
                    details = format!("{failures} of {trials} trials nonzero; first: {f}");
                }
                let ok = failures == 0;
                (if ok { Status::Pass } else { Status::Fail }, Residual::ExactZero(ok), details)
            }
            Ok(Outcome::Float { max_abs, tol, violations, note }) => {
                let ok = max_abs.is_finite() && max_abs <= tol && violations.is_empty();
                let mut details = if tol == 0.0 { "tol 0".to_string() } else { format!("tol {tol:e}") };
                if !note.is_empty() {
                    details = format!("{details}, {note}");
                }
                if let Some(v) = violations.first() {
                    details = format!("{details}; {} violations, first: {v}", violations.len());
                }
                (if ok { Status::Pass } else { Status::Fail }, Residual::MaxAbs(max_abs), details)
            }
            Err(e) => {
                let residual = match self.mode {
                    CheckMode::Exact => Residual::ExactZero(false),
                    CheckMode::Float => Residual::MaxAbs(f64::NAN),
                };
                (Status::Fail, residual, format!("error: {e}"))
            }
        };
        CheckResult {
            name: self.name.to_string(),
            paper_ref: self.formula.to_string(),
            status,
            mode: self.mode,
            residual,
            details,
        }
    }
}

pub(super) fn registry() -> Vec<Check> {
    use CheckMode::{Exact, Float};
    let c = |name, formula, mode, body: Body| Check { name, formula, mode, body };
    vec![
        c("identities.curl_grad_3d", "curl grad f = 0", Exact, curl_grad_3d),
        c("identities.div_curl_3d", "div curl b = 0", Exact, div_curl_3d),
        c("identities.curl4_dyad_chi", "curl4_dyad chi b = 0", Exact, curl4_dyad_chi),
        c("identities.div_dyad_curl4_vec", "div_dyad curl4_vec b = 0", Exact, div_dyad_curl4_vec),
        c("identities.cross3_orthogonal", "a . (a x b) = 0 (3D)", Exact, cross3_orthogonal),
        c("identities.cross4_orthogonal", "b . (b x C) = 0 (4D)", Exact, cross4_orthogonal),
        c("identities.homotopy", "dK + Kd = id", Exact, homotopy),
        c("identities.stokes_3d", "int_M dw = int_dM w (3D)", Exact, stokes_3d),
        c("identities.stokes_4d", "int_M dw = int_dM w (4D)", Exact, stokes_4d),
        c("maxwell.equivalence", "4D residual = const x 3+1 residual", Exact, maxwell_equivalence),
        c("maxwell.potential_fields", "B = curl A, E = -dA/dt - grad phi solve the homogeneous pair", Exact, potential_fields),
        c("maxwell.continuity", "div curl4_dyad B_dyad = 0", Exact, continuity),
        c("maxwell.poincare_round_trip", "curl4_vec A = B_dyad, chi(iA) = E_dyad", Exact, poincare_round_trip),
        c("maxwell.lorentz_orthogonal", "V . F_lorentz = 0", Exact, lorentz_orthogonal),
        c("maxwell.lorentz_contraction", "q V x B_dyad = s' q F V", Float, lorentz_contraction),
        c("maxwell.duality", "2 B_dyad = dual(-2i E_dyad)", Exact, duality),
        c("maxwell.rotation_planes", "planes = rank(B) / 2", Float, rotation_planes),
        c("kinematics.velocity_length", "L(V) = ic", Float, velocity_length),
        c("kinematics.proper_time_uniform", "T = t sqrt(1 - v^2/c^2)", Float, proper_time_uniform),
        c("kinematics.proper_time_resampling", "T independent of sampling", Float, proper_time_resampling),
        c("kinematics.force_orthogonal", "V . F = 0", Float, force_orthogonal),
        c("kinematics.gen_length_branch", "arg L in (-pi, pi]", Float, gen_length_branch),
        c("kinematics.classical_3d", "D3: V = v, A = a, P = m v, F = m a", Float, classical_3d),
        c("kinematics.rest_frame", "rest: V = (0, 0, 0, ic), P = m V", Float, rest_frame),
        c("stress.theta2_identity", "theta_k(omega2(F), 2) = theta2_direct(F)", Exact, theta2_identity),
        c("stress.omega_symmetries", "pair antisymmetry and pair exchange of omega2", Exact, omega_symmetries),
        c("stress.theta_symmetric", "theta_k symmetric", Exact, theta_symmetric),
        c("stress.theta2_traceless", "tr theta2 = 0", Exact, theta2_traceless),
        c("polytopes.platonic_table", "N_p(D)", Exact, platonic_table),
        c("polytopes.star_table", "N_s(D)", Exact, star_table),
        c("polytopes.star_excess", "N_s - N_p = 4, 10 at D = 3, 4", Exact, star_excess),
        c("polytopes.negative_dimension", "D < 0 rejected", Exact, negative_dimension),
    ]
}

/// Names of every registered check, in registration order.
pub fn check_names() -> Vec<&'static str> {
    registry().into_iter().map(|c| c.name).collect()
}

fn exact<F>(ctx: &Context, rng: &mut ChaCha8Rng, note: &str, mut trial: F) -> Result<Outcome>
where
    F: FnMut(&mut ChaCha8Rng) -> Result<Option<String>>,
{
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..ctx.trials {
        if let Some(msg) = trial(rng)? {
            failures += 1;
            first_failure.get_or_insert(msg);
        }
    }
    Ok(Outcome::Exact { trials: ctx.trials, failures, first_failure, note: note.to_string() })
}

fn single(note: &str, failure: Option<String>) -> Outcome {
    Outcome::Exact {
        trials: 1,
        failures: u32::from(failure.is_some()),
        first_failure: failure,
        note: note.to_string(),
    }
}

fn nonzero_tensor(t: &TensorField) -> Option<String> {
    t.components().iter().find(|c| !c.is_zero()).map(|c| c.to_string())
}

fn nonzero_poly(p: &MultiPoly) -> Option<String> {
    (!p.is_zero()).then(|| p.to_string())
}

fn sampler(ctx: &Context) -> PolySampler {
    PolySampler::new(ctx.degree).complex(true)
}

// ---- identities ----

fn curl_grad_3d(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "", |rng| Ok(nonzero_tensor(&curl3(&grad(&s.sample(rng, 3), 3)?)?)))
}

fn div_curl_3d(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "", |rng| Ok(nonzero_poly(&div_vec(&curl3(&s.vector(rng, 3, 3))?)?)))
}

fn curl4_dyad_chi(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "", |rng| Ok(nonzero_tensor(&curl4_dyad(&chi(&s.vector(rng, 4, 4))?)?)))
}

fn div_dyad_curl4_vec(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "", |rng| Ok(nonzero_tensor(&div_dyad(&curl4_vec(&s.vector(rng, 4, 4))?)?)))
}

fn cross3_orthogonal(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "", |rng| {
        let a = s.vector(rng, 3, 3);
        let b = s.vector(rng, 3, 3);
        let x = cross3(&a, &b)?;
        Ok(nonzero_poly(&a.dot(&x)?).or(nonzero_poly(&b.dot(&x)?)))
    })
}

fn cross4_orthogonal(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "", |rng| {
        let b = s.vector(rng, 4, 4);
        let c = s.dyad(rng, 4, 4);
        Ok(nonzero_poly(&b.dot(&cross4(&b, &c)?)?))
    })
}

/// Random `p`-form in `dim` dimensions.
fn random_form(s: &PolySampler, rng: &mut ChaCha8Rng, dim: usize, p: usize) -> Result<DifferentialForm> {
    match p {
        0 => DifferentialForm::from_function(dim, s.sample(rng, dim)),
        1 => DifferentialForm::from_vector(&s.vector(rng, dim, dim)),
        2 => DifferentialForm::from_dyad(&s.dyad(rng, dim, dim)),
        _ => {
            // Hodge-type map of a vector: ω_{i1..i(D-1)} = ε_{i1..i(D-1) l} b_l
            let b = s.vector(rng, dim, dim);
            let eps = levi_civita(dim)?;
            let comps = Tensor::from_fn(dim, dim - 1, |idx| {
                let mut full = idx.to_vec();
                full.push(0);
                (1..=dim).fold(MultiPoly::zero(), |acc, l| {
                    full[dim - 1] = l;
                    match eps.value(&full) {
                        0 => acc,
                        e => &acc + &b.at(&[l]).scale(&GaussianRational::from(i64::from(e))),
                    }
                })
            });
            DifferentialForm::new(dim, dim - 1, comps)
        }
    }
}

fn homotopy(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "", |rng| {
        let p = rng.random_range(1..=3);
        let omega = random_form(&s, rng, 4, p)?;
        let dk = homotopy_operator(&omega)?
            .exterior_derivative()
            .expect("degree below 4");
        let sum = match omega.exterior_derivative() {
            Some(d) => dk.components().try_add(homotopy_operator(&d)?.components())?,
            None => dk.components().clone(),
        };
        Ok(nonzero_tensor(&sum.try_sub(omega.components())?).map(|r| format!("degree {p}: {r}")))
    })
}

fn random_box(rng: &mut ChaCha8Rng, dim: usize) -> Result<BoxRegion> {
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    BoxRegion::new(
        (0..dim)
            .map(|_| {
                let lo = q(rng.random_range(-9..=9), rng.random_range(1..=9));
                let width = q(rng.random_range(1..=9), rng.random_range(1..=9));
                (lo.clone(), lo + width)
            })
            .collect(),
    )
}

fn stokes(ctx: &Context, rng: &mut ChaCha8Rng, dim: usize) -> Result<Outcome> {
    let s = PolySampler::new(ctx.degree).complex(true).max_terms(3);
    exact(ctx, rng, "random degree, face and box", |rng| {
        let p = rng.random_range(0..dim);
        let omega = random_form(&s, rng, dim, p)?;
        let region = random_box(rng, dim)?;
        let mut axes: Vec<usize> = sample(rng, dim, p + 1).into_iter().map(|a| a + 1).collect();
        axes.sort_unstable();
        let sides: Vec<Side> = (0..dim - p - 1)
            .map(|_| if rng.random_bool(0.5) { Side::Hi } else { Side::Lo })
            .collect();
        let cell = Cell::new(region, axes.clone(), &sides)?;
        let r = stokes_residual(&omega, &cell)?;
        Ok((!r.is_zero()).then(|| format!("{p}-form on axes {axes:?}: {r}")))
    })
}

fn stokes_3d(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    stokes(ctx, rng, 3)
}

fn stokes_4d(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    stokes(ctx, rng, 4)
}

// ---- maxwell ----

fn random_em(s: &PolySampler, rng: &mut ChaCha8Rng) -> EMField3 {
    let v = |rng: &mut ChaCha8Rng| std::array::from_fn(|_| s.sample(rng, 4));
    let e = v(rng);
    let b = v(rng);
    let rho = s.sample(rng, 4);
    let j = v(rng);
    EMField3 { e, b, rho, j }
}

fn random_potential_field(s: &PolySampler, rng: &mut ChaCha8Rng) -> EMField3 {
    let a: [MultiPoly; 3] = std::array::from_fn(|_| s.sample(rng, 4));
    EMField3::from_potentials(&a, &s.sample(rng, 4))
}

fn maxwell_equivalence(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = PolySampler::new(ctx.degree);
    let mut k = 0;
    exact(ctx, rng, "generic, potential-derived and fully consistent fields", |rng| {
        k += 1;
        let field = match k % 3 {
            0 => random_em(&s, rng),
            1 => random_potential_field(&s, rng),
            _ => {
                let f = random_potential_field(&s, rng);
                EMField3::with_consistent_sources(f.e, f.b)
            }
        };
        let eq = check_equivalence(&field, ctx.cal);
        Ok((!eq.holds()).then(|| format!("{eq:?}")))
    })
}

fn potential_fields(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = PolySampler::new(ctx.degree);
    exact(ctx, rng, "", |rng| {
        let r = maxwell_homogeneous_residuals(&random_potential_field(&s, rng));
        Ok((!(r.three_plus_one_zero() && r.four_d_zero())).then(|| format!("{r:?}")))
    })
}

fn continuity(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "arbitrary F and consistent 3+1 sources", |rng| {
        let f = FieldStrength::new(s.dyad(rng, 4, 4))?;
        if let Some(r) = nonzero_poly(&continuity_residual(&f)) {
            return Ok(Some(r));
        }
        let e = std::array::from_fn(|_| s.sample(rng, 4));
        let b = std::array::from_fn(|_| s.sample(rng, 4));
        Ok(nonzero_poly(&continuity_residual_3(&EMField3::with_consistent_sources(e, b))))
    })
}

fn poincare_round_trip(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    exact(ctx, rng, "F = dA for random A", |rng| {
        let f = FieldStrength::new(big_curl(&s.vector(rng, 4, 4))?)?;
        let a = reconstruct_potential(&f)?;
        let (rb, re) = potential_residuals(&f, &a)?;
        Ok(nonzero_tensor(rb.as_tensor()).or(nonzero_tensor(re.as_tensor())))
    })
}

fn lorentz_orthogonal(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    exact(ctx, rng, "lorentz3 and lorentz4", |rng| {
        let q = GaussianRational::from(small_coeff(rng));
        let v3 = constant_vector(rng, 3, false);
        let b3 = constant_vector(rng, 3, false);
        let f3 = v3.dot(&lorentz3(&q, &v3, &b3)?)?;
        let v4 = constant_vector(rng, 4, true);
        let f = constant_dyad(rng, 4, true);
        let f4 = v4.dot(&lorentz4(&q, &v4, &f)?)?;
        Ok((!(f3.is_zero() && f4.is_zero())).then(|| format!("3D {f3}, 4D {f4}")))
    })
}

fn complex_uniform(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

fn lorentz_contraction(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let sign = Complex64::new(ctx.cal.lorentz_sign as f64, 0.0);
    let mut max_abs: f64 = 0.0;
    for _ in 0..ctx.trials {
        let q = Complex64::new(rng.random_range(-2.0..2.0), 0.0);
        let v = Tensor::vector((0..4).map(|_| complex_uniform(rng)).collect());
        let f = AntisymmetricDyad::from_upper(4, |_, _| complex_uniform(rng));
        let lhs = lorentz4(&q, &v, &f)?;
        let rhs = field_contraction(&q, &v, &f)?.scale(&sign);
        for (a, b) in lhs.components().iter().zip(rhs.components()) {
            max_abs = max_abs.max((a - b).norm());
        }
    }
    Ok(Outcome::Float {
        max_abs,
        tol: 1e-12,
        violations: Vec::new(),
        note: format!("{} trials, s' = {:+}", ctx.trials, ctx.cal.lorentz_sign),
    })
}

fn duality(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = sampler(ctx);
    let two = MultiPoly::int(2);
    let minus_two_i = MultiPoly::constant(GaussianRational::imag(-2, 1));
    exact(ctx, rng, "", |rng| {
        let f = s.dyad(rng, 4, 4);
        let lhs = b_dyad(&f)?.scale(&two);
        let rhs = dual(&e_dyad(&f)?.scale(&minus_two_i))?;
        Ok(nonzero_tensor(lhs.try_sub(&rhs)?.as_tensor()))
    })
}

fn rotation_planes(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut violations = Vec::new();
    let mut max_abs: f64 = 0.0;
    let mut record = |what: &str, got: usize, want: usize| {
        let d = (got as f64 - want as f64).abs();
        max_abs = max_abs.max(d);
        if got != want {
            violations.push(format!("{what}: {got} planes, expected {want}"));
        }
    };
    record("3D unit field", rotation_plane_count(&skew_from_axial([0.0, 0.0, 1.0]))?, 1);
    record("4D zero", rotation_plane_count(&nalgebra::DMatrix::zeros(4, 4))?, 0);
    for _ in 0..ctx.trials {
        let u = |rng: &mut ChaCha8Rng| rng.random_range(0.5..2.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        record("3D random", rotation_plane_count(&skew_from_axial([u(rng), u(rng), u(rng)]))?, 1);
        let a: Vec<f64> = (0..4).map(|_| u(rng)).collect();
        let b: Vec<f64> = (0..4).map(|_| u(rng)).collect();
        let simple = nalgebra::DMatrix::from_fn(4, 4, |i, j| a[i] * b[j] - a[j] * b[i]);
        record("4D simple bivector", rotation_plane_count(&simple)?, 1);
        // B12 and B34 planes with random weights: rank 4
        let (p, q) = (u(rng), u(rng));
        let mut m = nalgebra::DMatrix::zeros(4, 4);
        m[(0, 1)] = p;
        m[(1, 0)] = -p;
        m[(2, 3)] = q;
        m[(3, 2)] = -q;
        record("4D two planes", rotation_plane_count(&m)?, 2);
    }
    Ok(Outcome::Float { max_abs, tol: 0.0, violations, note: "plane count deviation".into() })
}

// ---- kinematics ----

fn interior_length_deviation(w: &Worldline, cfg: &KinematicsConfig) -> Result<f64> {
    let v = four_velocity(w, cfg)?;
    let ic = Complex64::new(0.0, cfg.c);
    Ok(v[1..v.len() - 1].iter().map(|x| (x.length() - ic).norm()).fold(0.0, f64::max))
}

fn velocity_length(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cfg = KinematicsConfig::default();
    let n = 1000;
    let mut lines = vec![
        Worldline::uniform([0.0; 3], 0.0, 2.0, n, Mode::D4)?,
        Worldline::uniform([0.6, 0.0, 0.0], 0.0, 2.0, n, Mode::D4)?,
        Worldline::uniform([0.3, -0.4, 0.2], 0.0, 2.0, n, Mode::D4)?,
        Worldline::uniform([0.0, 0.0, -0.9], 0.0, 2.0, n, Mode::D4)?,
        Worldline::polynomial_grid(
            [vec![0.0, 0.1, 0.05], vec![0.0, 0.0, 0.0, -0.02], vec![0.0, 0.3]],
            0.0,
            2.0,
            n,
            Mode::D4,
        )?,
    ];
    for _ in 0..ctx.trials {
        let v0: [f64; 3] = std::array::from_fn(|_| rng.random_range(-0.3..0.3));
        let a: [f64; 3] = std::array::from_fn(|_| rng.random_range(-0.1..0.1));
        lines.push(Worldline::from_fn(
            move |t| std::array::from_fn(|k| v0[k] * t + 0.5 * a[k] * t * t),
            0.0,
            2.0,
            n,
            Mode::D4,
        )?);
    }
    let mut max_abs: f64 = 0.0;
    for w in &lines {
        max_abs = max_abs.max(interior_length_deviation(w, &cfg)?);
    }
    Ok(Outcome::Float {
        max_abs,
        tol: 1e-9,
        violations: Vec::new(),
        note: format!("{} worldlines x {n} samples", lines.len()),
    })
}

fn proper_time_uniform(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut max_abs: f64 = 0.0;
    let mut check = |w: &Worldline, cfg: &KinematicsConfig, gamma_inv: f64| -> Result<()> {
        let tau = proper_time(w, cfg)?;
        for (t, x) in w.times().iter().zip(&tau) {
            max_abs = max_abs.max((x - gamma_inv * (t - w.times()[0])).abs());
        }
        Ok(())
    };
    let unit = KinematicsConfig::default();
    check(&Worldline::uniform([0.6, 0.0, 0.0], 0.0, 10.0, 1000, Mode::D4)?, &unit, 0.8)?;
    check(&Worldline::from_fn(|t| [0.0, 0.6 * t, 0.0], 0.0, 10.0, 1000, Mode::D4)?, &unit, 0.8)?;
    let c2 = KinematicsConfig::new(2.0, 1.0, 1.0)?;
    check(&Worldline::uniform([0.0, 0.0, 1.2], 0.0, 10.0, 1000, Mode::D4)?, &c2, 0.8)?;
    for _ in 0..ctx.trials {
        let v: [f64; 3] = std::array::from_fn(|_| rng.random_range(-0.5..0.5));
        let g = (1.0 - v.iter().map(|x| x * x).sum::<f64>()).sqrt();
        check(&Worldline::uniform(v, -1.0, 3.0, 200, Mode::D4)?, &unit, g)?;
    }
    Ok(Outcome::Float { max_abs, tol: 1e-12, violations: Vec::new(), note: "v = 0.6c gives T = 0.8t".into() })
}

fn random_accelerating(rng: &mut ChaCha8Rng) -> [Vec<f64>; 3] {
    std::array::from_fn(|_| {
        vec![
            rng.random_range(-1.0..1.0),
            rng.random_range(-0.3..0.3),
            rng.random_range(-0.05..0.05),
            rng.random_range(-0.01..0.01),
        ]
    })
}

fn proper_time_resampling(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cfg = KinematicsConfig::default();
    let mut max_abs: f64 = 0.0;
    let mut violations = Vec::new();
    for _ in 0..ctx.trials {
        let coeffs = random_accelerating(rng);
        let coarse = Worldline::polynomial_grid(coeffs.clone(), 0.0, 2.0, 500, Mode::D4)?;
        let fine = Worldline::polynomial_grid(coeffs, 0.0, 2.0, 999, Mode::D4)?;
        let a = proper_time(&coarse, &cfg)?;
        let b = proper_time(&fine, &cfg)?;
        for (i, x) in a.iter().enumerate() {
            max_abs = max_abs.max((x - b[2 * i]).abs());
        }
        if a.windows(2).any(|p| p[1] <= p[0]) && violations.is_empty() {
            violations.push("proper time not increasing".to_string());
        }
    }
    Ok(Outcome::Float { max_abs, tol: 1e-10, violations, note: "500 vs 999 samples".into() })
}

fn force_orthogonal(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cfg = KinematicsConfig::default();
    let mut max_abs: f64 = 0.0;
    for _ in 0..ctx.trials {
        let r = rng.random_range(0.1..1.0);
        let omega = rng.random_range(0.1..0.6) / r;
        let u = rng.random_range(-0.3..0.3);
        let w = Worldline::from_fn(
            |t| [r * (omega * t).cos(), r * (omega * t).sin(), u * t],
            0.0,
            10.0,
            1000,
            Mode::D4,
        )?;
        let k = evaluate(&w, &cfg)?;
        for (v, f) in k.velocity.iter().zip(&k.force) {
            max_abs = max_abs.max(v.dot(f).norm());
        }
    }
    Ok(Outcome::Float {
        max_abs,
        tol: 1e-9,
        violations: Vec::new(),
        note: "sampled helices of gyration".into(),
    })
}

fn gen_length_branch(_ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut max_abs: f64 = 0.0;
    let mut violations = Vec::new();
    for _ in 0..1000 {
        let x: Vec<Complex64> = (0..4).map(|_| complex_uniform(rng) * 3.0).collect();
        let l = gen_length(&x);
        let arg = l.arg();
        if !(arg > -std::f64::consts::PI && arg <= std::f64::consts::PI) {
            violations.push(format!("arg {arg} for {x:?}"));
        }
        let s: Complex64 = x.iter().map(|a| a * a).sum();
        max_abs = max_abs.max((l * l - s).norm() / (1.0 + s.norm()));
    }
    let zero = Complex64::new(0.0, 0.0);
    if gen_length(&[zero, zero, zero, Complex64::new(0.0, 2.0)]) != Complex64::new(0.0, 2.0) {
        violations.push("L((0,0,0,2i)) != 2i".into());
    }
    Ok(Outcome::Float {
        max_abs,
        tol: 1e-12,
        violations,
        note: "1000 random inputs, residual |L^2 - x.x| relative".into(),
    })
}

fn classical_3d(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut max_abs: f64 = 0.0;
    for _ in 0..ctx.trials {
        let coeffs = random_accelerating(rng);
        let m = rng.random_range(0.5..3.0);
        let cfg = KinematicsConfig::new(1.0, m, 1.0)?;
        let w = Worldline::polynomial_grid(coeffs.clone(), 0.0, 2.0, 50, Mode::D3)?;
        let k = evaluate(&w, &cfg)?;
        for (i, &t) in k.t.iter().enumerate() {
            let v: Vec<f64> = coeffs.iter().map(|c| c[1] + 2.0 * c[2] * t + 3.0 * c[3] * t * t).collect();
            let a: Vec<f64> = coeffs.iter().map(|c| 2.0 * c[2] + 6.0 * c[3] * t).collect();
            let (v, a) = (FourVector::real(&v), FourVector::real(&a));
            let mc = Complex64::new(m, 0.0);
            max_abs = max_abs
                .max(k.velocity[i].max_abs_diff(&v))
                .max(k.acceleration[i].max_abs_diff(&a))
                .max(k.momentum[i].max_abs_diff(&v.scale(mc)))
                .max(k.force[i].max_abs_diff(&a.scale(mc)))
                .max((k.proper_time[i] - t).abs());
        }
    }
    Ok(Outcome::Float { max_abs, tol: 1e-12, violations: Vec::new(), note: String::new() })
}

fn rest_frame(_ctx: &Context, _rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cfg = KinematicsConfig::new(3.0, 2.0, 1.0)?;
    let w = Worldline::uniform([0.0; 3], 0.0, 1.0, 10, Mode::D4)?;
    let k = evaluate(&w, &cfg)?;
    let z = Complex64::new(0.0, 0.0);
    let v = FourVector::new(vec![z, z, z, Complex64::new(0.0, 3.0)]);
    let p = FourVector::new(vec![z, z, z, Complex64::new(0.0, 6.0)]);
    let max_abs = k
        .velocity
        .iter()
        .zip(&k.momentum)
        .map(|(x, y)| x.max_abs_diff(&v).max(y.max_abs_diff(&p)))
        .fold(0.0, f64::max);
    Ok(Outcome::Float { max_abs, tol: 0.0, violations: Vec::new(), note: "c = 3, m = 2".into() })
}

// ---- stress ----

fn stress_sampler(ctx: &Context) -> PolySampler {
    PolySampler::new(ctx.degree).complex(true).max_terms(2)
}

fn theta2_identity(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = stress_sampler(ctx);
    exact(ctx, rng, "", |rng| {
        let f = s.dyad(rng, 4, 4);
        let lhs = theta_k(&omega2(&f)?, 2)?;
        let rhs = theta2_direct(&f)?;
        Ok(nonzero_tensor(&lhs.as_tensor().try_sub(rhs.as_tensor())?))
    })
}

fn omega_symmetries(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = stress_sampler(ctx);
    exact(ctx, rng, "256 index tuples per trial", |rng| {
        let sweep = symmetry_sweep(omega2(&s.dyad(rng, 4, 4))?.as_tensor())?;
        Ok((!sweep.passed() || sweep.tuples_checked != 256).then(|| format!("{:?}", sweep.violations.first())))
    })
}

fn theta_symmetric(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = stress_sampler(ctx);
    exact(ctx, rng, "Ω = F⊗G + G⊗F, random k", |rng| {
        let f = s.dyad(rng, 4, 4);
        let g = s.dyad(rng, 4, 4);
        let t = Tensor::from_fn(4, 4, |i| {
            &(f.as_tensor().at(&[i[0], i[1]]) * g.as_tensor().at(&[i[2], i[3]]))
                + &(g.as_tensor().at(&[i[0], i[1]]) * f.as_tensor().at(&[i[2], i[3]]))
        });
        let k = rng.random_range(1..=4);
        let theta = theta_k(&OmegaTensor::new(t, k)?, k)?;
        Ok((!theta.is_symmetric()).then(|| format!("k = {k}")))
    })
}

fn theta2_traceless(ctx: &Context, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = stress_sampler(ctx);
    exact(ctx, rng, "", |rng| Ok(nonzero_poly(&theta2_direct(&s.dyad(rng, 4, 4))?.trace())))
}

// ---- polytopes ----

const INF: Option<u64> = None;
const PLATONIC: [Option<u64>; 11] = [Some(1), Some(1), INF, Some(5), Some(6), Some(3), Some(3), Some(3), Some(3), Some(3), Some(3)];
const STAR: [Option<u64>; 11] = [Some(1), Some(1), INF, Some(9), Some(16), Some(3), Some(3), Some(3), Some(3), Some(3), Some(3)];

fn table_check(f: fn(i64) -> Result<PolytopeCount>, expected: &[Option<u64>]) -> Result<Outcome> {
    let mut failure = None;
    let mut row = Vec::new();
    for (d, want) in expected.iter().enumerate() {
        let got = f(d as i64)?;
        row.push(got.to_string());
        if got.finite() != *want && failure.is_none() {
            failure = Some(format!("D = {d}: got {got}"));
        }
    }
    Ok(single(&format!("D = 0..10: {}", row.join(" ")), failure))
}

fn platonic_table(_ctx: &Context, _rng: &mut ChaCha8Rng) -> Result<Outcome> {
    table_check(n_platonic, &PLATONIC)
}

fn star_table(_ctx: &Context, _rng: &mut ChaCha8Rng) -> Result<Outcome> {
    table_check(n_star_inclusive, &STAR)
}

fn star_excess(_ctx: &Context, _rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut failure = None;
    for d in 0..=30i64 {
        let diff = n_star_inclusive(d)?.checked_sub(n_platonic(d)?);
        let ok = match d {
            2 => diff.is_err(),
            3 => diff == Ok(4),
            4 => diff == Ok(10),
            _ => diff == Ok(0),
        };
        if !ok && failure.is_none() {
            failure = Some(format!("D = {d}: {diff:?}"));
        }
    }
    Ok(single("D = 0..30", failure))
}

fn negative_dimension(_ctx: &Context, _rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let ok = n_platonic(-1).is_err() && n_star_inclusive(-5).is_err();
    Ok(single("", (!ok).then(|| "negative D accepted".to_string())))
}
