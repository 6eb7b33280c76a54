//! The magnetostatic equations read in 4D, and their 3+1 counterparts.
//!
//! In 4D, `div B = 0` (with `B = ½F̃`) and `curl B = j` (4D curl of a dyad)
//! are evaluated directly on the field strength. The same field is also fed
//! to the ordinary Maxwell equations in 3+1 form. The two sets of residuals
//! are then compared slot by slot, up to constants fixed once by
//! [`Calibration`].

use std::sync::OnceLock;

use super::fields::{b_dyad, four_current, to_euclidean, EMField3, ESign, FieldStrength};
use crate::algebra::{AntisymmetricDyad, GaussianRational, MultiPoly, Scalar, Tensor, TensorField};
use crate::error::{Error, Result};
use crate::exterior::{cross4, curl4_dyad, div_dyad, div_vec};

/// Residuals of `∇·B = 0` and `∇×E + ∂B/∂t = 0`, plus the 4D residual
/// `div_dyad(B_dyad(F))`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousResiduals {
    pub div_b: MultiPoly,
    pub faraday: [MultiPoly; 3],
    pub four_d: TensorField,
}

/// Residuals of `∇·E − ρ = 0` and `∇×B − ∂E/∂t − j = 0`, plus the 4D residual
/// `curl4_dyad(B_dyad(F)) − j`.
#[derive(Clone, Debug, PartialEq)]
pub struct InhomogeneousResiduals {
    pub gauss: MultiPoly,
    pub ampere: [MultiPoly; 3],
    pub four_d: TensorField,
}

impl HomogeneousResiduals {
    /// 3+1 residuals arranged by the 4D slot they correspond to.
    pub fn three_plus_one(&self) -> [MultiPoly; 4] {
        let [a, b, c] = self.faraday.clone();
        [a, b, c, self.div_b.clone()]
    }

    pub fn three_plus_one_zero(&self) -> bool {
        self.three_plus_one().iter().all(MultiPoly::is_zero)
    }

    pub fn four_d_zero(&self) -> bool {
        self.four_d.is_zero()
    }
}

impl InhomogeneousResiduals {
    pub fn three_plus_one(&self) -> [MultiPoly; 4] {
        let [a, b, c] = self.ampere.clone();
        [a, b, c, self.gauss.clone()]
    }

    pub fn three_plus_one_zero(&self) -> bool {
        self.three_plus_one().iter().all(MultiPoly::is_zero)
    }

    pub fn four_d_zero(&self) -> bool {
        self.four_d.is_zero()
    }
}

/// `div_dyad(B_dyad(F))`: the 4D reading of `div B = 0`.
pub fn homogeneous_4d(f: &FieldStrength) -> TensorField {
    let b = b_dyad(f.dyad()).expect("4D");
    div_dyad(&b).expect("4D")
}

/// `curl4_dyad(B_dyad(F))`: the left-hand side of the 4D `curl B = j`.
pub fn curl_of_b_dyad(f: &FieldStrength) -> TensorField {
    let b = b_dyad(f.dyad()).expect("4D");
    curl4_dyad(&b).expect("4D")
}

pub fn maxwell_homogeneous_residuals_with(field: &EMField3, sign: ESign) -> HomogeneousResiduals {
    let ce = field.curl_e();
    let dtb = field.dt_b();
    let fs = FieldStrength::from_fields(field, sign);
    HomogeneousResiduals {
        div_b: field.div_b(),
        faraday: std::array::from_fn(|k| &ce[k] + &dtb[k]),
        four_d: homogeneous_4d(&fs),
    }
}

pub fn maxwell_inhomogeneous_residuals_with(field: &EMField3, sign: ESign) -> InhomogeneousResiduals {
    let cb = field.curl_b();
    let dte = field.dt_e();
    let fs = FieldStrength::from_fields(field, sign);
    let lhs = curl_of_b_dyad(&fs);
    InhomogeneousResiduals {
        gauss: &field.div_e() - &field.rho,
        ampere: std::array::from_fn(|k| &(&cb[k] - &dte[k]) - &field.j[k]),
        four_d: lhs.try_sub(&four_current(field)).expect("same shape"),
    }
}

/// Homogeneous residuals under the calibrated dictionary.
pub fn maxwell_homogeneous_residuals(field: &EMField3) -> HomogeneousResiduals {
    maxwell_homogeneous_residuals_with(field, Calibration::get().e_sign)
}

/// Inhomogeneous residuals under the calibrated dictionary.
pub fn maxwell_inhomogeneous_residuals(field: &EMField3) -> InhomogeneousResiduals {
    maxwell_inhomogeneous_residuals_with(field, Calibration::get().e_sign)
}

/// The field strength under the calibrated dictionary.
pub fn build_field_strength(field: &EMField3) -> FieldStrength {
    FieldStrength::from_fields(field, Calibration::get().e_sign)
}

/// `div_vec(curl4_dyad(B_dyad(F)))`, identically zero for every `F`.
pub fn continuity_residual(f: &FieldStrength) -> MultiPoly {
    div_vec(&curl_of_b_dyad(f)).expect("4D")
}

/// `∂ρ/∂t + ∇·j` in 3+1 form.
pub fn continuity_residual_3(field: &EMField3) -> MultiPoly {
    &field.dt_rho() + &field.div_j()
}

/// Sign conventions and residual ratios, fixed once by probing.
#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    /// `s` in `F_k4 = s·i·E_k`.
    pub e_sign: ESign,
    /// `s′` in `q (V × B_dyad(F))_α = s′ q F_αβ V_β`.
    pub lorentz_sign: i64,
    /// `λ_α` with `4D_α = λ_α · 3+1_α` for the homogeneous equations.
    pub homogeneous_ratios: [GaussianRational; 4],
    pub inhomogeneous_ratios: [GaussianRational; 4],
}

fn x(k: usize) -> MultiPoly {
    MultiPoly::var(k).expect("axis")
}

/// `E = (0, x1, 0)`, `B = (0, 0, ±t)`: Faraday holds for `−t`, fails for `+t`.
fn faraday_probe(consistent: bool) -> EMField3 {
    let t = if consistent { -&x(4) } else { x(4) };
    EMField3::vacuum(
        [MultiPoly::zero(), x(1), MultiPoly::zero()],
        [MultiPoly::zero(), MultiPoly::zero(), t],
    )
}

/// Source-free probe with every 3+1 residual component nonzero.
fn generic_probe() -> EMField3 {
    let sq = |k: usize| &x(k) * &x(k);
    let xt = |k: usize| &x(k) * &x(4);
    EMField3::vacuum(
        [&xt(1) + &x(2), &xt(2) + &x(3), &xt(3) + &x(1)],
        [&x(1) + &sq(2), &x(2) + &sq(3), &x(3) + &sq(1)],
    )
}

fn ratios(four_d: &TensorField, three: &[MultiPoly; 4]) -> Result<[GaussianRational; 4]> {
    let mut out: [GaussianRational; 4] = std::array::from_fn(|_| GaussianRational::zero());
    for a in 0..4 {
        let r3 = to_euclidean(&three[a]);
        if r3.is_zero() {
            return Err(Error::Invariant(format!("calibration probe has zero residual in slot {}", a + 1)));
        }
        out[a] = four_d.at(&[a + 1]).proportionality(&r3).ok_or_else(|| {
            Error::Invariant(format!(
                "4D residual slot {} is not a constant multiple of its 3+1 counterpart",
                a + 1
            ))
        })?;
    }
    Ok(out)
}

impl Calibration {
    /// Runs the probes. Fails if the conventions are not uniquely determined.
    pub fn compute() -> Result<Self> {
        let spatial_zero = |field: &EMField3, s: ESign| {
            let r = maxwell_homogeneous_residuals_with(field, s);
            (1..=3).all(|k| r.four_d.at(&[k]).is_zero())
        };
        let candidates: Vec<ESign> = ESign::both()
            .into_iter()
            .filter(|&s| spatial_zero(&faraday_probe(true), s) && !spatial_zero(&faraday_probe(false), s))
            .collect();
        let e_sign = match candidates.as_slice() {
            [s] => *s,
            _ => {
                return Err(Error::Invariant(format!(
                    "E-sign calibration not unique: {candidates:?}"
                )))
            }
        };

        let probe = generic_probe();
        let h = maxwell_homogeneous_residuals_with(&probe, e_sign);
        let i = maxwell_inhomogeneous_residuals_with(&probe, e_sign);
        let homogeneous_ratios = ratios(&h.four_d, &h.three_plus_one())?;
        let inhomogeneous_ratios = ratios(&i.four_d, &i.three_plus_one())?;

        Ok(Self {
            e_sign,
            lorentz_sign: calibrate_lorentz_sign()?,
            homogeneous_ratios,
            inhomogeneous_ratios,
        })
    }

    /// Process-wide calibration, computed on first use.
    pub fn get() -> &'static Calibration {
        static CAL: OnceLock<Calibration> = OnceLock::new();
        CAL.get_or_init(|| Calibration::compute().expect("dictionary calibration failed"))
    }
}

fn calibrate_lorentz_sign() -> Result<i64> {
    let q = |n: i64| GaussianRational::from(n);
    let v = Tensor::vector(vec![q(1), q(-2), q(3), GaussianRational::imag(5, 1)]);
    let f = AntisymmetricDyad::from_upper(4, |i, j| q((i * 7 + j * 3) as i64 - 11));
    let via_cross = cross4(&v, &b_dyad(&f)?)?;
    let via_contraction = super::lorentz::field_contraction(&GaussianRational::one(), &v, &f)?;
    if via_cross == via_contraction {
        Ok(1)
    } else if via_cross == via_contraction.scale(&q(-1)) {
        Ok(-1)
    } else {
        Err(Error::Invariant("4D Lorentz force is not ± the field contraction".into()))
    }
}

/// Outcome of comparing 4D and 3+1 residuals on one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    /// 4D slots where `4D_α ≠ λ_α · 3+1_α`.
    pub homogeneous_mismatch: Vec<usize>,
    pub inhomogeneous_mismatch: Vec<usize>,
    pub homogeneous_zero_4d: bool,
    pub homogeneous_zero_3: bool,
    pub inhomogeneous_zero_4d: bool,
    pub inhomogeneous_zero_3: bool,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.homogeneous_mismatch.is_empty()
            && self.inhomogeneous_mismatch.is_empty()
            && self.homogeneous_zero_4d == self.homogeneous_zero_3
            && self.inhomogeneous_zero_4d == self.inhomogeneous_zero_3
    }
}

fn mismatches(four_d: &TensorField, three: &[MultiPoly; 4], ratios: &[GaussianRational; 4]) -> Vec<usize> {
    (0..4)
        .filter(|&a| *four_d.at(&[a + 1]) != to_euclidean(&three[a]).scale(&ratios[a]))
        .map(|a| a + 1)
        .collect()
}

/// Checks that each 4D residual slot equals the calibrated constant times the
/// matching 3+1 residual, exactly.
pub fn check_equivalence(field: &EMField3, cal: &Calibration) -> Equivalence {
    let h = maxwell_homogeneous_residuals_with(field, cal.e_sign);
    let i = maxwell_inhomogeneous_residuals_with(field, cal.e_sign);
    Equivalence {
        homogeneous_mismatch: mismatches(&h.four_d, &h.three_plus_one(), &cal.homogeneous_ratios),
        inhomogeneous_mismatch: mismatches(&i.four_d, &i.three_plus_one(), &cal.inhomogeneous_ratios),
        homogeneous_zero_4d: h.four_d_zero(),
        homogeneous_zero_3: h.three_plus_one_zero(),
        inhomogeneous_zero_4d: i.four_d_zero(),
        inhomogeneous_zero_3: i.three_plus_one_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{seeded_rng, PolySampler};

    fn c(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }

    #[test]
    fn calibration_values() {
        // Hand expansion: ¼ ε_αkρσ ∂_α F_ρσ gives −(i/2)(s ∇×E − ∂_t B)_k and
        // ½ ∇·B; ∂_β F_αβ gives (∇×B + s ∂_t E, −s i ∇·E).
        let cal = Calibration::compute().unwrap();
        assert_eq!(cal.e_sign, ESign::Minus);
        assert_eq!(cal.lorentz_sign, 1);
        let half_i = GaussianRational::imag(1, 2);
        assert_eq!(
            cal.homogeneous_ratios,
            [half_i.clone(), half_i.clone(), half_i, GaussianRational::real(1, 2)]
        );
        let one = GaussianRational::from(1);
        assert_eq!(
            cal.inhomogeneous_ratios,
            [one.clone(), one.clone(), one, GaussianRational::imag_unit()]
        );
    }

    #[test]
    fn constant_magnetic_field_has_zero_residuals() {
        let f = EMField3::vacuum(Default::default(), [c(0), c(0), c(3)]);
        let h = maxwell_homogeneous_residuals(&f);
        assert!(h.three_plus_one_zero() && h.four_d_zero());
        let i = maxwell_inhomogeneous_residuals(&f);
        assert!(i.three_plus_one_zero() && i.four_d_zero());
    }

    #[test]
    fn potential_fields_satisfy_homogeneous_equations() {
        let s = PolySampler::new(4);
        let mut rng = seeded_rng(1, 0);
        for _ in 0..20 {
            let a = std::array::from_fn(|_| s.sample(&mut rng, 4));
            let phi = s.sample(&mut rng, 4);
            let f = EMField3::from_potentials(&a, &phi);
            let h = maxwell_homogeneous_residuals(&f);
            assert!(h.three_plus_one_zero());
            assert!(h.four_d_zero());
        }
    }

    #[test]
    fn non_solenoidal_field_detected() {
        let f = EMField3::vacuum(Default::default(), [c(0), c(0), MultiPoly::var(3).unwrap()]);
        let h = maxwell_homogeneous_residuals(&f);
        assert_eq!(h.div_b, c(1));
        assert_eq!(*h.four_d.at(&[4]), MultiPoly::from_ratio(1, 2));
    }

    #[test]
    fn ampere_example() {
        // ∇×(0,0,x1) = (0,−1,0)
        let mut f = EMField3::vacuum(Default::default(), [c(0), c(0), MultiPoly::var(1).unwrap()]);
        f.j = [c(0), c(-1), c(0)];
        let i = maxwell_inhomogeneous_residuals(&f);
        assert!(i.three_plus_one_zero());
        assert!(i.four_d_zero());
    }

    #[test]
    fn consistent_sources_close_the_system() {
        let s = PolySampler::new(4);
        let mut rng = seeded_rng(2, 0);
        for _ in 0..20 {
            let e = std::array::from_fn(|_| s.sample(&mut rng, 4));
            let b = std::array::from_fn(|_| s.sample(&mut rng, 4));
            let f = EMField3::with_consistent_sources(e, b);
            let i = maxwell_inhomogeneous_residuals(&f);
            assert!(i.three_plus_one_zero() && i.four_d_zero());
            assert!(continuity_residual_3(&f).is_zero());
        }
    }

    #[test]
    fn continuity_vanishes_for_arbitrary_f() {
        let mut rng = seeded_rng(3, 0);
        for _ in 0..20 {
            let dy = PolySampler::new(5).complex(true).dyad(&mut rng, 4, 4);
            let fs = FieldStrength::new(dy).unwrap();
            assert!(continuity_residual(&fs).is_zero());
        }
        let zero = FieldStrength::new(AntisymmetricDyad::zeros(4)).unwrap();
        assert!(continuity_residual(&zero).is_zero());
    }

    #[test]
    fn equivalence_on_random_fields() {
        let cal = Calibration::get();
        let s = PolySampler::new(4);
        let mut rng = seeded_rng(4, 0);
        for _ in 0..20 {
            let mut f = EMField3::vacuum(
                std::array::from_fn(|_| s.sample(&mut rng, 4)),
                std::array::from_fn(|_| s.sample(&mut rng, 4)),
            );
            f.rho = s.sample(&mut rng, 4);
            f.j = std::array::from_fn(|_| s.sample(&mut rng, 4));
            let eq = check_equivalence(&f, cal);
            assert!(eq.holds(), "{eq:?}");
        }
    }

    #[test]
    fn wrong_sign_breaks_equivalence() {
        let mut cal = Calibration::get().clone();
        cal.e_sign = ESign::Plus;
        let eq = check_equivalence(&generic_probe(), &cal);
        assert!(!eq.holds());
    }
}
