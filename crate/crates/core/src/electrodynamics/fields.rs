//! 3+1 fields, the 4D field strength and the component dictionary between them.
//!
//! 3+1 polynomials use slot 4 for coordinate time `t`; 4D polynomials use it
//! for `x4 = i t` (units with `c = 1`). Moving between the two is the exact
//! substitution `t = x4 / i = −i x4`.

use crate::algebra::{
    levi_civita, AntisymmetricDyad, AntisymmetricDyadField, GaussianRational, MultiPoly, Scalar,
    Tensor, TensorField,
};
use crate::error::{Error, Result};

/// Variable slot holding `t` in 3+1 polynomials and `x4` in 4D ones.
pub const TIME_AXIS: usize = 4;

/// Rewrites a polynomial in `(x1, x2, x3, t)` in terms of `(x1, x2, x3, x4)`.
pub fn to_euclidean(p: &MultiPoly) -> MultiPoly {
    p.rescale_var(TIME_AXIS, &-GaussianRational::imag_unit())
        .expect("time axis is valid")
}

/// Inverse of [`to_euclidean`]: substitutes `x4 = i t`.
pub fn to_coordinate_time(p: &MultiPoly) -> MultiPoly {
    p.rescale_var(TIME_AXIS, &GaussianRational::imag_unit())
        .expect("time axis is valid")
}

/// Electric and magnetic fields with their sources, as polynomials in
/// `(x1, x2, x3, t)`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct EMField3 {
    pub e: [MultiPoly; 3],
    pub b: [MultiPoly; 3],
    pub rho: MultiPoly,
    pub j: [MultiPoly; 3],
}

fn curl(v: &[MultiPoly; 3]) -> [MultiPoly; 3] {
    let d = |p: &MultiPoly, k| p.partial_derivative(k).expect("axis");
    [
        &d(&v[2], 2) - &d(&v[1], 3),
        &d(&v[0], 3) - &d(&v[2], 1),
        &d(&v[1], 1) - &d(&v[0], 2),
    ]
}

fn div(v: &[MultiPoly; 3]) -> MultiPoly {
    (0..3).fold(MultiPoly::zero(), |acc, k| {
        &acc + &v[k].partial_derivative(k + 1).expect("axis")
    })
}

fn dt(p: &MultiPoly) -> MultiPoly {
    p.partial_derivative(TIME_AXIS).expect("axis")
}

impl EMField3 {
    /// Source-free field.
    pub fn vacuum(e: [MultiPoly; 3], b: [MultiPoly; 3]) -> Self {
        Self {
            e,
            b,
            ..Default::default()
        }
    }

    /// Field whose sources are defined by Gauss and Ampère–Maxwell:
    /// `ρ = ∇·E`, `j = ∇×B − ∂E/∂t`.
    pub fn with_consistent_sources(e: [MultiPoly; 3], b: [MultiPoly; 3]) -> Self {
        let rho = div(&e);
        let cb = curl(&b);
        let j = std::array::from_fn(|k| &cb[k] - &dt(&e[k]));
        Self { e, b, rho, j }
    }

    /// Field derived from a vector potential `A` and scalar potential `φ`:
    /// `B = ∇×A`, `E = −∂A/∂t − ∇φ`.
    pub fn from_potentials(a: &[MultiPoly; 3], phi: &MultiPoly) -> Self {
        let b = curl(a);
        let e = std::array::from_fn(|k| {
            let g = phi.partial_derivative(k + 1).expect("axis");
            -&(&dt(&a[k]) + &g)
        });
        Self::vacuum(e, b)
    }

    pub fn curl_e(&self) -> [MultiPoly; 3] {
        curl(&self.e)
    }

    pub fn curl_b(&self) -> [MultiPoly; 3] {
        curl(&self.b)
    }

    pub fn div_e(&self) -> MultiPoly {
        div(&self.e)
    }

    pub fn div_b(&self) -> MultiPoly {
        div(&self.b)
    }

    pub fn dt_e(&self) -> [MultiPoly; 3] {
        std::array::from_fn(|k| dt(&self.e[k]))
    }

    pub fn dt_b(&self) -> [MultiPoly; 3] {
        std::array::from_fn(|k| dt(&self.b[k]))
    }

    pub fn dt_rho(&self) -> MultiPoly {
        dt(&self.rho)
    }

    pub fn div_j(&self) -> MultiPoly {
        div(&self.j)
    }
}

/// Sign `s` in the time-space entries `F_k4 = s·i·E_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ESign {
    Plus,
    Minus,
}

impl ESign {
    pub fn value(self) -> i64 {
        match self {
            ESign::Plus => 1,
            ESign::Minus => -1,
        }
    }

    pub fn both() -> [ESign; 2] {
        [ESign::Plus, ESign::Minus]
    }
}

/// The Euclidean field-strength tensor `F_μν` with polynomial entries in `x1..x4`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldStrength {
    f: AntisymmetricDyadField,
}

impl FieldStrength {
    pub fn new(f: AntisymmetricDyadField) -> Result<Self> {
        if f.dim() != 4 {
            return Err(Error::Shape(format!("field strength must be 4D, got {}D", f.dim())));
        }
        Ok(Self { f })
    }

    /// Applies the dictionary `F_jk = ε_jkm B_m`, `F_k4 = s·i·E_k`, with `t = −i x4`.
    pub fn from_fields(field: &EMField3, sign: ESign) -> Self {
        let eps = levi_civita(3).expect("3D");
        let si = GaussianRational::imag(sign.value(), 1);
        let f = AntisymmetricDyad::from_upper(4, |j, k| {
            if k == 4 {
                to_euclidean(&field.e[j - 1]).scale(&si)
            } else {
                let m = 6 - j - k;
                to_euclidean(&field.b[m - 1]).scale(&GaussianRational::from(eps.value(&[j, k, m]) as i64))
            }
        });
        Self { f }
    }

    /// Inverse dictionary: recovers `(E, B)` as polynomials in `(x1, x2, x3, t)`.
    pub fn to_fields(&self, sign: ESign) -> ([MultiPoly; 3], [MultiPoly; 3]) {
        // E_k = F_k4 / (s i) = −s i F_k4
        let inv = GaussianRational::imag(-sign.value(), 1);
        let e = std::array::from_fn(|k| to_coordinate_time(&self.f.at(k + 1, 4).scale(&inv)));
        let b = [
            to_coordinate_time(self.f.at(2, 3)),
            to_coordinate_time(self.f.at(3, 1)),
            to_coordinate_time(self.f.at(1, 2)),
        ];
        (e, b)
    }

    pub fn dyad(&self) -> &AntisymmetricDyadField {
        &self.f
    }

    pub fn get(&self, mu: usize, nu: usize) -> Result<&MultiPoly> {
        self.f.get(mu, nu)
    }

    /// Numeric snapshot at a 4D event.
    pub fn evaluate(&self, event: &[num_complex::Complex64; 4]) -> AntisymmetricDyad<num_complex::Complex64> {
        self.f.map(|p| p.eval_complex(event))
    }

    /// `true` if, at every point `x4 = i t` with real `(x, t)`, space-space
    /// entries are real and time-space entries purely imaginary.
    pub fn has_physical_reality(&self) -> bool {
        (1..=4).all(|mu| {
            (mu + 1..=4).all(|nu| {
                let p = to_coordinate_time(self.f.at(mu, nu));
                let ok = p.terms().all(|(_, c)| if nu == 4 { c.is_imaginary() } else { c.is_real() });
                ok
            })
        })
    }
}

/// Hodge dual `F̃_μν = ½ ε_μνρσ F_ρσ` in 4D.
pub fn dual<S: Scalar>(f: &AntisymmetricDyad<S>) -> Result<AntisymmetricDyad<S>> {
    if f.dim() != 4 {
        return Err(Error::Shape(format!("dual needs a 4D dyad, got {}D", f.dim())));
    }
    let eps = levi_civita(4)?;
    let half = S::from_ratio(1, 2);
    Ok(AntisymmetricDyad::from_upper(4, |mu, nu| {
        let mut acc = S::zero();
        for rho in 1..=4 {
            for sigma in 1..=4 {
                match eps.value(&[mu, nu, rho, sigma]) {
                    1 => acc = acc + f.at(rho, sigma).clone(),
                    -1 => acc = acc - f.at(rho, sigma).clone(),
                    _ => {}
                }
            }
        }
        acc * half.clone()
    }))
}

/// The magnetic dyad `B_μν = ½ F̃_μν`.
pub fn b_dyad<S: Scalar>(f: &AntisymmetricDyad<S>) -> Result<AntisymmetricDyad<S>> {
    Ok(dual(f)?.scale(&S::from_ratio(1, 2)))
}

/// The electric dyad `E_μν = (i/2) F_μν`.
pub fn e_dyad<S: Scalar>(f: &AntisymmetricDyad<S>) -> Result<AntisymmetricDyad<S>> {
    if f.dim() != 4 {
        return Err(Error::Shape(format!("electric dyad needs a 4D dyad, got {}D", f.dim())));
    }
    Ok(f.scale(&(S::imag_unit() * S::from_ratio(1, 2))))
}

/// The four-current `(j1, j2, j3, i ρ)` in 4D variables.
pub fn four_current(field: &EMField3) -> TensorField {
    let mut comps: Vec<MultiPoly> = field.j.iter().map(to_euclidean).collect();
    comps.push(to_euclidean(&field.rho).scale(&GaussianRational::imag_unit()));
    Tensor::vector(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{seeded_rng, PolySampler};

    fn field_of(e: [MultiPoly; 3], b: [MultiPoly; 3]) -> EMField3 {
        EMField3::vacuum(e, b)
    }

    #[test]
    fn constant_magnetic_field_dictionary() {
        let b0 = MultiPoly::int(7);
        let f = field_of(Default::default(), [MultiPoly::zero(), MultiPoly::zero(), b0.clone()]);
        for sign in ESign::both() {
            let fs = FieldStrength::from_fields(&f, sign);
            for mu in 1..=4 {
                for nu in 1..=4 {
                    let expected = match (mu, nu) {
                        (1, 2) => b0.clone(),
                        (2, 1) => -&b0,
                        _ => MultiPoly::zero(),
                    };
                    assert_eq!(fs.get(mu, nu).unwrap(), &expected, "({mu},{nu})");
                }
            }
        }
    }

    #[test]
    fn zero_fields_zero_strength() {
        let fs = FieldStrength::from_fields(&EMField3::default(), ESign::Minus);
        assert!(fs.dyad().is_zero());
    }

    #[test]
    fn dictionary_round_trip() {
        let s = PolySampler::new(4);
        let mut rng = seeded_rng(77, 0);
        for _ in 0..20 {
            let e = std::array::from_fn(|_| s.sample(&mut rng, 4));
            let b = std::array::from_fn(|_| s.sample(&mut rng, 4));
            for sign in ESign::both() {
                let fs = FieldStrength::from_fields(&field_of(e.clone(), b.clone()), sign);
                assert!(fs.has_physical_reality());
                let (e2, b2) = fs.to_fields(sign);
                assert_eq!(e2, e);
                assert_eq!(b2, b);
            }
        }
    }

    #[test]
    fn dual_of_f12() {
        let f = AntisymmetricDyad::from_upper(4, |i, j| GaussianRational::from(((i, j) == (1, 2)) as i64 * 3));
        let fd = dual(&f).unwrap();
        assert_eq!(*fd.get(3, 4).unwrap(), GaussianRational::from(3));
        assert_eq!(*fd.get(4, 3).unwrap(), GaussianRational::from(-3));
        assert!(fd.get(1, 2).unwrap().is_zero());
        let b = b_dyad(&f).unwrap();
        assert_eq!(*b.get(3, 4).unwrap(), GaussianRational::real(3, 2));
    }

    #[test]
    fn double_dual_is_identity() {
        let mut rng = seeded_rng(8, 0);
        for _ in 0..20 {
            let f = PolySampler::new(3).complex(true).dyad(&mut rng, 4, 4);
            assert_eq!(dual(&dual(&f).unwrap()).unwrap(), f);
        }
        assert!(dual(&AntisymmetricDyad::<GaussianRational>::zeros(4)).unwrap().is_zero());
    }

    #[test]
    fn e_and_b_dyads_are_dual() {
        // 2B = dual(2·(−i)·E)
        let mut rng = seeded_rng(9, 0);
        for _ in 0..20 {
            let f = PolySampler::new(3).complex(true).dyad(&mut rng, 4, 4);
            let e = e_dyad(&f).unwrap();
            let b = b_dyad(&f).unwrap();
            let lhs = b.scale(&MultiPoly::int(2));
            let rhs = dual(&e.scale(&MultiPoly::constant(GaussianRational::imag(-2, 1)))).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dual_rejects_3d() {
        assert!(dual(&AntisymmetricDyad::<GaussianRational>::zeros(3)).is_err());
    }
}
