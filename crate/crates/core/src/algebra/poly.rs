//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Polynomials live in the ring `Q(i)[x1, x2, x3, x4]`. Which physical
//! quantity the fourth slot stands for is a matter of context: in 4D it is
//! the Euclidean coordinate `x4`, in 3+1 mode it is coordinate time `t`.
//! Axes are 1-based throughout the public API.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;

use super::scalar::{GaussianRational, Scalar};
use crate::error::{Error, Result};

/// Number of variable slots.
pub const MAX_VARS: usize = 4;

/// Exponent vector of a monomial, slot `k` holds the power of `x_{k+1}`.
pub type Exponents = [u32; MAX_VARS];

/// Canonical sparse polynomial. No stored coefficient is zero and terms are
/// ordered by exponent vector, so equal polynomials are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, GaussianRational>,
}

fn check_axis(axis: usize) -> Result<usize> {
    if (1..=MAX_VARS).contains(&axis) {
        Ok(axis - 1)
    } else {
        Err(Error::IndexOutOfRange {
            index: axis,
            bound: MAX_VARS,
        })
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, [0; MAX_VARS])
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::from(n))
    }

    /// The coordinate `x_axis` (1-based).
    pub fn var(axis: usize) -> Result<Self> {
        let k = check_axis(axis)?;
        let mut e = [0; MAX_VARS];
        e[k] = 1;
        Ok(Self::monomial(GaussianRational::one(), e))
    }

    pub fn monomial(coeff: GaussianRational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, GaussianRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: Exponents, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &Exponents) -> GaussianRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&[0; MAX_VARS])
    }

    /// `Some(c)` if the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self
                .terms
                .get(&[0; MAX_VARS])
                .cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Highest power of `x_axis` present.
    pub fn degree_in(&self, axis: usize) -> Result<u32> {
        let k = check_axis(axis)?;
        Ok(self.terms.keys().map(|e| e[k]).max().unwrap_or(0))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Applies `f(exponents, coeff)` to every term's coefficient.
    pub fn map_coeffs<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Exponents, &GaussianRational) -> GaussianRational,
    {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, f(e, c))))
    }

    /// Exact formal partial derivative with respect to `x_axis`.
    pub fn partial_derivative(&self, axis: usize) -> Result<Self> {
        let k = check_axis(axis)?;
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut de = *e;
            de[k] -= 1;
            out.add_term(de, c * &GaussianRational::from(e[k] as i64));
        }
        Ok(out)
    }

    /// Multiplies by `x_axis`.
    pub fn mul_var(&self, axis: usize) -> Result<Self> {
        let k = check_axis(axis)?;
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = *e;
                    ne[k] += 1;
                    (ne, c.clone())
                })
                .collect(),
        })
    }

    /// Antiderivative in `x_axis` with zero constant of integration.
    pub fn antiderivative(&self, axis: usize) -> Result<Self> {
        let k = check_axis(axis)?;
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = *e;
            ne[k] += 1;
            out.add_term(ne, c * &GaussianRational::real(1, ne[k] as i64));
        }
        Ok(out)
    }

    /// Replaces `x_axis` by the constant `value`.
    pub fn substitute(&self, axis: usize, value: &GaussianRational) -> Result<Self> {
        let k = check_axis(axis)?;
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = *e;
            ne[k] = 0;
            out.add_term(ne, c * &value.pow(e[k]));
        }
        Ok(out)
    }

    /// Replaces `x_axis` by `factor * x_axis`.
    pub fn rescale_var(&self, axis: usize, factor: &GaussianRational) -> Result<Self> {
        let k = check_axis(axis)?;
        Ok(self.map_coeffs(|e, c| c * &factor.pow(e[k])))
    }

    /// `∫_lo^hi p dx_axis`, eliminating `x_axis`.
    pub fn definite_integral(
        &self,
        axis: usize,
        lo: &GaussianRational,
        hi: &GaussianRational,
    ) -> Result<Self> {
        let anti = self.antiderivative(axis)?;
        Ok(&anti.substitute(axis, hi)? - &anti.substitute(axis, lo)?)
    }

    /// Exact evaluation at a point with Gaussian-rational coordinates.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, &p) in e.iter().enumerate() {
                if p > 0 {
                    let x = point.get(k).cloned().unwrap_or_else(GaussianRational::zero);
                    term = &term * &x.pow(p);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Float evaluation; missing trailing coordinates are taken as zero.
    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut term = c.to_complex64();
            for (k, &p) in e.iter().enumerate() {
                if p > 0 {
                    let x = point.get(k).copied().unwrap_or_default();
                    term *= x.powu(p);
                }
            }
            acc += term;
        }
        acc
    }

    /// If `self = λ·other` for some constant λ, returns λ. `None` when
    /// `other` is zero and `self` is not, or when no such constant exists.
    pub fn proportionality(&self, other: &Self) -> Option<GaussianRational> {
        if other.is_zero() {
            return self.is_zero().then(GaussianRational::zero);
        }
        let (e0, c0) = other.terms.iter().next()?;
        let lambda = self.coeff(e0).checked_div(c0)?;
        (&other.scale(&lambda) == self).then_some(lambda)
    }

    /// Largest `|re|`/`|im|` over all coefficients; 0 for the zero polynomial.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .values()
            .map(GaussianRational::max_abs_part)
            .fold(0.0, f64::max)
    }

    /// Renders with custom variable names.
    pub fn display_with(&self, names: &[&str; MAX_VARS]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| {
                    if p == 1 {
                        names[k].to_string()
                    } else {
                        format!("{}^{}", names[k], p)
                    }
                })
                .collect();
            let cs = c.to_string();
            let (sign, body) = match cs.strip_prefix('-') {
                Some(rest) if c.is_real() || c.is_imaginary() => ("-", rest.to_string()),
                _ => ("+", cs),
            };
            if n == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mono.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", body, mono.join("*")));
            }
        }
        out
    }
}

impl From<GaussianRational> for MultiPoly {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl From<BigRational> for MultiPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(GaussianRational::from_rational(c))
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for k in 0..MAX_VARS {
                    e[k] += eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl Scalar for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::int(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        MultiPoly::constant(GaussianRational::real(num, den))
    }
    fn imag_unit() -> Self {
        MultiPoly::constant(GaussianRational::imag_unit())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&["x1", "x2", "x3", "x4"]))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
