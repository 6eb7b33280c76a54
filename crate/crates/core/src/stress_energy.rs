//! Flat-space energy-momentum tensors built from a four-index `Ω`.
//!
//! With the Euclidean metric (`g = δ`, `√g = 1`) all index positions agree:
//!
//! ```text
//! Θ^(k)_μν = Σ_β Ω_μββν + δ_μν / (2k) · Σ_αβ Ω_αβαβ
//! Ω^(2)_αβγδ = ½ F_αβ F_γδ
//! Θ^(2)_μν = −Σ_ρ (E_μρ E_ρν + B_μρ B_ρν)
//! ```

use crate::algebra::{AntisymmetricDyad, IndexTuples, Scalar, Tensor};
use crate::electrodynamics::{b_dyad, e_dyad};
use crate::error::{Error, Result};

/// Which of the three pair symmetries an index tuple violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaSymmetry {
    /// `Ω_βαγδ = −Ω_αβγδ`
    FirstPair,
    /// `Ω_αβδγ = −Ω_αβγδ`
    SecondPair,
    /// `Ω_γδαβ = Ω_αβγδ`
    PairExchange,
}

/// Result of checking the pair symmetries on every index tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrySweep {
    pub tuples_checked: usize,
    pub violations: Vec<([usize; 4], OmegaSymmetry)>,
}

impl SymmetrySweep {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks all three pair symmetries of a rank-4 tensor over every index tuple.
pub fn symmetry_sweep<S: Scalar>(t: &Tensor<S>) -> Result<SymmetrySweep> {
    if t.rank() != 4 {
        return Err(Error::Shape(format!("expected a rank-4 tensor, got rank {}", t.rank())));
    }
    let mut sweep = SymmetrySweep { tuples_checked: 0, violations: Vec::new() };
    for idx in IndexTuples::new(t.dim(), 4) {
        let (a, b, c, d) = (idx[0], idx[1], idx[2], idx[3]);
        let v = t.at(&idx);
        sweep.tuples_checked += 1;
        if *t.at(&[b, a, c, d]) != -v.clone() {
            sweep.violations.push(([a, b, c, d], OmegaSymmetry::FirstPair));
        }
        if *t.at(&[a, b, d, c]) != -v.clone() {
            sweep.violations.push(([a, b, c, d], OmegaSymmetry::SecondPair));
        }
        if t.at(&[c, d, a, b]) != v {
            sweep.violations.push(([a, b, c, d], OmegaSymmetry::PairExchange));
        }
    }
    Ok(sweep)
}

/// A 4D rank-4 tensor with the pair symmetries, labelled by `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaTensor<S: Scalar> {
    k: u32,
    t: Tensor<S>,
}

impl<S: Scalar> OmegaTensor<S> {
    pub fn new(t: Tensor<S>, k: u32) -> Result<Self> {
        if t.dim() != 4 || t.rank() != 4 {
            return Err(Error::Shape(format!(
                "Ω must be 4D rank 4, got dim {} rank {}",
                t.dim(),
                t.rank()
            )));
        }
        check_k(k)?;
        let sweep = symmetry_sweep(&t)?;
        if let Some((idx, rel)) = sweep.violations.first() {
            return Err(Error::Invariant(format!("Ω violates {rel:?} at {idx:?}")));
        }
        Ok(OmegaTensor { k, t })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> Result<&S> {
        self.t.get(&[a, b, c, d])
    }

    pub fn as_tensor(&self) -> &Tensor<S> {
        &self.t
    }
}

/// A 4×4 energy-momentum tensor labelled by `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StressTensor<S: Scalar> {
    k: u32,
    t: Tensor<S>,
}

impl<S: Scalar> StressTensor<S> {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn get(&self, mu: usize, nu: usize) -> Result<&S> {
        self.t.get(&[mu, nu])
    }

    pub fn as_tensor(&self) -> &Tensor<S> {
        &self.t
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=4).all(|m| (m + 1..=4).all(|n| self.t.at(&[m, n]) == self.t.at(&[n, m])))
    }

    pub fn trace(&self) -> S {
        (1..=4).fold(S::zero(), |acc, m| acc + self.t.at(&[m, m]).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero()
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 1 {
        return Err(Error::Parameter(format!("k must be at least 1, got {k}")));
    }
    Ok(())
}

fn check_4d<S: Scalar>(f: &AntisymmetricDyad<S>) -> Result<()> {
    if f.dim() != 4 {
        return Err(Error::UnsupportedDimension(f.dim()));
    }
    Ok(())
}

/// `Ω^(2)_αβγδ = ½ F_αβ F_γδ` for an abelian field strength.
pub fn omega2<S: Scalar>(f: &AntisymmetricDyad<S>) -> Result<OmegaTensor<S>> {
    check_4d(f)?;
    let half = S::from_ratio(1, 2);
    let t = Tensor::from_fn(4, 4, |i| {
        half.clone() * f.at(i[0], i[1]).clone() * f.at(i[2], i[3]).clone()
    });
    Ok(OmegaTensor { k: 2, t })
}

/// [`omega2`] for a plain rank-2 tensor, rejecting non-antisymmetric input.
pub fn omega2_from_tensor<S: Scalar>(f: &Tensor<S>) -> Result<OmegaTensor<S>> {
    omega2(&AntisymmetricDyad::new(f.clone())?)
}

/// `Θ^(k)` from `Ω`.
pub fn theta_k<S: Scalar>(omega: &OmegaTensor<S>, k: u32) -> Result<StressTensor<S>> {
    check_k(k)?;
    let o = &omega.t;
    let full = (1..=4).fold(S::zero(), |acc, a| {
        (1..=4).fold(acc, |acc, b| acc + o.at(&[a, b, a, b]).clone())
    });
    let second = full * S::from_ratio(1, 2 * i64::from(k));
    let t = Tensor::from_fn(4, 2, |i| {
        let (m, n) = (i[0], i[1]);
        let first = (1..=4).fold(S::zero(), |acc, b| acc + o.at(&[m, b, b, n]).clone());
        if m == n {
            first + second.clone()
        } else {
            first
        }
    });
    Ok(StressTensor { k, t })
}

/// `Θ^(2)` directly from the electric and magnetic dyads of `F`.
pub fn theta2_direct<S: Scalar>(f: &AntisymmetricDyad<S>) -> Result<StressTensor<S>> {
    check_4d(f)?;
    let e = e_dyad(f)?;
    let b = b_dyad(f)?;
    let t = Tensor::from_fn(4, 2, |i| {
        let (m, n) = (i[0], i[1]);
        -(1..=4).fold(S::zero(), |acc, r| {
            acc + e.at(m, r).clone() * e.at(r, n).clone() + b.at(m, r).clone() * b.at(r, n).clone()
        })
    });
    Ok(StressTensor { k: 2, t })
}
