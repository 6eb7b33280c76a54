use super::scalar::Scalar;
use super::tensor::Tensor;
use crate::error::{Error, Result};

/// The Euclidean Levi-Civita symbol in 3 or 4 dimensions.
///
/// With a Kronecker-delta metric, upper and lower index positions coincide,
/// so a single table serves both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeviCivita {
    dim: usize,
}

/// Builds the parity symbol for `dim ∈ {3, 4}`.
pub fn levi_civita(dim: usize) -> Result<LeviCivita> {
    LeviCivita::new(dim)
}

impl LeviCivita {
    pub fn new(dim: usize) -> Result<Self> {
        match dim {
            3 | 4 => Ok(Self { dim }),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Parity of a 1-based index tuple: ±1 for a permutation of `1..=D`, 0 otherwise.
    ///
    /// # Panics
    /// If the tuple length differs from `D` or an index is outside `1..=D`.
    pub fn value(&self, idx: &[usize]) -> i8 {
        assert_eq!(idx.len(), self.dim, "Levi-Civita needs {} indices", self.dim);
        assert!(
            idx.iter().all(|&i| (1..=self.dim).contains(&i)),
            "Levi-Civita index out of range: {idx:?}"
        );
        let mut sign = 1i8;
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                match idx[a].cmp(&idx[b]) {
                    std::cmp::Ordering::Equal => return 0,
                    std::cmp::Ordering::Greater => sign = -sign,
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        sign
    }

    /// All `D!` index tuples with nonzero value, paired with their sign.
    pub fn nonzero_entries(&self) -> Vec<(Vec<usize>, i8)> {
        super::tensor::IndexTuples::new(self.dim, self.dim)
            .filter_map(|idx| {
                let v = self.value(&idx);
                (v != 0).then_some((idx, v))
            })
            .collect()
    }

    /// Dense rank-`D` tensor of the symbol.
    pub fn to_tensor<S: Scalar>(&self) -> Tensor<S> {
        Tensor::from_fn(self.dim, self.dim, |idx| S::from_int(self.value(idx) as i64))
    }
}
