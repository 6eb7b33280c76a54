//! Dense tensors over `D ∈ {1..4}` with 1-based index tuples.

use std::ops::{Add, Sub};

use super::poly::MultiPoly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Row-major enumeration of all 1-based index tuples of a given rank.
#[derive(Clone, Debug)]
pub struct IndexTuples {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl IndexTuples {
    pub fn new(dim: usize, rank: usize) -> Self {
        Self {
            dim,
            current: (dim > 0 || rank == 0).then(|| vec![1; rank]),
        }
    }
}

impl Iterator for IndexTuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut k = cur.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] <= self.dim {
                break;
            }
            cur[k] = 1;
        }
        Some(out)
    }
}

/// Dense rank-`r` tensor with `D^r` components.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<S> {
    dim: usize,
    rank: usize,
    data: Vec<S>,
}

/// Tensor whose components are polynomials in the coordinates.
pub type TensorField = Tensor<MultiPoly>;

impl<S: Scalar> Tensor<S> {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        Self {
            dim,
            rank,
            data: vec![S::zero(); dim.pow(rank as u32)],
        }
    }

    /// Builds a tensor from a function of the 1-based index tuple.
    pub fn from_fn<F: FnMut(&[usize]) -> S>(dim: usize, rank: usize, mut f: F) -> Self {
        Self {
            dim,
            rank,
            data: IndexTuples::new(dim, rank).map(|idx| f(&idx)).collect(),
        }
    }

    pub fn from_vec(dim: usize, rank: usize, data: Vec<S>) -> Result<Self> {
        let want = dim.pow(rank as u32);
        if data.len() != want {
            return Err(Error::Shape(format!(
                "rank-{rank} tensor in {dim}D needs {want} components, got {}",
                data.len()
            )));
        }
        Ok(Self { dim, rank, data })
    }

    pub fn scalar(value: S) -> Self {
        Self {
            dim: 1,
            rank: 0,
            data: vec![value],
        }
    }

    pub fn vector(components: Vec<S>) -> Self {
        Self {
            dim: components.len(),
            rank: 1,
            data: components,
        }
    }

    /// Kronecker delta `δ_{ab}`, the Euclidean metric.
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, 2, |i| if i[0] == i[1] { S::one() } else { S::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn components(&self) -> &[S] {
        &self.data
    }

    pub fn into_components(self) -> Vec<S> {
        self.data
    }

    fn offset(&self, idx: &[usize]) -> Result<usize> {
        if idx.len() != self.rank {
            return Err(Error::Shape(format!(
                "rank-{} tensor indexed with {} indices",
                self.rank,
                idx.len()
            )));
        }
        let mut off = 0;
        for &i in idx {
            if !(1..=self.dim).contains(&i) {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    bound: self.dim,
                });
            }
            off = off * self.dim + (i - 1);
        }
        Ok(off)
    }

    /// Component at a 1-based index tuple.
    pub fn get(&self, idx: &[usize]) -> Result<&S> {
        let off = self.offset(idx)?;
        Ok(&self.data[off])
    }

    pub fn set(&mut self, idx: &[usize], value: S) -> Result<()> {
        let off = self.offset(idx)?;
        self.data[off] = value;
        Ok(())
    }

    /// Panicking accessor for internal loops over known-valid tuples.
    pub(crate) fn at(&self, idx: &[usize]) -> &S {
        let mut off = 0;
        for &i in idx {
            off = off * self.dim + (i - 1);
        }
        &self.data[off]
    }

    /// Component of a rank-1 tensor.
    pub fn component(&self, i: usize) -> Result<&S> {
        self.get(&[i])
    }

    pub fn map<T: Scalar, F: FnMut(&S) -> T>(&self, f: F) -> Tensor<T> {
        Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar, F: FnMut(&S) -> Result<T>>(&self, f: F) -> Result<Tensor<T>> {
        Ok(Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim || self.rank != other.rank {
            return Err(Error::Shape(format!(
                "shape mismatch: ({}D, rank {}) vs ({}D, rank {})",
                self.dim, self.rank, other.dim, other.rank
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    fn zip<F: FnMut(&S, &S) -> S>(&self, other: &Self, mut f: F) -> Self {
        Self {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// `true` if `T_{..a..b..} = -T_{..b..a..}` for every pair of slots.
    pub fn is_totally_antisymmetric(&self) -> bool {
        IndexTuples::new(self.dim, self.rank).all(|idx| {
            let v = self.at(&idx);
            (0..self.rank).all(|a| {
                (a + 1..self.rank).all(|b| {
                    let mut sw = idx.clone();
                    sw.swap(a, b);
                    *self.at(&sw) == -v.clone()
                })
            })
        })
    }

    /// Euclidean dot product of two rank-1 tensors (bilinear, no conjugation).
    pub fn dot(&self, other: &Self) -> Result<S> {
        if self.rank != 1 || other.rank != 1 {
            return Err(Error::Shape("dot product needs two vectors".into()));
        }
        self.same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }
}

impl<S: Scalar> Add for &Tensor<S> {
    type Output = Tensor<S>;
    /// # Panics
    /// On shape mismatch; use [`Tensor::try_add`] for a checked version.
    fn add(self, rhs: &Tensor<S>) -> Tensor<S> {
        self.try_add(rhs).expect("tensor shape mismatch")
    }
}

impl<S: Scalar> Sub for &Tensor<S> {
    type Output = Tensor<S>;
    fn sub(self, rhs: &Tensor<S>) -> Tensor<S> {
        self.try_sub(rhs).expect("tensor shape mismatch")
    }
}

/// Euclidean contraction of `t ⊗ u` over the given 1-based slot pairs.
///
/// Each pair `(a, b)` sums slot `a` of `t` against slot `b` of `u`. The free
/// slots of `t` come first in the result, followed by those of `u`. With the
/// metric fixed to `δ`, no metric factors appear.
pub fn contract<S: Scalar>(t: &Tensor<S>, u: &Tensor<S>, pairs: &[(usize, usize)]) -> Result<Tensor<S>> {
    if t.dim != u.dim {
        return Err(Error::Shape(format!(
            "cannot contract {}D with {}D tensor",
            t.dim, u.dim
        )));
    }
    let dim = t.dim;
    for &(a, b) in pairs {
        if !(1..=t.rank).contains(&a) || !(1..=u.rank).contains(&b) {
            return Err(Error::Shape(format!(
                "contraction pair ({a}, {b}) out of range for ranks {} and {}",
                t.rank, u.rank
            )));
        }
    }
    let mut seen_t = vec![false; t.rank];
    let mut seen_u = vec![false; u.rank];
    for &(a, b) in pairs {
        if std::mem::replace(&mut seen_t[a - 1], true) || std::mem::replace(&mut seen_u[b - 1], true) {
            return Err(Error::Shape("slot contracted twice".into()));
        }
    }
    let free_t: Vec<usize> = (0..t.rank).filter(|&k| !seen_t[k]).collect();
    let free_u: Vec<usize> = (0..u.rank).filter(|&k| !seen_u[k]).collect();
    let out_rank = free_t.len() + free_u.len();

    let mut ti = vec![0usize; t.rank];
    let mut ui = vec![0usize; u.rank];
    let out = Tensor::from_fn(dim, out_rank, |oidx| {
        for (n, &k) in free_t.iter().enumerate() {
            ti[k] = oidx[n];
        }
        for (n, &k) in free_u.iter().enumerate() {
            ui[k] = oidx[free_t.len() + n];
        }
        let mut acc = S::zero();
        for sidx in IndexTuples::new(dim, pairs.len()) {
            for (n, &(a, b)) in pairs.iter().enumerate() {
                ti[a - 1] = sidx[n];
                ui[b - 1] = sidx[n];
            }
            let x = t.at(&ti);
            if x.is_zero() {
                continue;
            }
            acc = acc + x.clone() * u.at(&ui).clone();
        }
        acc
    });
    Ok(out)
}

/// Rank-2 tensor with `C_{ab} = -C_{ba}` (and hence zero diagonal).
#[derive(Clone, Debug, PartialEq)]
pub struct AntisymmetricDyad<S> {
    inner: Tensor<S>,
}

/// Antisymmetric dyad with polynomial components.
pub type AntisymmetricDyadField = AntisymmetricDyad<MultiPoly>;

impl<S: Scalar> AntisymmetricDyad<S> {
    /// Validates a rank-2 tensor.
    pub fn new(t: Tensor<S>) -> Result<Self> {
        if t.rank != 2 {
            return Err(Error::Shape(format!("dyad must be rank 2, got rank {}", t.rank)));
        }
        for i in 1..=t.dim {
            for j in i..=t.dim {
                if *t.at(&[i, j]) != -t.at(&[j, i]).clone() {
                    return Err(Error::Invariant(format!(
                        "dyad not antisymmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self { inner: t })
    }

    /// Builds the dyad from its strictly upper triangle `f(i, j)`, `i < j`.
    pub fn from_upper<F: FnMut(usize, usize) -> S>(dim: usize, mut f: F) -> Self {
        let mut t = Tensor::zeros(dim, 2);
        for i in 1..=dim {
            for j in i + 1..=dim {
                let v = f(i, j);
                t.data[(i - 1) * dim + (j - 1)] = v.clone();
                t.data[(j - 1) * dim + (i - 1)] = -v;
            }
        }
        Self { inner: t }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: Tensor::zeros(dim, 2),
        }
    }

    /// Wraps a tensor known to be antisymmetric by construction.
    pub(crate) fn new_unchecked(t: Tensor<S>) -> Self {
        debug_assert!(t.rank == 2);
        Self { inner: t }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&S> {
        self.inner.get(&[i, j])
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> &S {
        self.inner.at(&[i, j])
    }

    pub fn as_tensor(&self) -> &Tensor<S> {
        &self.inner
    }

    pub fn into_tensor(self) -> Tensor<S> {
        self.inner
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            inner: self.inner.scale(s),
        }
    }

    pub fn map<T: Scalar, F: FnMut(&S) -> T>(&self, f: F) -> AntisymmetricDyad<T> {
        AntisymmetricDyad {
            inner: self.inner.map(f),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            inner: self.inner.try_add(&other.inner)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            inner: self.inner.try_sub(&other.inner)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }
}

/// The flat Euclidean metric `g = δ`, `√g = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetricConfig {
    dim: usize,
}

impl MetricConfig {
    pub fn euclidean(dim: usize) -> Result<Self> {
        match dim {
            3 | 4 => Ok(Self { dim }),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn metric<S: Scalar>(&self) -> Tensor<S> {
        Tensor::identity(self.dim)
    }

    pub fn inverse_metric<S: Scalar>(&self) -> Tensor<S> {
        Tensor::identity(self.dim)
    }

    pub fn sqrt_det<S: Scalar>(&self) -> S {
        S::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::levi_civita::levi_civita;
    use crate::algebra::scalar::GaussianRational as Q;

    fn q(n: i64) -> Q {
        Q::from(n)
    }

    #[test]
    fn index_tuples_row_major() {
        let v: Vec<_> = IndexTuples::new(2, 2).collect();
        assert_eq!(v, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(IndexTuples::new(3, 0).count(), 1);
        assert_eq!(IndexTuples::new(4, 4).count(), 256);
    }

    #[test]
    fn component_count_is_dim_pow_rank() {
        for d in 1..=4 {
            for r in 0..=4 {
                assert_eq!(Tensor::<Q>::zeros(d, r).len(), d.pow(r as u32));
            }
        }
        assert!(Tensor::from_vec(3, 2, vec![q(0); 8]).is_err());
    }

    #[test]
    fn delta_contracted_with_vector() {
        let b = Tensor::vector(vec![q(3), q(-1), q(7), q(2)]);
        let delta = Tensor::<Q>::identity(4);
        assert_eq!(contract(&delta, &b, &[(2, 1)]).unwrap(), b);
    }

    /// Brute-force oracle over all index tuples, independent of `contract`.
    fn eps_eps_oracle(d: usize, shared: usize) -> Vec<i64> {
        let eps = levi_civita(d).unwrap();
        let free = d - shared;
        let mut out = vec![];
        for fa in IndexTuples::new(d, free) {
            for fb in IndexTuples::new(d, free) {
                let mut s = 0i64;
                for sh in IndexTuples::new(d, shared) {
                    let a: Vec<usize> = fa.iter().chain(&sh).copied().collect();
                    let b: Vec<usize> = fb.iter().chain(&sh).copied().collect();
                    s += (eps.value(&a) * eps.value(&b)) as i64;
                }
                out.push(s);
            }
        }
        out
    }

    #[test]
    fn eps3_double_contraction_is_two_delta() {
        let oracle = eps_eps_oracle(3, 2);
        // frozen from the oracle: 2 δ_ij
        let expected: Vec<i64> = (0..9).map(|k| if k % 4 == 0 { 2 } else { 0 }).collect();
        assert_eq!(oracle, expected);
        let eps = levi_civita(3).unwrap().to_tensor::<Q>();
        let c = contract(&eps, &eps, &[(2, 2), (3, 3)]).unwrap();
        assert_eq!(c, Tensor::<Q>::identity(3).scale(&q(2)));
    }

    #[test]
    fn eps4_double_contraction() {
        let oracle = eps_eps_oracle(4, 2);
        let eps = levi_civita(4).unwrap().to_tensor::<Q>();
        let c = contract(&eps, &eps, &[(3, 3), (4, 4)]).unwrap();
        let expected = Tensor::<Q>::from_fn(4, 4, |i| {
            let (a, b, r, s) = (i[0], i[1], i[2], i[3]);
            let d = |x: usize, y: usize| (x == y) as i64;
            q(2 * (d(a, r) * d(b, s) - d(a, s) * d(b, r)))
        });
        assert_eq!(c, expected);
        let oracle_t = Tensor::from_vec(4, 4, oracle.into_iter().map(q).collect()).unwrap();
        assert_eq!(c, oracle_t);
    }

    #[test]
    fn contract_rejects_mismatched_dims() {
        let a = Tensor::<Q>::zeros(3, 1);
        let b = Tensor::<Q>::zeros(4, 1);
        assert!(matches!(contract(&a, &b, &[(1, 1)]), Err(Error::Shape(_))));
        assert!(contract(&a, &a, &[(2, 1)]).is_err());
    }

    #[test]
    fn dyad_validation() {
        let mut t = Tensor::<Q>::zeros(4, 2);
        t.set(&[1, 2], q(1)).unwrap();
        assert!(matches!(AntisymmetricDyad::new(t.clone()), Err(Error::Invariant(_))));
        t.set(&[2, 1], q(-1)).unwrap();
        assert!(AntisymmetricDyad::new(t).is_ok());
        let mut diag = Tensor::<Q>::zeros(3, 2);
        diag.set(&[2, 2], q(1)).unwrap();
        assert!(AntisymmetricDyad::new(diag).is_err());
    }

    #[test]
    fn metric_is_delta() {
        let m = MetricConfig::euclidean(4).unwrap();
        assert_eq!(m.metric::<Q>(), Tensor::identity(4));
        assert_eq!(m.sqrt_det::<Q>(), q(1));
        assert!(MetricConfig::euclidean(2).is_err());
    }
}
