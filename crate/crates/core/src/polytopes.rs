//! Counts of regular polytopes per dimension, with and without star polytopes.

use std::fmt;

use crate::error::{Error, Result};

/// A polytope count: finite, or infinite (regular polygons in 2D).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolytopeCount {
    Finite(u64),
    Infinite,
}

impl PolytopeCount {
    pub fn finite(self) -> Option<u64> {
        match self {
            PolytopeCount::Finite(n) => Some(n),
            PolytopeCount::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == PolytopeCount::Infinite
    }

    /// `self − other`; fails when either side is infinite.
    pub fn checked_sub(self, other: PolytopeCount) -> Result<i128> {
        match (self, other) {
            (PolytopeCount::Finite(a), PolytopeCount::Finite(b)) => Ok(i128::from(a) - i128::from(b)),
            _ => Err(Error::InfiniteArithmetic),
        }
    }
}

impl fmt::Display for PolytopeCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeCount::Finite(n) => write!(f, "{n}"),
            PolytopeCount::Infinite => f.write_str("INFINITE"),
        }
    }
}

fn dimension(d: i64) -> Result<u64> {
    u64::try_from(d).map_err(|_| Error::Domain(format!("dimension must be non-negative, got {d}")))
}

/// Number of convex regular polytopes in dimension `d`.
pub fn n_platonic(d: i64) -> Result<PolytopeCount> {
    Ok(match dimension(d)? {
        0 | 1 => PolytopeCount::Finite(1),
        2 => PolytopeCount::Infinite,
        d @ (3 | 4) => PolytopeCount::Finite(d + 2),
        _ => PolytopeCount::Finite(3),
    })
}

/// Number of regular polytopes in dimension `d` including star polytopes.
pub fn n_star_inclusive(d: i64) -> Result<PolytopeCount> {
    Ok(match dimension(d)? {
        d @ (3 | 4) => PolytopeCount::Finite(d * d),
        _ => n_platonic(d)?,
    })
}

/// One row of the dimension table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolytopeRow {
    pub dim: u64,
    pub platonic: PolytopeCount,
    pub star_inclusive: PolytopeCount,
}

/// Rows for `D = 0..=max_dim`.
pub fn table(max_dim: u64) -> Vec<PolytopeRow> {
    (0..=max_dim)
        .map(|d| {
            let di = i64::try_from(d).unwrap_or(i64::MAX);
            PolytopeRow {
                dim: d,
                platonic: n_platonic(di).expect("non-negative"),
                star_inclusive: n_star_inclusive(di).expect("non-negative"),
            }
        })
        .collect()
}
