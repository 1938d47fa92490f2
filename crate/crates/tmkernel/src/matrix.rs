//! Dense symmetric matrices with lower-triangle storage.
//!
//! Gram matrices and pairwise distance matrices between embedded densities
//! are symmetric by construction, so only the lower triangle (including the
//! diagonal) is stored. Entries of a `Distance` matrix are plain (not
//! squared) distances with an exactly zero diagonal.

use crate::error::{Error, Result};
use ndarray::Array2;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Gram,
    Distance,
}

impl MatrixKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MatrixKind::Gram => "gram",
            MatrixKind::Distance => "distance",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "gram" => Ok(MatrixKind::Gram),
            "distance" => Ok(MatrixKind::Distance),
            other => Err(Error::Format(format!("unknown matrix kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    kind: MatrixKind,
    // Lower triangle, row-major: entry (i, j) with j <= i at i*(i+1)/2 + j.
    tri: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize, kind: MatrixKind) -> Self {
        SymmetricMatrix {
            n,
            kind,
            tri: vec![0.0; n * (n + 1) / 2],
        }
    }

    /// Builds from `f(i, j)` evaluated once per pair with `j <= i`.
    pub fn from_fn(n: usize, kind: MatrixKind, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymmetricMatrix::zeros(n, kind);
        for i in 0..n {
            for j in 0..=i {
                m.tri[i * (i + 1) / 2 + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_triangle(n: usize, kind: MatrixKind, tri: Vec<f64>) -> Result<Self> {
        if tri.len() != n * (n + 1) / 2 {
            return Err(Error::invalid(format!(
                "triangle length {} does not match size {n}",
                tri.len()
            )));
        }
        Ok(SymmetricMatrix { n, kind, tri })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn triangle(&self) -> &[f64] {
        &self.tri
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (a, b) = if i >= j { (i, j) } else { (j, i) };
        self.tri[a * (a + 1) / 2 + b]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let (a, b) = if i >= j { (i, j) } else { (j, i) };
        self.tri[a * (a + 1) / 2 + b] = v;
    }

    pub fn to_dense(&self) -> Array2<f64> {
        Array2::from_shape_fn((self.n, self.n), |(i, j)| self.get(i, j))
    }

    /// Element-wise square root, e.g. squared distances to plain distances.
    pub fn sqrt(&self) -> SymmetricMatrix {
        SymmetricMatrix {
            n: self.n,
            kind: self.kind,
            tri: self.tri.iter().map(|v| v.sqrt()).collect(),
        }
    }

    /// Iterates over the strict lower triangle as `(i, j, value)` with `j < i`.
    pub fn off_diagonal(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| (0..i).map(move |j| (i, j, self.get(i, j))))
    }

    /// Applies the permutation `perm` to rows and columns (entry (i, j) of the
    /// result is entry (perm[i], perm[j]) of self).
    pub fn permuted(&self, perm: &[usize]) -> Result<SymmetricMatrix> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch(perm.len(), self.n));
        }
        Ok(SymmetricMatrix::from_fn(self.n, self.kind, |i, j| {
            self.get(perm[i], perm[j])
        }))
    }
}

/// Sums `f(0..n)` with a fixed-order pairwise (cascade) reduction.
///
/// Keeps long accumulations accurate and gives the same result for any
/// thread count since the reduction tree depends only on `n`.
pub(crate) fn pairwise_sum_by(n: usize, f: &mut impl FnMut(usize) -> f64) -> f64 {
    fn rec(lo: usize, hi: usize, f: &mut impl FnMut(usize) -> f64) -> f64 {
        if hi - lo <= 16 {
            let mut s = 0.0;
            for k in lo..hi {
                s += f(k);
            }
            s
        } else {
            let mid = lo + (hi - lo) / 2;
            rec(lo, mid, f) + rec(mid, hi, f)
        }
    }
    if n == 0 {
        0.0
    } else {
        rec(0, n, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_indexing_round_trips() {
        let mut m = SymmetricMatrix::zeros(4, MatrixKind::Gram);
        m.set(2, 1, 5.0);
        assert_eq!(m.get(1, 2), 5.0);
        assert_eq!(m.get(2, 1), 5.0);
        m.set(0, 3, -1.5);
        assert_eq!(m.get(3, 0), -1.5);
    }

    #[test]
    fn dense_is_symmetric() {
        let m = SymmetricMatrix::from_fn(5, MatrixKind::Distance, |i, j| (i + j) as f64);
        let d = m.to_dense();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(d[[i, j]], d[[j, i]]);
            }
        }
    }

    #[test]
    fn pairwise_sum_matches_naive() {
        let vals: Vec<f64> = (0..1000).map(|k| (k as f64).sin()).collect();
        let s = pairwise_sum_by(vals.len(), &mut |k| vals[k]);
        let naive: f64 = vals.iter().sum();
        assert!((s - naive).abs() < 1e-9);
    }

    #[test]
    fn permuted_swaps_entries() {
        let m = SymmetricMatrix::from_fn(3, MatrixKind::Distance, |i, j| (3 * i + j) as f64);
        let p = m.permuted(&[2, 0, 1]).unwrap();
        assert_eq!(p.get(0, 1), m.get(2, 0));
    }
}
