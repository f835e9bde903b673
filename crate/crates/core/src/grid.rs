//! Uniform 1D grids.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How a stencil or kernel treats neighbours past the ends of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    /// Indices wrap around; displacements use the minimal-image convention.
    #[default]
    Periodic,
    /// Out-of-range neighbours read as zero; displacements are raw offsets.
    ZeroPad,
}

/// Uniform grid of `n >= 2` nodes at `q_i = origin + i * delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D<S> {
    n: usize,
    delta: S,
    origin: S,
    boundary: Boundary,
}

impl<S: Scalar> Grid1D<S> {
    pub fn uniform(n: usize, delta: S, origin: S, boundary: Boundary) -> Result<Self> {
        if n < 2 {
            return Err(Error::GridTooSmall(n));
        }
        if !(delta > S::zero()) || !delta.is_finite() {
            return Err(Error::NonPositiveSpacing);
        }
        if !origin.is_finite() {
            return Err(Error::NonFinite { context: "grid origin" });
        }
        Ok(Self { n, delta, origin, boundary })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> S {
        self.delta
    }

    pub fn origin(&self) -> S {
        self.origin
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Coordinate of node `i`.
    pub fn coord(&self, i: usize) -> S {
        self.origin + S::from_usize(i).unwrap() * self.delta
    }

    pub fn coords(&self) -> Vec<S> {
        (0..self.n).map(|i| self.coord(i)).collect()
    }

    /// Signed node offset `j - i` under this grid's boundary rule.
    ///
    /// Periodic grids use the minimal image in `(-n/2, n/2]`; zero-padded
    /// grids return the raw offset.
    pub fn node_offset(&self, i: usize, j: usize) -> isize {
        let raw = j as isize - i as isize;
        match self.boundary {
            Boundary::ZeroPad => raw,
            Boundary::Periodic => {
                let n = self.n as isize;
                let mut m = raw.rem_euclid(n);
                if m > n / 2 {
                    m -= n;
                }
                m
            }
        }
    }

    /// Physical displacement `delta * node_offset(i, j)`.
    pub fn displacement(&self, i: usize, j: usize) -> S {
        S::from_isize(self.node_offset(i, j)).unwrap() * self.delta
    }
}
