//! Real-valued signals on a grid, with the two distance conventions used
//! throughout: the delta-weighted integral norm and the bare squared-error
//! sum between a state and a target.

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::scalar::Scalar;

/// A finite real-valued signal sampled on the nodes of a [`Grid1D`].
#[derive(Debug, Clone, PartialEq)]
pub struct Field<S> {
    grid: Grid1D<S>,
    values: Vec<S>,
}

impl<S: Scalar> Field<S> {
    /// Builds a field, validating length and finiteness.
    pub fn new(grid: Grid1D<S>, values: Vec<S>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::LengthMismatch { expected: grid.n(), got: values.len() });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite { context: "field values" });
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: Grid1D<S>) -> Self {
        Self { grid, values: vec![S::zero(); grid.n()] }
    }

    pub fn constant(grid: Grid1D<S>, value: S) -> Result<Self> {
        Self::new(grid, vec![value; grid.n()])
    }

    /// Samples `f(q_i)` at every node.
    pub fn from_fn(grid: Grid1D<S>, f: impl Fn(S) -> S) -> Result<Self> {
        let values = (0..grid.n()).map(|i| f(grid.coord(i))).collect();
        Self::new(grid, values)
    }

    /// Gaussian profile `amplitude * exp(-(q-center)^2 / 2 sigma^2)`.
    pub fn gaussian_bump(grid: Grid1D<S>, center: S, sigma: S, amplitude: S) -> Result<Self> {
        if !(sigma > S::zero()) {
            return Err(Error::InvalidParameter { what: "sigma", constraint: "positive" });
        }
        let two = S::real(2.0);
        Self::from_fn(grid, |q| {
            let r = q - center;
            amplitude * (-(r * r) / (two * sigma * sigma)).exp()
        })
    }

    /// Step profile: `left` for `q < edge`, `right` otherwise.
    pub fn step_profile(grid: Grid1D<S>, edge: S, left: S, right: S) -> Result<Self> {
        Self::from_fn(grid, |q| if q < edge { left } else { right })
    }

    pub fn grid(&self) -> &Grid1D<S> {
        &self.grid
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Elementwise map onto the same grid.
    pub fn map(&self, f: impl Fn(S) -> S) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn scaled(&self, factor: S) -> Self {
        self.map(|v| factor * v)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_grid(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(Self { grid: self.grid, values })
    }

    pub fn check_same_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }

    /// Discretized integral norm: `sum_i z_i^2 * delta`.
    pub fn norm_sq(&self) -> S {
        let mut acc = S::zero();
        for &v in &self.values {
            acc += v * v;
        }
        acc * self.grid.delta()
    }

    /// Plain vector norm `sum_i z_i^2`, without the measure factor.
    pub fn vec_norm_sq(&self) -> S {
        let mut acc = S::zero();
        for &v in &self.values {
            acc += v * v;
        }
        acc
    }

    /// Bare squared-error distance `sum_i (z_i - y_i)^2` to a target on the
    /// same grid.
    pub fn loss_distance(&self, target: &Self) -> Result<S> {
        self.check_same_grid(target)?;
        let mut acc = S::zero();
        for (&a, &b) in self.values.iter().zip(&target.values) {
            let d = a - b;
            acc += d * d;
        }
        Ok(acc)
    }

    /// Normalizes to unit integral norm (`norm_sq == 1`).
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm_sq().sqrt();
        if !(n > S::zero()) {
            return Err(Error::InvalidParameter { what: "field norm", constraint: "positive to normalize" });
        }
        Ok(self.scaled(S::one() / n))
    }

    pub fn max_abs(&self) -> S {
        self.values.iter().fold(S::zero(), |m, v| m.max(v.abs()))
    }

    pub(crate) fn from_raw(grid: Grid1D<S>, values: Vec<S>) -> Self {
        debug_assert_eq!(values.len(), grid.n());
        Self { grid, values }
    }
}
