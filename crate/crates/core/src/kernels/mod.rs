//! Weight kernels as generators of advection-diffusion-reaction dynamics:
//! tridiagonal stencils, dense matrices, continuum kernel families, and the
//! displacement-moment analysis that reads physics back out of them.

mod capacity;
mod continuum;
mod dense;
mod moments;
mod stencil;

pub use capacity::{capacity_report, CapacityReport};
pub use continuum::{moment_convergence_scan, ContinuumKernel};
pub use dense::{DenseKernel, DenseMatrix};
pub use moments::{ExplainReport, MomentClass, MomentNote, MomentProfile};
pub use stencil::TridiagonalKernel;

use crate::error::Result;
use crate::field::Field;
use crate::grid::Grid1D;
use crate::scalar::Scalar;

/// A linear operator on grid signals that can also report its displacement
/// moments.
pub trait KernelOperator<S: Scalar> {
    fn grid(&self) -> &Grid1D<S>;

    /// `out = W z` on raw slices; lengths must equal the grid size.
    fn apply_into(&self, z: &[S], out: &mut [S]);

    /// Displacement moments `W_k(q_i) = sum_j r_ij^k W_ij` up to `max_order`,
    /// with `r_ij` in physical units of the grid.
    fn moments(&self, max_order: usize) -> MomentProfile<S>;

    /// `W z` as a field, validating the grid.
    fn apply(&self, z: &Field<S>) -> Result<Field<S>> {
        if z.grid() != self.grid() {
            return Err(crate::error::Error::GridMismatch);
        }
        let mut out = vec![S::zero(); z.len()];
        self.apply_into(z.values(), &mut out);
        Ok(Field::from_raw(*z.grid(), out))
    }
}
