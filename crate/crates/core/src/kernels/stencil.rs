//! Tridiagonal kernels and their assembly from advection-diffusion-reaction
//! coefficients.
//!
//! On a grid with spacing `delta`, the coefficient triple `(U, D, R)` maps to
//! the stencil
//!
//! ```text
//! A = -U/(2 delta) + D/delta^2      (multiplies z_{i-1})
//! B = +U/(2 delta) + D/delta^2      (multiplies z_{i+1})
//! C = 1 - 2 D/delta^2 + R           (multiplies z_i)
//! ```
//!
//! so the kernel acts as `(1 + R) z + U z_q + D z_qq` up to grid resolution.

use crate::error::{Error, Result};
use crate::grid::{Boundary, Grid1D};
use crate::kernels::dense::{DenseKernel, DenseMatrix};
use crate::kernels::moments::MomentProfile;
use crate::kernels::KernelOperator;
use crate::scalar::Scalar;

/// Per-node three-point kernel: `(W z)_i = sub_i z_{i-1} + diag_i z_i + sup_i z_{i+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalKernel<S> {
    sub: Vec<S>,
    diag: Vec<S>,
    sup: Vec<S>,
    grid: Grid1D<S>,
}

/// The `(A, C, B)` triple generated by `(U, D, R)` at spacing `delta`.
pub(crate) fn adr_coefficients<S: Scalar>(u: S, d: S, r: S, delta: S) -> (S, S, S) {
    let adv = u / (S::real(2.0) * delta);
    let diff = d / (delta * delta);
    let a = diff - adv;
    let b = diff + adv;
    let c = (S::one() - S::real(2.0) * diff) + r;
    (a, c, b)
}

impl<S: Scalar> TridiagonalKernel<S> {
    pub fn new(sub: Vec<S>, diag: Vec<S>, sup: Vec<S>, grid: Grid1D<S>) -> Result<Self> {
        for arr in [&sub, &diag, &sup] {
            if arr.len() != grid.n() {
                return Err(Error::LengthMismatch { expected: grid.n(), got: arr.len() });
            }
            if arr.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite { context: "stencil coefficients" });
            }
        }
        Ok(Self { sub, diag, sup, grid })
    }

    /// The kernel that leaves every signal unchanged.
    pub fn identity(grid: Grid1D<S>) -> Self {
        let n = grid.n();
        Self {
            sub: vec![S::zero(); n],
            diag: vec![S::one(); n],
            sup: vec![S::zero(); n],
            grid,
        }
    }

    /// Constant-coefficient stencil for advection speed `u`, diffusivity `d`
    /// and reaction rate `r`. All real inputs are admitted; stability is the
    /// caller's concern.
    pub fn adr(u: S, d: S, r: S, grid: Grid1D<S>) -> Self {
        let (a, c, b) = adr_coefficients(u, d, r, grid.delta());
        let n = grid.n();
        Self { sub: vec![a; n], diag: vec![c; n], sup: vec![b; n], grid }
    }

    /// Per-node coefficients `u_i, d_i, r_i`; arrays must have length `n`.
    pub fn adr_heterogeneous(u: &[S], d: &[S], r: &[S], grid: Grid1D<S>) -> Result<Self> {
        let n = grid.n();
        for arr in [u, d, r] {
            if arr.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: arr.len() });
            }
        }
        let mut sub = Vec::with_capacity(n);
        let mut diag = Vec::with_capacity(n);
        let mut sup = Vec::with_capacity(n);
        for i in 0..n {
            let (a, c, b) = adr_coefficients(u[i], d[i], r[i], grid.delta());
            sub.push(a);
            diag.push(c);
            sup.push(b);
        }
        Self::new(sub, diag, sup, grid)
    }

    pub fn sub(&self) -> &[S] {
        &self.sub
    }

    pub fn diag(&self) -> &[S] {
        &self.diag
    }

    pub fn sup(&self) -> &[S] {
        &self.sup
    }

    /// Neighbour values `(z_{i-1}, z_{i+1})` under the grid's boundary rule.
    #[inline]
    pub(crate) fn neighbours(&self, z: &[S], i: usize) -> (S, S) {
        let n = z.len();
        match self.grid.boundary() {
            Boundary::Periodic => (z[(i + n - 1) % n], z[(i + 1) % n]),
            Boundary::ZeroPad => (
                if i > 0 { z[i - 1] } else { S::zero() },
                if i + 1 < n { z[i + 1] } else { S::zero() },
            ),
        }
    }

    /// Transpose application `out_j = A_{j+1} v_{j+1} + C_j v_j + B_{j-1} v_{j-1}`.
    pub fn apply_transpose_into(&self, v: &[S], out: &mut [S]) {
        let n = self.grid.n();
        debug_assert_eq!(v.len(), n);
        debug_assert_eq!(out.len(), n);
        match self.grid.boundary() {
            Boundary::Periodic => {
                for j in 0..n {
                    let jp = (j + 1) % n;
                    let jm = (j + n - 1) % n;
                    out[j] = self.sub[jp] * v[jp] + self.diag[j] * v[j] + self.sup[jm] * v[jm];
                }
            }
            Boundary::ZeroPad => {
                for j in 0..n {
                    let mut acc = self.diag[j] * v[j];
                    if j + 1 < n {
                        acc += self.sub[j + 1] * v[j + 1];
                    }
                    if j > 0 {
                        acc += self.sup[j - 1] * v[j - 1];
                    }
                    out[j] = acc;
                }
            }
        }
    }

    /// Expands into an explicit dense matrix. Under periodic wrap the
    /// off-diagonal entries accumulate, which matters only for `n = 2`.
    pub fn to_dense(&self) -> DenseKernel<S> {
        let n = self.grid.n();
        let mut m = DenseMatrix::zeros(n);
        for i in 0..n {
            match self.grid.boundary() {
                Boundary::Periodic => {
                    *m.get_mut(i, (i + n - 1) % n) += self.sub[i];
                    *m.get_mut(i, i) += self.diag[i];
                    *m.get_mut(i, (i + 1) % n) += self.sup[i];
                }
                Boundary::ZeroPad => {
                    if i > 0 {
                        *m.get_mut(i, i - 1) += self.sub[i];
                    }
                    *m.get_mut(i, i) += self.diag[i];
                    if i + 1 < n {
                        *m.get_mut(i, i + 1) += self.sup[i];
                    }
                }
            }
        }
        DenseKernel::new(m, self.grid).expect("finite stencil expands to finite matrix")
    }
}

impl<S: Scalar> KernelOperator<S> for TridiagonalKernel<S> {
    fn grid(&self) -> &Grid1D<S> {
        &self.grid
    }

    fn apply_into(&self, z: &[S], out: &mut [S]) {
        let n = self.grid.n();
        debug_assert_eq!(z.len(), n);
        for i in 0..n {
            let (zm, zp) = self.neighbours(z, i);
            out[i] = self.sub[i] * zm + self.diag[i] * z[i] + self.sup[i] * zp;
        }
    }

    fn moments(&self, max_order: usize) -> MomentProfile<S> {
        // Closed form: support sits at displacements {-delta, 0, +delta}, so
        // W_0 = A + C + B, and for k >= 1, W_k = delta^k (B + (-1)^k A).
        let n = self.grid.n();
        let delta = self.grid.delta();
        let mut orders = Vec::with_capacity(max_order + 1);
        for k in 0..=max_order {
            let mut row = Vec::with_capacity(n);
            for i in 0..n {
                // under ZeroPad the boundary rows lose their out-of-range leg
                let (has_m, has_p) = match self.grid.boundary() {
                    Boundary::Periodic => (true, true),
                    Boundary::ZeroPad => (i > 0, i + 1 < n),
                };
                let a = if has_m { self.sub[i] } else { S::zero() };
                let b = if has_p { self.sup[i] } else { S::zero() };
                let v = if k == 0 {
                    a + self.diag[i] + b
                } else if k % 2 == 1 {
                    delta.powi(k as i32) * (b - a)
                } else {
                    delta.powi(k as i32) * (a + b)
                };
                row.push(v);
            }
            orders.push(row);
        }
        MomentProfile::from_orders(*self.grid(), orders)
    }
}
