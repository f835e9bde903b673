//! Dense weight matrices.

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::kernels::moments::MomentProfile;
use crate::kernels::KernelOperator;
use crate::scalar::Scalar;

/// Square row-major matrix; entry `(i, j)` weights the contribution of node
/// `j` to node `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![S::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { n, data })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

/// A dense matrix bound to the grid it acts on.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseKernel<S> {
    matrix: DenseMatrix<S>,
    grid: Grid1D<S>,
}

impl<S: Scalar> DenseKernel<S> {
    pub fn new(matrix: DenseMatrix<S>, grid: Grid1D<S>) -> Result<Self> {
        if matrix.n() != grid.n() {
            return Err(Error::LengthMismatch { expected: grid.n(), got: matrix.n() });
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite { context: "dense kernel entries" });
        }
        Ok(Self { matrix, grid })
    }

    pub fn matrix(&self) -> &DenseMatrix<S> {
        &self.matrix
    }
}

impl<S: Scalar> KernelOperator<S> for DenseKernel<S> {
    fn grid(&self) -> &Grid1D<S> {
        &self.grid
    }

    fn apply_into(&self, z: &[S], out: &mut [S]) {
        let n = self.matrix.n();
        debug_assert_eq!(z.len(), n);
        for i in 0..n {
            let row = self.matrix.row(i);
            let mut acc = S::zero();
            for j in 0..n {
                acc += row[j] * z[j];
            }
            out[i] = acc;
        }
    }

    fn moments(&self, max_order: usize) -> MomentProfile<S> {
        let n = self.grid.n();
        let mut orders = Vec::with_capacity(max_order + 1);
        for k in 0..=max_order {
            let mut row_vals = Vec::with_capacity(n);
            for i in 0..n {
                let row = self.matrix.row(i);
                let mut acc = S::zero();
                for j in 0..n {
                    let w = row[j];
                    if k == 0 {
                        acc += w;
                    } else {
                        acc += self.grid.displacement(i, j).powi(k as i32) * w;
                    }
                }
                row_vals.push(acc);
            }
            orders.push(row_vals);
        }
        MomentProfile::from_orders(self.grid, orders)
    }
}
