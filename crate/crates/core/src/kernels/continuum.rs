//! Continuum (translation-invariant) kernel families and the domain-growth
//! scan that separates convergent moments from divergent ones.

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::kernels::dense::{DenseKernel, DenseMatrix};
use crate::scalar::Scalar;

/// Radial kernel `W(q, q') = W(r)` with `r = q' - q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContinuumKernel<S> {
    /// `W(r) = amplitude * exp(-r^2 / 2 sigma^2)`; every moment converges.
    Gaussian { amplitude: S, sigma: S },
    /// `W(r) = amplitude * |r|^-exponent` outside `|r| < cutoff`, clamped to
    /// the cutoff value inside; only finitely many moments converge.
    PowerLaw { amplitude: S, exponent: S, cutoff: S },
}

impl<S: Scalar> ContinuumKernel<S> {
    /// Gaussian with unit integral, `amplitude = 1 / (sigma sqrt(2 pi))`.
    pub fn unit_gaussian(sigma: S) -> Result<Self> {
        if !(sigma > S::zero()) {
            return Err(Error::InvalidParameter { what: "sigma", constraint: "positive" });
        }
        let two_pi = S::real(std::f64::consts::TAU);
        Ok(Self::Gaussian { amplitude: S::one() / (sigma * two_pi.sqrt()), sigma })
    }

    pub fn gaussian(amplitude: S, sigma: S) -> Result<Self> {
        if !(sigma > S::zero()) {
            return Err(Error::InvalidParameter { what: "sigma", constraint: "positive" });
        }
        Ok(Self::Gaussian { amplitude, sigma })
    }

    pub fn power_law(amplitude: S, exponent: S, cutoff: S) -> Result<Self> {
        if !(exponent > S::zero()) {
            return Err(Error::InvalidParameter { what: "exponent", constraint: "positive" });
        }
        if !(cutoff > S::zero()) {
            return Err(Error::InvalidParameter { what: "cutoff", constraint: "positive" });
        }
        Ok(Self::PowerLaw { amplitude, exponent, cutoff })
    }

    /// Kernel value at displacement `r`.
    pub fn eval(&self, r: S) -> S {
        match *self {
            Self::Gaussian { amplitude, sigma } => {
                amplitude * (-(r * r) / (S::real(2.0) * sigma * sigma)).exp()
            }
            Self::PowerLaw { amplitude, exponent, cutoff } => {
                let ar = r.abs();
                if ar >= cutoff {
                    amplitude * ar.powf(-exponent)
                } else {
                    amplitude * cutoff.powf(-exponent)
                }
            }
        }
    }

    /// Samples the kernel as a dense matrix, `W_ij = W(r_ij) * delta`, so the
    /// matrix-vector product is a Riemann sum of the continuum transform.
    /// Displacements follow the grid's boundary rule.
    pub fn sample(&self, grid: Grid1D<S>) -> DenseKernel<S> {
        let n = grid.n();
        let m = DenseMatrix::from_fn(n, |i, j| self.eval(grid.displacement(i, j)) * grid.delta());
        DenseKernel::new(m, grid).expect("continuum kernels sample to finite values")
    }
}

/// Magnitude of the order-`k` moment of `kernel` on symmetric domains
/// `[-s, s]`, one value per entry of `half_widths`, each discretized with the
/// same number of sample points (so the spacing-to-size ratio is fixed).
/// Growth with domain size diagnoses a divergent moment.
pub fn moment_convergence_scan<S: Scalar>(
    kernel: &ContinuumKernel<S>,
    order: usize,
    half_widths: &[S],
    samples_per_domain: usize,
) -> Result<Vec<S>> {
    if half_widths.is_empty() {
        return Err(Error::InvalidParameter { what: "half_widths", constraint: "non-empty" });
    }
    if half_widths.windows(2).any(|w| !(w[1] > w[0])) || !(half_widths[0] > S::zero()) {
        return Err(Error::InvalidParameter {
            what: "half_widths",
            constraint: "positive and strictly increasing",
        });
    }
    if samples_per_domain < 2 {
        return Err(Error::InvalidParameter {
            what: "samples_per_domain",
            constraint: "at least 2",
        });
    }
    let half = (samples_per_domain / 2) as isize;
    let mut out = Vec::with_capacity(half_widths.len());
    for &hw in half_widths {
        let spacing = S::real(2.0) * hw / S::from_usize(samples_per_domain).unwrap();
        let mut acc = S::zero();
        for idx in 0..samples_per_domain {
            let r = S::from_isize(idx as isize - half).unwrap() * spacing;
            let w = kernel.eval(r);
            if order == 0 {
                acc += w;
            } else {
                acc += r.powi(order as i32) * w;
            }
        }
        out.push((acc * spacing).abs());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Boundary;
    use crate::kernels::KernelOperator;

    #[test]
    fn unit_gaussian_rows_sum_to_one() {
        let g = Grid1D::uniform(128, 0.125, -8.0, Boundary::Periodic).unwrap();
        let k = ContinuumKernel::unit_gaussian(1.0).unwrap().sample(g);
        for i in 0..128 {
            let s: f64 = k.matrix().row(i).iter().sum();
            assert!((s - 1.0).abs() < 1e-6, "row {i} sums to {s}");
        }
    }

    #[test]
    fn gaussian_rows_peak_on_the_diagonal() {
        let g = Grid1D::uniform(64, 0.25, -8.0, Boundary::Periodic).unwrap();
        let k = ContinuumKernel::unit_gaussian(1.0).unwrap().sample(g);
        for i in 0..64 {
            let row = k.matrix().row(i);
            let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            assert_eq!(row[i], max);
        }
    }

    #[test]
    fn power_law_clamps_below_cutoff() {
        let k = ContinuumKernel::power_law(1.0, 2.0, 0.5).unwrap();
        assert_eq!(k.eval(0.0), 0.5f64.powf(-2.0));
        assert_eq!(k.eval(0.25), 0.5f64.powf(-2.0));
        assert_eq!(k.eval(2.0), 2.0f64.powf(-2.0));
        assert_eq!(k.eval(-2.0), k.eval(2.0));
    }

    #[test]
    fn scan_rejects_bad_domains() {
        let k = ContinuumKernel::unit_gaussian(1.0).unwrap();
        assert!(moment_convergence_scan(&k, 0, &[], 128).is_err());
        assert!(moment_convergence_scan(&k, 0, &[2.0, 1.0], 128).is_err());
    }

    #[test]
    fn scan_matches_sampled_row_moment_for_homogeneous_kernels() {
        // the scan is the displacement-space view of a dense row moment
        let n = 64;
        let hw = 8.0;
        let delta = 2.0 * hw / n as f64;
        let g = Grid1D::uniform(n, delta, -hw, Boundary::Periodic).unwrap();
        let kern = ContinuumKernel::unit_gaussian(1.0).unwrap();
        let dense = kern.sample(g);
        let profile = dense.moments(2);
        let scanned = moment_convergence_scan(&kern, 2, &[hw], n).unwrap();
        assert!((profile.order(2)[0].abs() - scanned[0]).abs() < 1e-12);
    }
}
