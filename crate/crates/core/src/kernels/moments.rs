//! Displacement moments of a kernel and their physical reading.
//!
//! Order 0 is amplitude rescaling, order 1 propagation speed, order 2 twice
//! the diffusivity; order 3 acts as dispersion and order 4 as hyper-diffusion
//! when it carries the smoothing sign (positive at order 2, negative at
//! order 4, alternating above).

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::scalar::Scalar;

/// Per-node displacement moments `moments[k][i] ~ W_k(q_i)`, orders `0..=K`,
/// in physical displacement units.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentProfile<S> {
    grid: Grid1D<S>,
    orders: Vec<Vec<S>>,
}

impl<S: Scalar> MomentProfile<S> {
    pub(crate) fn from_orders(grid: Grid1D<S>, orders: Vec<Vec<S>>) -> Self {
        debug_assert!(!orders.is_empty());
        debug_assert!(orders.iter().all(|row| row.len() == grid.n()));
        Self { grid, orders }
    }

    pub fn grid(&self) -> &Grid1D<S> {
        &self.grid
    }

    pub fn max_order(&self) -> usize {
        self.orders.len() - 1
    }

    /// Values of `W_k` at every node.
    pub fn order(&self, k: usize) -> &[S] {
        &self.orders[k]
    }

    pub fn orders(&self) -> &[Vec<S>] {
        &self.orders
    }
}

/// Role a moment order plays in the generated dynamics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentClass {
    AmplitudeRescaling,
    Propagation,
    Diffusion,
    Dispersion,
    HyperDiffusion,
}

impl MomentClass {
    pub fn for_order(k: usize) -> Self {
        match k {
            0 => Self::AmplitudeRescaling,
            1 => Self::Propagation,
            2 => Self::Diffusion,
            k if k % 2 == 1 => Self::Dispersion,
            _ => Self::HyperDiffusion,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::AmplitudeRescaling => "amplitude-rescaling",
            Self::Propagation => "propagation",
            Self::Diffusion => "diffusion",
            Self::Dispersion => "dispersion",
            Self::HyperDiffusion => "hyper-diffusion",
        }
    }
}

/// Classification of one moment order, with the nodes (if any) where an even
/// order carries the wrong sign and sharpens instead of smoothing.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentNote {
    pub order: usize,
    pub classification: MomentClass,
    pub anti_diffusive_nodes: Vec<usize>,
}

/// Physical reading of the first three moments plus classification notes for
/// the rest: `R_hat = W_0 - 1`, `U_hat = W_1`, `D_hat = W_2 / 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExplainReport<S> {
    pub r_hat: Vec<S>,
    pub u_hat: Vec<S>,
    pub d_hat: Vec<S>,
    pub higher_moment_notes: Vec<MomentNote>,
}

/// Inverts the stencil convention behind [`MomentProfile`]: the operator is
/// `(1 + R) z + U z_q + D z_qq + ...`, so `R`, `U`, `D` are recovered from
/// the first three moments. Requires `max_order >= 2`.
pub fn explain_kernel<S: Scalar>(profile: &MomentProfile<S>) -> Result<ExplainReport<S>> {
    if profile.max_order() < 2 {
        return Err(Error::MomentOrderTooLow(profile.max_order()));
    }
    let r_hat = profile.order(0).iter().map(|&w| w - S::one()).collect();
    let u_hat = profile.order(1).to_vec();
    let d_hat = profile
        .order(2)
        .iter()
        .map(|&w| w / S::real(2.0))
        .collect();

    let mut higher_moment_notes = Vec::with_capacity(profile.max_order() + 1);
    for k in 0..=profile.max_order() {
        let mut anti = Vec::new();
        if k >= 2 && k % 2 == 0 {
            // smoothing sign alternates: +W_2, -W_4, +W_6, ...
            let positive_smooths = (k / 2) % 2 == 1;
            for (i, &w) in profile.order(k).iter().enumerate() {
                let wrong = if positive_smooths { w < S::zero() } else { w > S::zero() };
                if wrong {
                    anti.push(i);
                }
            }
        }
        higher_moment_notes.push(MomentNote {
            order: k,
            classification: MomentClass::for_order(k),
            anti_diffusive_nodes: anti,
        });
    }

    Ok(ExplainReport { r_hat, u_hat, d_hat, higher_moment_notes })
}
