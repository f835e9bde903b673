//! The relaxation-form forward integrator.
//!
//! Each step pulls the state toward the local equilibrium `f(Wz - b)` at
//! strength `omega`:
//!
//! ```text
//! z' = (1 - omega) z + omega f(Wz - b)
//! ```
//!
//! optionally damped toward unit norm by a soft-constraint term. At
//! `omega = 1` a step is exactly one network layer, so an `L+1`-step run is a
//! full forward pass.

use crate::activation::Activation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::kernels::KernelOperator;
use crate::scalar::Scalar;

/// Step parameters: relaxation strength `omega` in `(0, 1]`, number of
/// steps, and the soft-normalization coupling (`0` disables it).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxConfig<S> {
    pub omega: S,
    pub steps: usize,
    pub norm_coupling: S,
}

impl<S: Scalar> RelaxConfig<S> {
    pub fn new(omega: S, steps: usize, norm_coupling: S) -> Result<Self> {
        validate_omega(omega)?;
        if steps == 0 {
            return Err(Error::InvalidParameter { what: "steps", constraint: "at least 1" });
        }
        if !(norm_coupling >= S::zero()) || !norm_coupling.is_finite() {
            return Err(Error::InvalidParameter {
                what: "norm_coupling",
                constraint: "finite and non-negative",
            });
        }
        Ok(Self { omega, steps, norm_coupling })
    }
}

fn validate_omega<S: Scalar>(omega: S) -> Result<()> {
    if !(omega > S::zero() && omega <= S::one()) {
        return Err(Error::InvalidParameter { what: "omega", constraint: "in (0, 1]" });
    }
    Ok(())
}

/// Full state history of a run: `states[0]` is the initial condition,
/// `states[t]` the field after `t` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<S> {
    states: Vec<Field<S>>,
}

impl<S: Scalar> Trajectory<S> {
    pub fn states(&self) -> &[Field<S>] {
        &self.states
    }

    pub fn state(&self, t: usize) -> &Field<S> {
        &self.states[t]
    }

    pub fn final_state(&self) -> &Field<S> {
        self.states.last().expect("trajectory holds at least the initial state")
    }

    pub fn steps(&self) -> usize {
        self.states.len() - 1
    }
}

/// Outcome of a fixed-point search: `converged` guarantees
/// `residual <= tol` in the max norm.
#[derive(Debug, Clone, PartialEq)]
pub struct AttractorResult<S> {
    pub z_star: Field<S>,
    pub residual: S,
    pub iterations: usize,
    pub converged: bool,
}

/// Either one kernel for every step or one kernel per step.
#[derive(Debug, Clone, Copy)]
pub enum KernelSchedule<'a, K> {
    Constant(&'a K),
    PerStep(&'a [K]),
}

impl<'a, K> KernelSchedule<'a, K> {
    fn at(&self, step: usize) -> &'a K {
        match self {
            Self::Constant(k) => k,
            Self::PerStep(ks) => &ks[step],
        }
    }
}

/// The weight transform `Z = Wz - b`.
pub fn weight_transform<S: Scalar, K: KernelOperator<S>>(
    kernel: &K,
    z: &Field<S>,
    bias: &Field<S>,
) -> Result<Field<S>> {
    z.check_same_grid(bias)?;
    if z.grid() != kernel.grid() {
        return Err(Error::GridMismatch);
    }
    let mut out = vec![S::zero(); z.len()];
    kernel.apply_into(z.values(), &mut out);
    for (o, &b) in out.iter_mut().zip(bias.values()) {
        *o = *o - b;
    }
    Ok(Field::from_raw(*z.grid(), out))
}

/// The local equilibrium `z_eq = f(Z)` toward which relaxation pulls.
pub fn local_equilibrium<S: Scalar>(f: Activation, transformed: &Field<S>) -> Field<S> {
    f.apply(transformed)
}

/// Residual `z - f(Wz - b)`; identically zero exactly at equilibria.
pub fn liouvillean_residual<S: Scalar, K: KernelOperator<S>>(
    z: &Field<S>,
    kernel: &K,
    bias: &Field<S>,
    f: Activation,
) -> Result<Field<S>> {
    let eq = local_equilibrium(f, &weight_transform(kernel, z, bias)?);
    let values = z
        .values()
        .iter()
        .zip(eq.values())
        .map(|(&a, &b)| a - b)
        .collect();
    Ok(Field::from_raw(*z.grid(), values))
}

fn step_from_equilibrium<S: Scalar>(
    z: &Field<S>,
    zeq: &Field<S>,
    omega: S,
    norm_coupling: S,
) -> Field<S> {
    let mut out: Vec<S> = if omega == S::one() {
        zeq.values().to_vec()
    } else {
        z.values()
            .iter()
            .zip(zeq.values())
            .map(|(&zi, &ei)| zi + omega * (ei - zi))
            .collect()
    };
    if norm_coupling != S::zero() {
        // radial restoring term: -alpha (||z|| - 1) applied along z
        let norm = z.norm_sq().sqrt();
        let gain = omega * norm_coupling * (S::one() - norm);
        for (o, &zi) in out.iter_mut().zip(z.values()) {
            *o += gain * zi;
        }
    }
    Field::from_raw(*z.grid(), out)
}

/// One relaxation step `z' = (1-omega) z + omega f(Wz - b)` plus the optional
/// soft-normalization term. Errors if the result is non-finite.
pub fn relaxation_step<S: Scalar, K: KernelOperator<S>>(
    z: &Field<S>,
    kernel: &K,
    bias: &Field<S>,
    f: Activation,
    omega: S,
    norm_coupling: S,
) -> Result<Field<S>> {
    validate_omega(omega)?;
    if !(norm_coupling >= S::zero()) {
        return Err(Error::InvalidParameter {
            what: "norm_coupling",
            constraint: "finite and non-negative",
        });
    }
    let zeq = local_equilibrium(f, &weight_transform(kernel, z, bias)?);
    let out = step_from_equilibrium(z, &zeq, omega, norm_coupling);
    if out.values().iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite { context: "relaxation step output" });
    }
    Ok(out)
}

/// Iterates [`relaxation_step`] `config.steps` times, recording every state.
/// A per-step kernel schedule must have exactly `config.steps` kernels.
/// Divergence is reported with the failing step index.
pub fn evolve<S: Scalar, K: KernelOperator<S>>(
    x: &Field<S>,
    kernels: KernelSchedule<'_, K>,
    bias: &Field<S>,
    f: Activation,
    config: &RelaxConfig<S>,
) -> Result<Trajectory<S>> {
    RelaxConfig::new(config.omega, config.steps, config.norm_coupling)?;
    if let KernelSchedule::PerStep(ks) = kernels {
        if ks.len() != config.steps {
            return Err(Error::LengthMismatch { expected: config.steps, got: ks.len() });
        }
    }
    let mut states = Vec::with_capacity(config.steps + 1);
    states.push(x.clone());
    for t in 0..config.steps {
        let next = relaxation_step(
            &states[t],
            kernels.at(t),
            bias,
            f,
            config.omega,
            config.norm_coupling,
        )
        .map_err(|e| match e {
            Error::NonFinite { .. } => Error::Diverged { step: t },
            other => other,
        })?;
        states.push(next);
    }
    Ok(Trajectory { states })
}

/// Iterates the relaxation map until the equilibrium residual
/// `||z - f(Wz - b)||_inf` drops to `tol`, or `max_iters` steps elapse.
/// Divergence (a non-finite iterate) is an error, distinct from plain
/// non-convergence, which returns `converged: false`.
pub fn find_attractor<S: Scalar, K: KernelOperator<S>>(
    x: &Field<S>,
    kernel: &K,
    bias: &Field<S>,
    f: Activation,
    omega: S,
    tol: S,
    max_iters: usize,
) -> Result<AttractorResult<S>> {
    validate_omega(omega)?;
    if !(tol > S::zero()) {
        return Err(Error::InvalidParameter { what: "tol", constraint: "positive" });
    }
    let mut z = x.clone();
    for iteration in 0..=max_iters {
        let zeq = local_equilibrium(f, &weight_transform(kernel, &z, bias)?);
        let residual = z
            .values()
            .iter()
            .zip(zeq.values())
            .fold(S::zero(), |m, (&a, &b)| m.max((a - b).abs()));
        if residual <= tol {
            return Ok(AttractorResult { z_star: z, residual, iterations: iteration, converged: true });
        }
        if iteration == max_iters {
            return Ok(AttractorResult { z_star: z, residual, iterations: iteration, converged: false });
        }
        let next = step_from_equilibrium(&z, &zeq, omega, S::zero());
        if next.values().iter().any(|v| !v.is_finite()) {
            return Err(Error::Diverged { step: iteration });
        }
        z = next;
    }
    unreachable!("loop returns before exhausting the range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Boundary, Grid1D};
    use crate::kernels::{DenseKernel, DenseMatrix, TridiagonalKernel};

    fn grid(n: usize) -> Grid1D<f64> {
        Grid1D::uniform(n, 1.0, 0.0, Boundary::Periodic).unwrap()
    }

    #[test]
    fn weight_transform_identity_and_bias() {
        let g = grid(2);
        let w = TridiagonalKernel::identity(g);
        let z = Field::new(g, vec![1.0, 1.0]).unwrap();
        let b0 = Field::zeros(g);
        assert_eq!(weight_transform(&w, &z, &b0).unwrap().values(), z.values());
        let b1 = Field::new(g, vec![1.0, 1.0]).unwrap();
        assert_eq!(weight_transform(&w, &z, &b1).unwrap().values(), &[0.0, 0.0]);
    }

    #[test]
    fn weight_transform_wraps_periodic_shift() {
        let g = grid(3);
        let w = TridiagonalKernel::new(vec![0.0; 3], vec![0.0; 3], vec![1.0; 3], g).unwrap();
        let z = Field::new(g, vec![1.0, 2.0, 3.0]).unwrap();
        let out = weight_transform(&w, &z, &Field::zeros(g)).unwrap();
        assert_eq!(out.values(), &[2.0, 3.0, 1.0]);
    }

    #[test]
    fn weight_transform_rejects_grid_mismatch() {
        let w = TridiagonalKernel::identity(grid(3));
        let z = Field::zeros(grid(4));
        let b = Field::zeros(grid(4));
        assert!(matches!(weight_transform(&w, &z, &b), Err(Error::GridMismatch)));
    }

    #[test]
    fn local_equilibrium_applies_the_activation() {
        let g = grid(2);
        let z = Field::new(g, vec![0.5, -2.0]).unwrap();
        assert_eq!(local_equilibrium(Activation::Square, &z).values(), &[0.25, 4.0]);
        let z = Field::new(g, vec![-3.0, 0.5]).unwrap();
        assert_eq!(local_equilibrium(Activation::ReLU, &z).values(), &[0.0, 0.5]);
    }

    #[test]
    fn liouvillean_zero_at_fixed_points() {
        let g = grid(2);
        let w = TridiagonalKernel::identity(g);
        let b = Field::zeros(g);
        // tanh(0) = 0
        let z0 = Field::zeros(g);
        assert_eq!(
            liouvillean_residual(&z0, &w, &b, Activation::Tanh).unwrap().values(),
            &[0.0, 0.0]
        );
        // identity activation: every z is an equilibrium
        let z = Field::new(g, vec![0.7, -1.3]).unwrap();
        assert_eq!(
            liouvillean_residual(&z, &w, &b, Activation::Identity).unwrap().values(),
            &[0.0, 0.0]
        );
        // z = 1 is the nontrivial fixed point of f(z) = z^2
        let z1 = Field::new(g, vec![1.0, 1.0]).unwrap();
        assert_eq!(
            liouvillean_residual(&z1, &w, &b, Activation::Square).unwrap().values(),
            &[0.0, 0.0]
        );
    }

    #[test]
    fn identity_case_is_invariant_for_any_omega() {
        let g = grid(2);
        let w = TridiagonalKernel::identity(g);
        let b = Field::zeros(g);
        let z = Field::new(g, vec![1.0, 2.0]).unwrap();
        for omega in [0.1, 0.3, 0.5, 0.77, 1.0] {
            let out = relaxation_step(&z, &w, &b, Activation::Identity, omega, 0.0).unwrap();
            assert_eq!(out.values(), z.values(), "omega={omega}");
        }
    }

    #[test]
    fn omega_one_step_equals_the_equilibrium() {
        let g = grid(2);
        let w = TridiagonalKernel::identity(g);
        let b = Field::zeros(g);
        let z = Field::new(g, vec![0.5, 0.5]).unwrap();
        let out = relaxation_step(&z, &w, &b, Activation::Square, 1.0, 0.0).unwrap();
        assert_eq!(out.values(), &[0.25, 0.25]);
    }

    #[test]
    fn rejects_bad_omega() {
        let g = grid(2);
        let w = TridiagonalKernel::identity(g);
        let b = Field::zeros(g);
        let z = Field::zeros(g);
        for omega in [0.0, -0.5, 1.5] {
            assert!(relaxation_step(&z, &w, &b, Activation::Tanh, omega, 0.0).is_err());
        }
    }

    #[test]
    fn evolve_records_every_state() {
        let g = grid(4);
        let w = TridiagonalKernel::adr(0.2, 0.1, 0.0, g);
        let x = Field::from_fn(g, |q| (q * 0.5).sin()).unwrap();
        let b = Field::zeros(g);
        let config = RelaxConfig::new(0.5, 7, 0.0).unwrap();
        let traj = evolve(&x, KernelSchedule::Constant(&w), &b, Activation::Tanh, &config).unwrap();
        assert_eq!(traj.states().len(), 8);
        assert_eq!(traj.state(0).values(), x.values());
    }

    #[test]
    fn evolve_per_step_schedule_checks_length() {
        let g = grid(4);
        let ks = vec![TridiagonalKernel::identity(g); 3];
        let x = Field::zeros(g);
        let b = Field::zeros(g);
        let config = RelaxConfig::new(1.0, 4, 0.0).unwrap();
        let r = evolve(&x, KernelSchedule::PerStep(&ks), &b, Activation::Tanh, &config);
        assert!(matches!(r, Err(Error::LengthMismatch { expected: 4, got: 3 })));
    }

    #[test]
    fn evolve_reports_divergence_step() {
        let g = grid(4);
        // strongly amplifying kernel with identity activation blows up
        let w = TridiagonalKernel::adr(0.0, 0.0, 1e150, g);
        let x = Field::constant(g, 1.0).unwrap();
        let b = Field::zeros(g);
        let config = RelaxConfig::new(1.0, 10, 0.0).unwrap();
        match evolve(&x, KernelSchedule::Constant(&w), &b, Activation::Square, &config) {
            Err(Error::Diverged { step }) => assert!(step <= 2, "step {step}"),
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn attractor_converges_in_zero_iterations_at_exact_fixed_point() {
        let g = grid(2);
        let w = TridiagonalKernel::identity(g);
        let b = Field::zeros(g);
        let x = Field::zeros(g);
        let r = find_attractor(&x, &w, &b, Activation::Tanh, 0.8, 1e-12, 100).unwrap();
        assert!(r.converged);
        assert_eq!(r.iterations, 0);
        assert_eq!(r.residual, 0.0);
        assert_eq!(r.z_star.values(), &[0.0, 0.0]);
    }

    #[test]
    fn attractor_linear_worked_instance() {
        // W = [[0, 0.5], [0.5, 0]], b = [-0.5, -0.5]: z* = [1, 1]
        let g = grid(2);
        let m = DenseMatrix::from_rows(vec![vec![0.0, 0.5], vec![0.5, 0.0]]).unwrap();
        let w = DenseKernel::new(m, g).unwrap();
        let b = Field::new(g, vec![-0.5, -0.5]).unwrap();
        let x = Field::zeros(g);
        let r = find_attractor(&x, &w, &b, Activation::Identity, 1.0, 1e-12, 1000).unwrap();
        assert!(r.converged);
        assert!((r.z_star.values()[0] - 1.0).abs() < 1e-10);
        assert!((r.z_star.values()[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn attractor_logistic_decays_to_zero() {
        let g = grid(4);
        let w = TridiagonalKernel::identity(g);
        let b = Field::zeros(g);
        let x = Field::constant(g, 0.5).unwrap();
        let r = find_attractor(&x, &w, &b, Activation::Square, 0.5, 1e-8, 10_000).unwrap();
        assert!(r.converged);
        assert!(r.z_star.max_abs() <= 1e-7);
    }

    #[test]
    fn attractor_reports_non_convergence() {
        let g = grid(2);
        let w = TridiagonalKernel::identity(g);
        let b = Field::new(g, vec![-2.0, -2.0]).unwrap();
        // slow tanh contraction, tiny budget: must not claim convergence
        let x = Field::zeros(g);
        let r = find_attractor(&x, &w, &b, Activation::Tanh, 0.1, 1e-14, 2).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 2);
        assert!(r.residual > 1e-14);
    }

    #[test]
    fn soft_normalization_restores_toward_unit_norm() {
        let g = Grid1D::uniform(64, 1.0 / 16.0, 0.0, Boundary::Periodic).unwrap();
        let w = TridiagonalKernel::identity(g);
        let b = Field::constant(g, 0.5 - 0.5f64.atanh()).unwrap();
        let mut z = Field::constant(g, 1.0).unwrap(); // ||z|| = 2
        let mut prev = (z.norm_sq().sqrt() - 1.0).abs();
        for _ in 0..20 {
            z = relaxation_step(&z, &w, &b, Activation::Tanh, 0.3, 1.0).unwrap();
            let dev = (z.norm_sq().sqrt() - 1.0).abs();
            assert!(dev < prev);
            prev = dev;
        }
    }
}
