//! Pointwise activation functions and their derivatives.

use crate::field::Field;
use crate::scalar::Scalar;

/// The five supported pointwise nonlinearities. All are total on finite
/// reals; `Square` is `f(z) = z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Activation {
    Identity,
    #[default]
    Tanh,
    ReLU,
    Sigmoid,
    Square,
}

impl Activation {
    /// Applies the activation to a single value.
    pub fn eval<S: Scalar>(self, z: S) -> S {
        match self {
            Activation::Identity => z,
            Activation::Tanh => z.tanh(),
            Activation::ReLU => {
                if z > S::zero() {
                    z
                } else {
                    S::zero()
                }
            }
            Activation::Sigmoid => S::one() / (S::one() + (-z).exp()),
            Activation::Square => z * z,
        }
    }

    /// Derivative at `z`. ReLU uses the subgradient 0 at the kink.
    pub fn derivative<S: Scalar>(self, z: S) -> S {
        match self {
            Activation::Identity => S::one(),
            Activation::Tanh => {
                let t = z.tanh();
                S::one() - t * t
            }
            Activation::ReLU => {
                if z > S::zero() {
                    S::one()
                } else {
                    S::zero()
                }
            }
            Activation::Sigmoid => {
                let s = S::one() / (S::one() + (-z).exp());
                s * (S::one() - s)
            }
            Activation::Square => S::real(2.0) * z,
        }
    }

    /// Elementwise application to a field; output lives on the same grid.
    pub fn apply<S: Scalar>(self, z: &Field<S>) -> Field<S> {
        z.map(|v| self.eval(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Boundary, Grid1D};

    fn field(values: Vec<f64>) -> Field<f64> {
        let g = Grid1D::uniform(values.len(), 1.0, 0.0, Boundary::Periodic).unwrap();
        Field::new(g, values).unwrap()
    }

    #[test]
    fn relu_suppresses_negative_signals() {
        let z = field(vec![-1.0, 0.0, 2.0]);
        assert_eq!(Activation::ReLU.apply(&z).values(), &[0.0, 0.0, 2.0]);
    }

    #[test]
    fn identity_is_exact() {
        let z = field(vec![0.3, -0.7]);
        assert_eq!(Activation::Identity.apply(&z).values(), z.values());
    }

    #[test]
    fn tanh_fixes_zero() {
        let z = field(vec![0.0, 0.0]);
        assert_eq!(Activation::Tanh.apply(&z).values(), &[0.0, 0.0]);
    }

    #[test]
    fn square_and_sigmoid_values() {
        assert_eq!(Activation::Square.eval(0.5), 0.25);
        assert_eq!(Activation::Square.eval(-2.0), 4.0);
        assert!((Activation::Sigmoid.eval(0.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn derivatives_match_central_differences() {
        let h = 1e-6;
        for f in [
            Activation::Identity,
            Activation::Tanh,
            Activation::Sigmoid,
            Activation::Square,
        ] {
            for z in [-1.3, -0.2, 0.4, 1.7] {
                let fd = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
                assert!(
                    (f.derivative(z) - fd).abs() < 1e-8,
                    "{f:?} at {z}: {} vs {fd}",
                    f.derivative(z)
                );
            }
        }
        // ReLU away from the kink
        assert_eq!(Activation::ReLU.derivative(1.0), 1.0);
        assert_eq!(Activation::ReLU.derivative(-1.0), 0.0);
        assert_eq!(Activation::ReLU.derivative(0.0), 0.0);
    }
}
