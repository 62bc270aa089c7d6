//! Reference signals to be tracked.

use std::fmt;
use std::sync::Arc;

use nalgebra::DVector;

use crate::error::{Error, Result};

type EvalFn = dyn Fn(f64) -> DVector<f64> + Send + Sync;

/// A reference trajectory `t -> y_ref(t)` together with declared
/// bounds on its value and derivative.
///
/// Bounded weak differentiability cannot be inferred from samples, so
/// references are closed-form evaluators with user-declared bounds;
/// [`ReferenceSignal::validate_bounds`] cross-checks the declaration on
/// a grid at configuration load.
#[derive(Clone)]
pub struct ReferenceSignal {
    dim: usize,
    sup: f64,
    deriv_sup: f64,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for ReferenceSignal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReferenceSignal")
            .field("dim", &self.dim)
            .field("sup", &self.sup)
            .field("deriv_sup", &self.deriv_sup)
            .finish()
    }
}

impl ReferenceSignal {
    /// Constant reference `y_ref(t) == value`.
    pub fn constant(value: DVector<f64>) -> Self {
        let sup = value.norm();
        let dim = value.len();
        ReferenceSignal {
            dim,
            sup,
            deriv_sup: 0.0,
            eval: Arc::new(move |_t| value.clone()),
        }
    }

    /// Scalar cosine reference `y_ref(t) = amplitude * cos(omega * t)`.
    pub fn cosine(amplitude: f64, omega: f64) -> Self {
        ReferenceSignal {
            dim: 1,
            sup: amplitude.abs(),
            deriv_sup: (amplitude * omega).abs(),
            eval: Arc::new(move |t| DVector::from_element(1, amplitude * (omega * t).cos())),
        }
    }

    /// Arbitrary evaluator with caller-declared bounds.
    pub fn custom<F>(dim: usize, sup: f64, deriv_sup: f64, f: F) -> Self
    where
        F: Fn(f64) -> DVector<f64> + Send + Sync + 'static,
    {
        ReferenceSignal {
            dim,
            sup,
            deriv_sup,
            eval: Arc::new(f),
        }
    }

    pub fn eval(&self, t: f64) -> DVector<f64> {
        (self.eval)(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Declared bound on `||y_ref||_inf`.
    pub fn sup_norm(&self) -> f64 {
        self.sup
    }

    /// Declared bound on `||d/dt y_ref||_inf`.
    pub fn deriv_sup_norm(&self) -> f64 {
        self.deriv_sup
    }

    /// Checks that the declared bounds dominate sampled values (and
    /// finite-difference slopes) on a grid over `[0, horizon]`.
    pub fn validate_bounds(&self, horizon: f64, samples: usize) -> Result<()> {
        let n = samples.max(2);
        let dt = horizon / (n - 1) as f64;
        let fd = 1e-6 * dt.max(1e-6);
        // Finite differences only approximate the slope, so allow a
        // small relative margin over the declared bound.
        let tol = 1e-6;
        for i in 0..n {
            let t = i as f64 * dt;
            let v = self.eval(t);
            if v.len() != self.dim {
                return Err(Error::Domain(format!(
                    "reference evaluator returned dimension {} at t = {t}, declared {}",
                    v.len(),
                    self.dim
                )));
            }
            if v.norm() > self.sup * (1.0 + tol) + tol {
                return Err(Error::Domain(format!(
                    "reference value {} at t = {t} exceeds the declared bound {}",
                    v.norm(),
                    self.sup
                )));
            }
            let slope = (self.eval(t + fd) - &v) / fd;
            if slope.norm() > self.deriv_sup * (1.0 + tol) + tol {
                return Err(Error::Domain(format!(
                    "reference slope {} at t = {t} exceeds the declared bound {}",
                    slope.norm(),
                    self.deriv_sup
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dvector;

    #[test]
    fn constant_reference_bounds() {
        let r = ReferenceSignal::constant(dvector![3.0, 4.0]);
        assert_eq!(r.sup_norm(), 5.0);
        assert_eq!(r.deriv_sup_norm(), 0.0);
        assert_eq!(r.eval(17.0), dvector![3.0, 4.0]);
        r.validate_bounds(10.0, 100).unwrap();
    }

    #[test]
    fn cosine_reference_bounds() {
        let r = ReferenceSignal::cosine(1.0, 1.0);
        assert_eq!(r.sup_norm(), 1.0);
        assert_eq!(r.deriv_sup_norm(), 1.0);
        r.validate_bounds(10.0, 1000).unwrap();
    }

    #[test]
    fn understated_bound_is_caught() {
        let r = ReferenceSignal::custom(1, 0.5, 1.0, |t| dvector![t.cos()]);
        assert!(r.validate_bounds(10.0, 1000).is_err());
    }
}
