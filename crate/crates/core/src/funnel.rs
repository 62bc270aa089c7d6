//! Performance funnel: the time-varying tube the tracking error must
//! stay inside.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::reference::ReferenceSignal;

/// Exponentially shrinking funnel radius
/// `psi(t) = amplitude * exp(-decay * t) + floor`.
///
/// The radius is bounded away from zero (`floor > 0`), so the error is
/// confined but never forced to converge to zero. Both benchmarks use
/// this family, which makes the bounds `sup |psi| = amplitude + floor`
/// and `sup |psi'| = amplitude * decay` exact rather than sampled.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FunnelSpec {
    amplitude: f64,
    decay: f64,
    floor: f64,
}

impl FunnelSpec {
    /// Builds a funnel, rejecting parameters that would let the radius
    /// reach zero or become unbounded.
    pub fn new(amplitude: f64, decay: f64, floor: f64) -> Result<Self> {
        if !(amplitude > 0.0 && amplitude.is_finite()) {
            return Err(Error::Domain(format!(
                "funnel amplitude must be positive and finite, got {amplitude}"
            )));
        }
        if !(decay >= 0.0 && decay.is_finite()) {
            return Err(Error::Domain(format!(
                "funnel decay must be nonnegative and finite, got {decay}"
            )));
        }
        if !(floor > 0.0 && floor.is_finite()) {
            return Err(Error::Domain(format!(
                "funnel floor must be positive and finite, got {floor}"
            )));
        }
        Ok(FunnelSpec {
            amplitude,
            decay,
            floor,
        })
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn decay(&self) -> f64 {
        self.decay
    }

    /// The infimum of the radius over all times.
    pub fn floor(&self) -> f64 {
        self.floor
    }

    /// Radius at time `t >= 0`.
    pub fn value(&self, t: f64) -> Result<f64> {
        if t < 0.0 {
            return Err(Error::Domain(format!(
                "funnel radius queried at negative time t = {t}"
            )));
        }
        Ok(self.value_at(t))
    }

    /// Radius at time `t`, without the domain check. Callers must
    /// guarantee `t >= 0`.
    #[inline]
    pub fn value_at(&self, t: f64) -> f64 {
        self.amplitude * (-self.decay * t).exp() + self.floor
    }

    /// `sup_t psi(t)`, attained at `t = 0`.
    pub fn sup_norm(&self) -> f64 {
        self.amplitude + self.floor
    }

    /// `sup_t |psi'(t)| = amplitude * decay`, attained at `t = 0`.
    pub fn derivative_bound(&self) -> f64 {
        self.amplitude * self.decay
    }

    /// Whether `y` lies strictly inside the funnel around the
    /// reference at time `t` (Euclidean norm, strict inequality).
    pub fn in_funnel(&self, reference: &ReferenceSignal, t: f64, y: &DVector<f64>) -> bool {
        let e = y - reference.eval(t);
        e.norm() < self.value_at(t)
    }
}
