//! Sampled closed-loop data: the signal quadruple consumed by the
//! learning schemes.

use nalgebra::DVector;

use crate::error::{Error, Result};

/// One sample of the logged quadruple at time `t`.
///
/// The control entries record the input held on `[t, t + tau)`; the
/// hold of the final sample in a log is never consumed by a fit.
#[derive(Clone, Debug, PartialEq)]
pub struct SignalSample {
    pub t: f64,
    /// Plant output `y(t)`.
    pub y: DVector<f64>,
    /// Model output `y_M(t)`.
    pub y_m: DVector<f64>,
    /// Predictive component of the input.
    pub u_fmpc: DVector<f64>,
    /// Safety-layer component of the input.
    pub u_fc: DVector<f64>,
}

impl SignalSample {
    pub fn new(
        t: f64,
        y: DVector<f64>,
        y_m: DVector<f64>,
        u_fmpc: DVector<f64>,
        u_fc: DVector<f64>,
    ) -> Result<Self> {
        let all_finite = t.is_finite()
            && y.iter()
                .chain(y_m.iter())
                .chain(u_fmpc.iter())
                .chain(u_fc.iter())
                .all(|v| v.is_finite());
        if !all_finite {
            return Err(Error::Domain(format!(
                "signal sample at t = {t} contains non-finite entries"
            )));
        }
        Ok(SignalSample {
            t,
            y,
            y_m,
            u_fmpc,
            u_fc,
        })
    }

    /// Total input held from this sample on.
    pub fn u_total(&self) -> DVector<f64> {
        &self.u_fmpc + &self.u_fc
    }
}

/// Uniformly spaced, strictly increasing record of [`SignalSample`]s.
#[derive(Clone, Debug)]
pub struct DataLog {
    tau: f64,
    samples: Vec<SignalSample>,
}

/// Absolute tolerance on the spacing of consecutive samples.
const SPACING_TOL: f64 = 1e-12;

impl DataLog {
    pub fn new(tau: f64) -> Result<Self> {
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::Domain(format!(
                "sampling period must be positive, got {tau}"
            )));
        }
        Ok(DataLog {
            tau,
            samples: Vec::new(),
        })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[SignalSample] {
        &self.samples
    }

    pub fn last(&self) -> Option<&SignalSample> {
        self.samples.last()
    }

    /// Appends a sample, enforcing strict increase and uniform spacing.
    pub fn push(&mut self, sample: SignalSample) -> Result<()> {
        if let Some(prev) = self.samples.last() {
            let dt = sample.t - prev.t;
            if dt <= 0.0 {
                return Err(Error::Domain(format!(
                    "log timestamps must strictly increase: {} then {}",
                    prev.t, sample.t
                )));
            }
            if (dt - self.tau).abs() > SPACING_TOL {
                return Err(Error::Domain(format!(
                    "log spacing {dt} deviates from tau = {} by more than {SPACING_TOL}",
                    self.tau
                )));
            }
        }
        self.samples.push(sample);
        Ok(())
    }

    /// A copy of the log extended by a terminal output-only sample
    /// (zero input hold). Lets a fit use the freshest measurement
    /// before the input applied from it is known; no fit consumes the
    /// final sample's hold.
    pub fn with_terminal(&self, t: f64, y: DVector<f64>, y_m: DVector<f64>) -> Result<DataLog> {
        let m = y.len();
        let mut out = self.clone();
        out.push(SignalSample::new(
            t,
            y,
            y_m,
            DVector::zeros(m),
            DVector::zeros(m),
        )?)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dvector;

    fn sample(t: f64, y: f64) -> SignalSample {
        SignalSample::new(
            t,
            dvector![y],
            dvector![y],
            dvector![0.0],
            dvector![0.0],
        )
        .unwrap()
    }

    #[test]
    fn uniform_spacing_is_enforced() {
        let mut log = DataLog::new(0.1).unwrap();
        log.push(sample(0.0, 1.0)).unwrap();
        log.push(sample(0.1, 1.0)).unwrap();
        assert!(log.push(sample(0.25, 1.0)).is_err());
        assert!(log.push(sample(0.1, 1.0)).is_err());
        assert_eq!(log.len(), 2);
    }

    #[test]
    fn non_finite_samples_are_rejected() {
        assert!(SignalSample::new(
            0.0,
            dvector![f64::NAN],
            dvector![0.0],
            dvector![0.0],
            dvector![0.0]
        )
        .is_err());
    }

    #[test]
    fn terminal_extension_does_not_mutate_original() {
        let mut log = DataLog::new(0.1).unwrap();
        log.push(sample(0.0, 1.0)).unwrap();
        let ext = log
            .with_terminal(0.1, dvector![2.0], dvector![2.0])
            .unwrap();
        assert_eq!(ext.len(), 2);
        assert_eq!(log.len(), 1);
    }
}
