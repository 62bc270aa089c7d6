//! Crate-wide error type.

/// All fallible operations in this crate return [`Error`].
///
/// The variants map onto the process exit codes used by the CLI:
/// configuration problems exit with 1, funnel violations with 2 and
/// feasibility loss with 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A configuration value is missing or invalid. `path` is the
    /// dotted key path inside the configuration file (e.g. `funnel.a`).
    #[error("config error at `{path}`: {msg}")]
    Config { path: String, msg: String },

    /// An argument left the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The state became non-finite during numerical integration.
    #[error("integration blew up at t = {t}")]
    BlowUp { t: f64 },

    /// A signal left its funnel. This aborts a run: under correct
    /// operation the safety layer makes it unreachable, so hitting it
    /// indicates a configuration or implementation bug.
    #[error("funnel violation at t = {t}: {msg}")]
    FunnelViolation { t: f64, msg: String },

    /// The receding-horizon problem had no admissible solution.
    #[error("feasibility lost at t = {t}: {msg}")]
    FeasibilityLost { t: f64, msg: String },

    /// An internal postcondition failed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    /// A replayed run did not reproduce the recorded trajectories.
    #[error("replay mismatch: {0}")]
    Replay(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
