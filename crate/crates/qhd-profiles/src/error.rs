//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A thermodynamic or profile function was evaluated outside its domain.
    #[error("domain error: {what} must be positive, got {value}")]
    Domain { what: &'static str, value: f64 },

    /// A constructor argument violated a type invariant.
    #[error("invalid parameter: {name} = {value} violates {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// Equal densities make the jump relations degenerate.
    #[error("degenerate shock: rho_minus = rho_plus = {rho}")]
    DegenerateShock { rho: f64 },

    /// s = 0 has no admissible profile (the friction term vanishes).
    #[error("no admissible profile for s = 0")]
    ZeroSpeed,

    /// End states do not satisfy the jump conditions.
    #[error("Rankine-Hugoniot residuals too large: |r1| = {res1:e}, |r2| = {res2:e}")]
    RankineHugoniot { res1: f64, res2: f64 },

    /// The discontinuity satisfies neither Lax inequality chain.
    #[error("end states do not define an admissible Lax shock")]
    NotAdmissible,

    /// The speed sign and density ordering match neither supported wave
    /// orientation, so no connecting profile is guaranteed to exist.
    #[error("no profile guarantee: {details}")]
    NoProfileGuarantee { details: String },

    /// Profile constants do not come from a genuine shock.
    #[error("invalid profile constants: {reason}")]
    InvalidConstants { reason: String },

    /// An operation's precondition failed.
    #[error("precondition violated: {what}")]
    Precondition { what: String },

    /// A root bracket could not be established.
    #[error("bracket failure while locating {what}")]
    BracketFailure { what: &'static str },

    /// Scanning toward zero exhausted the floating-point range.
    #[error("numerical underflow while locating {what}")]
    NumericalUnderflow { what: &'static str },

    /// Constants produced a negative radicand beyond rounding tolerance.
    #[error("inconsistent constants: negative radicand {radicand:e} at P = {p}")]
    InconsistentConstants { p: f64, radicand: f64 },

    /// The trajectory reached the vacuum guard P < 1e-10.
    #[error("vacuum crossed at y = {y}: P = {p:e}")]
    VacuumCrossed { y: f64, p: f64 },

    /// The adaptive step size fell below 1e-14.
    #[error("step size underflow at y = {y}: h = {h:e} (stiffness)")]
    StepSizeUnderflow { y: f64, h: f64 },

    /// Safety cap on accepted + rejected steps.
    #[error("step limit exceeded at y = {y}")]
    StepLimit { y: f64 },

    /// Shooting did not reach the attracting equilibrium before y_max.
    #[error("no convergence by y = {y}: terminal error {terminal_error:e}")]
    NonConvergence { terminal_error: f64, y: f64 },

    /// The orbit left the homoclinic region: integration inaccuracy.
    #[error("containment violation at y = {y}: H = {energy:e}")]
    ContainmentViolation { y: f64, energy: f64 },

    /// Plot data contained NaN or infinities.
    #[error("non-finite value in {what}")]
    NonFinite { what: String },

    /// Command line / config file problem (maps to exit status 2).
    #[error("{message}")]
    Usage { message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn usage(message: impl Into<String>) -> Self {
        Error::Usage {
            message: message.into(),
        }
    }

    /// True for errors that should map to exit status 2 rather than 1.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Usage { .. })
    }
}
