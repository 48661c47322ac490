//! Scripted parameter sweeps: viscosity strength at fixed end states, and a
//! family of shocks whose downstream state approaches vacuum.
//!
//! Both sweeps run the full pipeline per parameter value — jump conditions,
//! admissible branch, hypothesis check, spectral classification, shooting —
//! and assemble a summary table in input order. A value whose analysis fails
//! produces a rejected row with the reason; a value whose analysis succeeds
//! but whose shot does not converge produces a normal row flagged as not
//! converged. Neither aborts the rest of the sweep, and the assembled report
//! is deterministic.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::integrator::{shoot_heteroclinic, Profile, ShootOptions};
use crate::model::{f_prime, sound_speed, FluidParams};
use crate::phase_plane::{equilibrium_report, classify_monotonicity, Monotonicity};
use crate::rankine_hugoniot::{
    check_profile_hypotheses, select_admissible_branch, ProfileDirection, Sonicity,
};

/// Parameters shared by every row of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepBase {
    pub gamma: f64,
    pub k: f64,
    pub s: f64,
    pub rho_minus: f64,
}

/// What a sweep varies: the viscosity at fixed end states, or the downstream
/// density at fixed viscosity. The complementary parameter rides along
/// because [`SweepBase`] only carries the upstream density.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepVariable {
    /// Vary the viscosity coefficient; every row reuses `rho_plus`.
    Mu { values: Vec<f64>, rho_plus: f64 },
    /// Vary the downstream density; every row reuses `mu`.
    RhoPlus { values: Vec<f64>, mu: f64 },
}

/// A validated sweep request.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    base: SweepBase,
    varying: SweepVariable,
    solver_opts: ShootOptions,
}

impl SweepSpec {
    /// Validates the request: the base describes a well-formed fluid and
    /// upstream state, the varied list is non-empty, and every listed value
    /// (plus the fixed companion parameter) is positive and finite.
    pub fn new(base: SweepBase, varying: SweepVariable, solver_opts: ShootOptions) -> Result<Self> {
        for (name, value) in [
            ("gamma", base.gamma),
            ("k", base.k),
            ("rho_minus", base.rho_minus),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    constraint: "positive and finite",
                });
            }
        }
        if base.gamma < 1.0 {
            return Err(Error::InvalidParameter {
                name: "gamma",
                value: base.gamma,
                constraint: "at least 1",
            });
        }
        if !base.s.is_finite() || base.s == 0.0 {
            return Err(Error::ZeroSpeed);
        }
        let (values, fixed) = match &varying {
            SweepVariable::Mu { values, rho_plus } => (values, ("rho_plus", *rho_plus)),
            SweepVariable::RhoPlus { values, mu } => (values, ("mu", *mu)),
        };
        if values.is_empty() {
            return Err(Error::Precondition {
                what: "sweep value list is empty".to_string(),
            });
        }
        for &value in values {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidParameter {
                    name: "sweep value",
                    value,
                    constraint: "positive and finite",
                });
            }
        }
        if !fixed.1.is_finite() || fixed.1 <= 0.0 {
            return Err(Error::InvalidParameter {
                name: fixed.0,
                value: fixed.1,
                constraint: "positive and finite",
            });
        }
        Ok(SweepSpec {
            base,
            varying,
            solver_opts,
        })
    }

    pub fn base(&self) -> SweepBase {
        self.base
    }

    pub fn varying(&self) -> &SweepVariable {
        &self.varying
    }

    pub fn solver_opts(&self) -> ShootOptions {
        self.solver_opts
    }
}

/// Summary of one fully analyzed sweep value.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub mu: f64,
    pub rho_plus: f64,
    pub u_minus: f64,
    pub u_plus: f64,
    /// `sqrt(-f'(P))` at the attracting equilibrium; the profile is monotone
    /// when `|s| mu / k` is at least this large.
    pub sqrt_neg_fprime: f64,
    /// Sound speed of the attracting end state (the downstream state for
    /// right-moving waves).
    pub sound_speed_attracting: f64,
    /// Whether the attracting end state is subsonic relative to the wave.
    pub attracting_sonicity: Sonicity,
    pub classification: Monotonicity,
    /// Spectrum of the attracting equilibrium, computed in the frame where
    /// the wave moves right (reflection leaves the moduli unchanged).
    pub eigenvalues: (Complex64, Complex64),
    /// Interior extrema of the computed profile; absent when the shot failed.
    pub extrema_count: Option<usize>,
    pub converged: bool,
    /// Why the shot failed, when it did.
    pub shot_failure: Option<String>,
}

/// Per-value result: either a full row, or the reason the value could not be
/// analyzed at all (no admissible branch, wrong orientation, ...).
#[derive(Debug, Clone, PartialEq)]
pub enum SweepRowOutcome {
    Analyzed(SweepRow),
    Rejected {
        mu: f64,
        rho_plus: f64,
        reason: String,
    },
}

/// Table assembled by a sweep, one outcome per requested value in input
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    base: SweepBase,
    rows: Vec<SweepRowOutcome>,
}

impl SweepReport {
    pub fn base(&self) -> SweepBase {
        self.base
    }

    pub fn rows(&self) -> &[SweepRowOutcome] {
        &self.rows
    }
}

/// A sweep's report plus the profiles behind it, aligned with the rows
/// (`None` where the shot failed or the row was rejected).
#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub report: SweepReport,
    pub profiles: Vec<Option<Profile>>,
}

/// Runs the viscosity sweep: fixed end states, one row per viscosity value.
pub fn sweep_viscosity(spec: &SweepSpec) -> Result<SweepOutcome> {
    let SweepVariable::Mu { values, rho_plus } = spec.varying() else {
        return Err(Error::Precondition {
            what: "viscosity sweep needs a list of viscosity values".to_string(),
        });
    };
    Ok(run_sweep(
        spec,
        values.iter().map(|&mu| (mu, *rho_plus)).collect(),
    ))
}

/// Runs the vacuum-approach sweep: fixed viscosity, one row per downstream
/// density.
pub fn sweep_vacuum(spec: &SweepSpec) -> Result<SweepOutcome> {
    let SweepVariable::RhoPlus { values, mu } = spec.varying() else {
        return Err(Error::Precondition {
            what: "vacuum sweep needs a list of downstream densities".to_string(),
        });
    };
    Ok(run_sweep(
        spec,
        values.iter().map(|&rho_plus| (*mu, rho_plus)).collect(),
    ))
}

fn run_sweep(spec: &SweepSpec, cases: Vec<(f64, f64)>) -> SweepOutcome {
    let mut rows = Vec::with_capacity(cases.len());
    let mut profiles = Vec::with_capacity(cases.len());
    for (mu, rho_plus) in cases {
        match run_row(spec.base(), mu, rho_plus, &spec.solver_opts()) {
            Ok((row, profile)) => {
                rows.push(SweepRowOutcome::Analyzed(row));
                profiles.push(profile);
            }
            Err(err) => {
                rows.push(SweepRowOutcome::Rejected {
                    mu,
                    rho_plus,
                    reason: err.to_string(),
                });
                profiles.push(None);
            }
        }
    }
    SweepOutcome {
        report: SweepReport {
            base: spec.base(),
            rows,
        },
        profiles,
    }
}

/// Analysis pipeline for one value. Errors out of this function reject the
/// row; shooting failures are folded into the row instead.
fn run_row(
    base: SweepBase,
    mu: f64,
    rho_plus: f64,
    opts: &ShootOptions,
) -> Result<(SweepRow, Option<Profile>)> {
    let params = FluidParams::new(base.gamma, mu, base.k)?;
    let shock = select_admissible_branch(base.rho_minus, rho_plus, base.s, base.gamma)?;
    let hypotheses = check_profile_hypotheses(&shock)?;
    let classification = classify_monotonicity(&shock, &params)?;
    // The attracting equilibrium is the downstream square-root density of
    // the wave once it is oriented to move right.
    let work = if hypotheses.direction == ProfileDirection::LeftMoving {
        shock.mirrored()?
    } else {
        shock
    };
    let attracting_p = work.p_plus();
    let spectrum = equilibrium_report(attracting_p, &work.constants(), &params)?;
    let sqrt_neg_fprime = (-f_prime(attracting_p, &work.constants(), base.gamma)?).sqrt();
    let sound_speed_attracting = sound_speed(attracting_p * attracting_p, base.gamma)?;

    let (extrema_count, converged, shot_failure, profile) =
        match shoot_heteroclinic(&shock, &params, opts) {
            Ok(profile) => (
                Some(profile.extrema_count()),
                profile.converged(),
                None,
                Some(profile),
            ),
            Err(err) => (None, false, Some(err.to_string()), None),
        };
    let row = SweepRow {
        mu,
        rho_plus,
        u_minus: shock.left().u(),
        u_plus: shock.right().u(),
        sqrt_neg_fprime,
        sound_speed_attracting,
        attracting_sonicity: hypotheses.attracting_sonicity,
        classification,
        eigenvalues: spectrum.eigenvalues,
        extrema_count,
        converged,
        shot_failure,
    };
    Ok((row, profile))
}
