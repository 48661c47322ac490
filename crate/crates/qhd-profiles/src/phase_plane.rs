//! Equilibrium and geometric analysis of the planar profile system
//!
//! ```text
//! P' = Q
//! Q' = f(P)/k^2 - (2 s mu / k^2) Q
//! ```
//!
//! The equilibria are the positive roots of `f`. Because `f'' > 0` whenever
//! `A != 0`, `f` has at most two of them: the smaller is attracting (node or
//! focus), the larger is a saddle. The frictionless (`mu = 0`) system is
//! conservative with energy `H`, and its level set `H = 0` through the saddle
//! is a closed loop that confines the connecting orbit. This module locates
//! the roots, the inflection point `P0` of the potential between them, the
//! inner loop endpoint `P*`, classifies equilibria by their Jacobian spectrum,
//! and samples the loop.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{
    f_eval, f_prime, f_second, potential_f, FluidParams, ProfileConstants,
};
use crate::rankine_hugoniot::{check_profile_hypotheses, ProfileDirection, ShockData};
use crate::roots::newton_bracketed;

/// Absolute tolerance on the independent variable for all root finding here.
const ROOT_X_TOL: f64 = 1e-12;

/// How far `|f(P_eq)|` may sit from zero before an equilibrium report is
/// refused as not actually an equilibrium.
const EQUILIBRIUM_F_TOL: f64 = 1e-6;

/// Loop radicands within this distance below zero are treated as endpoint
/// rounding and clamped to zero.
const RADICAND_CLAMP: f64 = 1e-12;

/// Linearization type of an equilibrium of the planar system.
///
/// The stable labels describe the flow direction in which the equilibrium
/// attracts; for `s < 0` that is the reflected variable `-y`, consistent with
/// how such waves are integrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquilibriumKind {
    /// `f'(P_eq) > 0`: one positive and one negative eigenvalue.
    Saddle,
    /// Real eigenvalues of equal sign: monotone approach.
    StableNode,
    /// Complex pair: oscillatory approach.
    StableFocus,
}

impl EquilibriumKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EquilibriumKind::Saddle => "saddle",
            EquilibriumKind::StableNode => "stable-node",
            EquilibriumKind::StableFocus => "stable-focus",
        }
    }
}

/// Shape of the approach onto the attracting end state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Monotone,
    Oscillatory,
}

impl Monotonicity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Monotonicity::Monotone => "monotone",
            Monotonicity::Oscillatory => "oscillatory",
        }
    }
}

/// Jacobian spectrum of one equilibrium, with eigenvectors when it is a
/// saddle (the directions that matter for shooting).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumReport {
    pub p_eq: f64,
    /// `(lambda_plus, lambda_minus)` with the `+-sqrt` sign choice; at a
    /// saddle the plus eigenvalue is the unstable one.
    pub eigenvalues: (Complex64, Complex64),
    /// Unit eigenvector of the unstable direction at a saddle, oriented into
    /// the loop (both components negative); absent elsewhere.
    pub unstable_eigvec: Option<[f64; 2]>,
    /// Unit eigenvector of the stable direction at a saddle; absent elsewhere.
    pub stable_eigvec: Option<[f64; 2]>,
    pub kind: EquilibriumKind,
}

/// The closed `H = 0` level set of the frictionless system through the
/// saddle, expressed as `Q = +-sqrt(2 (F(P) - F(P_saddle)))` on
/// `[P_star, P_saddle]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomoclinicLoop {
    /// Inner endpoint: the point left of the attracting equilibrium where
    /// the potential climbs back to its saddle value.
    pub p_star: f64,
    /// Outer endpoint: the saddle itself.
    pub p_saddle: f64,
    pub samples: Vec<LoopSample>,
}

/// One loop abscissa with both branch ordinates (`q_lower = -q_upper`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoopSample {
    pub p: f64,
    pub q_upper: f64,
    pub q_lower: f64,
}

fn check_gamma_consistency(shock: &ShockData, params: &FluidParams) -> Result<()> {
    if (shock.gamma() - params.gamma()).abs() > 1e-12 {
        return Err(Error::Precondition {
            what: format!(
                "gamma mismatch: shock carries {}, params carry {}",
                shock.gamma(),
                params.gamma()
            ),
        });
    }
    Ok(())
}

/// Locates the two positive roots of `f`, returned ascending.
///
/// Convexity of `f` (`f'' > 0` for `A != 0`) pins the structure: `f'` is
/// strictly increasing with a unique zero `P0`, so `f` descends from `+inf`
/// at vacuum to its minimum at `P0` and rises afterwards. The roots, when
/// the minimum is negative, are bracketed on either side of `P0`. An
/// optional `bracket_hint` restricts the search window.
pub fn find_equilibria(
    c: &ProfileConstants,
    params: &FluidParams,
    bracket_hint: Option<(f64, f64)>,
) -> Result<(f64, f64)> {
    let gamma = params.gamma();
    if c.mass_flux() == 0.0 {
        return Err(Error::InvalidConstants {
            reason: "A = 0: constant-velocity wave has no shock structure".to_string(),
        });
    }
    let (window_lo, window_hi) = match bracket_hint {
        Some((lo, hi)) => {
            if !(lo.is_finite() && hi.is_finite()) || lo <= 0.0 || lo >= hi {
                return Err(Error::Precondition {
                    what: format!("bracket hint ({lo}, {hi}) is not an ascending positive pair"),
                });
            }
            (lo, hi)
        }
        None => (1e-6, 1e6),
    };
    // f' runs from -inf near vacuum to +inf at large P; bracket its zero.
    let mut lo = window_lo;
    let mut hi = window_hi;
    if f_prime(lo, c, gamma)? >= 0.0 || f_prime(hi, c, gamma)? <= 0.0 {
        return Err(Error::BracketFailure {
            what: "inflection point of the potential",
        });
    }
    let p0 = newton_bracketed(
        |p| f_prime(p, c, gamma).unwrap_or(f64::NAN),
        |p| f_second(p, c, gamma).unwrap_or(f64::NAN),
        lo,
        hi,
        ROOT_X_TOL,
        "inflection point of the potential",
    )?;
    let f_min = f_eval(p0, c, gamma)?;
    if f_min >= 0.0 {
        return Err(Error::InvalidConstants {
            reason: format!(
                "f has no two positive roots: minimum f({p0}) = {f_min:e} is non-negative"
            ),
        });
    }
    // Left root: walk toward vacuum until f turns positive again.
    lo = p0;
    loop {
        lo /= 2.0;
        if lo < window_lo / 2.0 || lo < 1e-300 {
            return Err(Error::NumericalUnderflow {
                what: "bracket for the smaller root of f",
            });
        }
        if f_eval(lo, c, gamma)? > 0.0 {
            break;
        }
    }
    let root_lo = newton_bracketed(
        |p| f_eval(p, c, gamma).unwrap_or(f64::NAN),
        |p| f_prime(p, c, gamma).unwrap_or(f64::NAN),
        lo,
        p0,
        ROOT_X_TOL,
        "smaller root of f",
    )?;
    // Right root: walk outward until f turns positive.
    hi = p0;
    loop {
        hi *= 2.0;
        if hi > window_hi * 2.0 {
            return Err(Error::BracketFailure { what: "larger root of f" });
        }
        if f_eval(hi, c, gamma)? > 0.0 {
            break;
        }
    }
    let root_hi = newton_bracketed(
        |p| f_eval(p, c, gamma).unwrap_or(f64::NAN),
        |p| f_prime(p, c, gamma).unwrap_or(f64::NAN),
        p0,
        hi,
        ROOT_X_TOL,
        "larger root of f",
    )?;
    Ok((root_lo, root_hi))
}

/// Jacobian eigen-analysis at an equilibrium `(P_eq, 0)`.
///
/// The Jacobian of the planar system is `[[0, 1], [f'(P)/k^2, -2 s mu/k^2]]`,
/// with eigenvalues `(-s mu +- sqrt(k^2 f'(P) + s^2 mu^2)) / k^2`. A positive
/// `f'` makes a saddle; a negative discriminant makes a focus.
pub fn equilibrium_report(
    p_eq: f64,
    c: &ProfileConstants,
    params: &FluidParams,
) -> Result<EquilibriumReport> {
    let gamma = params.gamma();
    let residual = f_eval(p_eq, c, gamma)?;
    if residual.abs() >= EQUILIBRIUM_F_TOL {
        return Err(Error::Precondition {
            what: format!("P = {p_eq} is not an equilibrium: f(P) = {residual:e}"),
        });
    }
    let fp = f_prime(p_eq, c, gamma)?;
    let (s, mu, k2) = (c.speed(), params.mu(), params.k() * params.k());
    let smu = s * mu;
    let disc = k2 * fp + smu * smu;
    let (eigenvalues, kind) = if disc < 0.0 {
        let re = -smu / k2;
        let im = (-disc).sqrt() / k2;
        (
            (Complex64::new(re, im), Complex64::new(re, -im)),
            EquilibriumKind::StableFocus,
        )
    } else {
        let sq = disc.sqrt();
        let pair = (
            Complex64::new((-smu + sq) / k2, 0.0),
            Complex64::new((-smu - sq) / k2, 0.0),
        );
        let kind = if fp > 0.0 {
            EquilibriumKind::Saddle
        } else {
            EquilibriumKind::StableNode
        };
        (pair, kind)
    };
    let (unstable_eigvec, stable_eigvec) = if kind == EquilibriumKind::Saddle {
        let sq = disc.sqrt();
        // Eigenvector of the unstable eigenvalue, oriented into the loop:
        // both components negative. sq > |s mu| at a saddle, so the raw
        // components below are positive before the overall sign flip.
        let v1 = normalize([-(smu + sq) / fp, -1.0]);
        let v2 = normalize([(-smu + sq) / fp, -1.0]);
        (Some(v1), Some(v2))
    } else {
        (None, None)
    };
    Ok(EquilibriumReport {
        p_eq,
        eigenvalues,
        unstable_eigvec,
        stable_eigvec,
        kind,
    })
}

fn normalize(v: [f64; 2]) -> [f64; 2] {
    let norm = v[0].hypot(v[1]);
    [v[0] / norm, v[1] / norm]
}

/// Decides whether the connecting profile approaches its attracting end
/// state monotonically or with oscillations.
///
/// The approach oscillates exactly when the friction is too weak to damp the
/// local rotation: `s mu / k < sqrt(-f'(P+))` for a right-moving wave (with
/// `-s mu / k` and `P-` in the reflected case) — equivalently, when the
/// attracting equilibrium is a focus.
pub fn classify_monotonicity(shock: &ShockData, params: &FluidParams) -> Result<Monotonicity> {
    check_gamma_consistency(shock, params)?;
    let report = check_profile_hypotheses(shock)?;
    let c = shock.constants();
    let (s, mu, k) = (c.speed(), params.mu(), params.k());
    let oscillatory = match report.direction {
        ProfileDirection::RightMoving => {
            let fp = f_prime(shock.p_plus(), &c, params.gamma())?;
            s * mu / k < (-fp).sqrt()
        }
        ProfileDirection::LeftMoving => {
            let fp = f_prime(shock.p_minus(), &c, params.gamma())?;
            -s * mu / k < (-fp).sqrt()
        }
    };
    Ok(if oscillatory {
        Monotonicity::Oscillatory
    } else {
        Monotonicity::Monotone
    })
}

/// Locates the unique zero `P0` of `f'` between the two roots of `f` (the
/// inflection point of the potential). `p_lo`, `p_hi` are the ascending
/// roots returned by [`find_equilibria`].
pub fn find_inflection_p0(
    c: &ProfileConstants,
    params: &FluidParams,
    p_lo: f64,
    p_hi: f64,
) -> Result<f64> {
    let gamma = params.gamma();
    newton_bracketed(
        |p| f_prime(p, c, gamma).unwrap_or(f64::NAN),
        |p| f_second(p, c, gamma).unwrap_or(f64::NAN),
        p_lo,
        p_hi,
        ROOT_X_TOL,
        "inflection point between the roots",
    )
}

/// Locates `P*`, the abscissa left of the attracting root where the
/// potential returns to its saddle value: `F(P*) = F(P_saddle)` with
/// `0 < P* < p_lo`. The bracket is found by geometric descent `p_lo * 2^-j`,
/// which must hit a sign change because `F -> -inf` at vacuum.
pub fn find_p_star(
    c: &ProfileConstants,
    params: &FluidParams,
    p_lo: f64,
    p_hi: f64,
) -> Result<f64> {
    let f_saddle = potential_f(p_hi, c, params)?;
    let g = |p: f64| potential_f(p, c, params).map_or(f64::NAN, |v| v - f_saddle);
    let mut lower = p_lo;
    let mut found = false;
    for _ in 1..=40 {
        lower /= 2.0;
        if g(lower) <= 0.0 {
            found = true;
            break;
        }
    }
    if !found {
        return Err(Error::NumericalUnderflow {
            what: "bracket for the inner loop endpoint",
        });
    }
    let k2 = params.k() * params.k();
    newton_bracketed(
        g,
        |p| f_eval(p, c, params.gamma()).map_or(f64::NAN, |v| v / k2),
        lower,
        p_lo,
        ROOT_X_TOL,
        "inner loop endpoint",
    )
}

/// Samples the homoclinic loop `Q = +-sqrt(2 (F(P) - F(P_saddle)))` at
/// `n_samples` uniformly spaced abscissas on `[P*, P_saddle]`.
pub fn homoclinic_loop(
    c: &ProfileConstants,
    params: &FluidParams,
    n_samples: usize,
) -> Result<HomoclinicLoop> {
    if n_samples < 2 {
        return Err(Error::Precondition {
            what: format!("need at least 2 loop samples, got {n_samples}"),
        });
    }
    let (p_lo, p_hi) = find_equilibria(c, params, None)?;
    let p_star = find_p_star(c, params, p_lo, p_hi)?;
    let f_saddle = potential_f(p_hi, c, params)?;
    let mut samples = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let t = i as f64 / (n_samples - 1) as f64;
        let p = p_star + t * (p_hi - p_star);
        let radicand = 2.0 * (potential_f(p, c, params)? - f_saddle);
        let q = if radicand >= 0.0 {
            radicand.sqrt()
        } else if radicand >= -RADICAND_CLAMP {
            0.0
        } else {
            return Err(Error::InconsistentConstants { p, radicand });
        };
        samples.push(LoopSample {
            p,
            q_upper: q,
            q_lower: -q,
        });
    }
    Ok(HomoclinicLoop {
        p_star,
        p_saddle: p_hi,
        samples,
    })
}
