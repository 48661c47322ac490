//! Jump conditions and shock admissibility.
//!
//! Given the two densities and the wave speed, the jump conditions
//!
//! ```text
//! s (rho+ - rho-)  =  rho+ u+ - rho- u-
//! s (u+ - u-)      =  (u+^2/2 + h(rho+)) - (u-^2/2 + h(rho-))
//! ```
//!
//! determine the end-state velocities up to a two-branch sign choice. This
//! module solves for both branches, classifies discontinuities against the
//! Lax characteristic inequalities, selects the admissible branch, and checks
//! the orientation hypotheses under which a connecting profile exists.

use crate::error::{Error, Result};
use crate::model::{
    enthalpy, profile_constants, sound_speed, velocity_from_density, ProfileConstants,
};

/// Absolute cap on the jump-condition residuals of any constructed shock.
pub const RH_RESIDUAL_TOL: f64 = 1e-9;

/// Width of the band around `|u| = c_s` classified as sonic.
const SONIC_BAND: f64 = 1e-12;

/// Characteristic family of an admissible discontinuity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShockFamily {
    /// First family: `lambda_1 = u - c_s` decreases across the jump.
    Lax1,
    /// Second family: `lambda_2 = u + c_s` decreases across the jump.
    Lax2,
}

impl ShockFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            ShockFamily::Lax1 => "Lax1",
            ShockFamily::Lax2 => "Lax2",
        }
    }
}

/// Speed regime of a single end state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sonicity {
    Subsonic,
    Supersonic,
    /// `|u|` within 1e-12 of the sound speed.
    Sonic,
}

impl Sonicity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Sonicity::Subsonic => "subsonic",
            Sonicity::Supersonic => "supersonic",
            Sonicity::Sonic => "sonic",
        }
    }
}

/// Orientation of a wave that admits a connecting profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileDirection {
    /// `s > 0` with `P+ < P-`: the profile equations are integrated as given.
    RightMoving,
    /// `s < 0` with `P- < P+`: handled by reflecting `y -> -y`, which turns
    /// the problem into a right-moving one.
    LeftMoving,
}

impl ProfileDirection {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProfileDirection::RightMoving => "right-moving",
            ProfileDirection::LeftMoving => "left-moving",
        }
    }
}

/// A constant far-field state `(rho, u)` of the wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndState {
    rho: f64,
    u: f64,
}

impl EndState {
    /// Builds an end state, rejecting vacuum and non-finite values.
    pub fn new(rho: f64, u: f64) -> Result<Self> {
        if !rho.is_finite() || rho <= 0.0 {
            return Err(Error::Domain { what: "rho", value: rho });
        }
        if !u.is_finite() {
            return Err(Error::InvalidParameter {
                name: "u",
                value: u,
                constraint: "finite velocity",
            });
        }
        Ok(EndState { rho, u })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn u(&self) -> f64 {
        self.u
    }
}

/// Characteristic speeds `(u - c_s, u + c_s)` of an end state.
pub fn characteristic_speeds(state: &EndState, gamma: f64) -> Result<(f64, f64)> {
    let c = sound_speed(state.rho, gamma)?;
    Ok((state.u - c, state.u + c))
}

/// Residuals of the two jump conditions; both vanish exactly on a shock.
pub fn rh_residuals(left: &EndState, right: &EndState, s: f64, gamma: f64) -> Result<(f64, f64)> {
    let res1 = right.rho * right.u - left.rho * left.u - s * (right.rho - left.rho);
    let res2 = right.u * right.u / 2.0 + enthalpy(right.rho, gamma)?
        - left.u * left.u / 2.0
        - enthalpy(left.rho, gamma)?
        - s * (right.u - left.u);
    Ok((res1, res2))
}

/// One `(u-, u+)` velocity pair solving the jump conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchVelocities {
    pub u_minus: f64,
    pub u_plus: f64,
}

/// Both velocity branches for a given density pair and speed.
///
/// The jump conditions reduce to a quadratic in `u- - s` with roots
/// `+-d`; the plus branch takes `u- = s + d`, `u+ = s + (rho-/rho+) d`,
/// and the minus branch the opposite signs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityBranches {
    /// Positive root offset `d = rho+ sqrt(2 (h(rho+) - h(rho-)) / ((rho+)^2 - (rho-)^2))`.
    pub d: f64,
    pub plus_branch: BranchVelocities,
    pub minus_branch: BranchVelocities,
}

/// Solves the jump conditions for both velocity branches.
pub fn rh_velocity_branches(
    rho_minus: f64,
    rho_plus: f64,
    s: f64,
    gamma: f64,
) -> Result<VelocityBranches> {
    if !rho_minus.is_finite() || rho_minus <= 0.0 {
        return Err(Error::Domain { what: "rho_minus", value: rho_minus });
    }
    if !rho_plus.is_finite() || rho_plus <= 0.0 {
        return Err(Error::Domain { what: "rho_plus", value: rho_plus });
    }
    if rho_minus == rho_plus {
        return Err(Error::DegenerateShock { rho: rho_minus });
    }
    // h is strictly increasing, so numerator and denominator share their
    // sign and the radicand is positive for distinct densities.
    let dh = enthalpy(rho_plus, gamma)? - enthalpy(rho_minus, gamma)?;
    let d = rho_plus * (2.0 * dh / (rho_plus * rho_plus - rho_minus * rho_minus)).sqrt();
    let ratio = rho_minus / rho_plus;
    Ok(VelocityBranches {
        d,
        plus_branch: BranchVelocities {
            u_minus: s + d,
            u_plus: s + ratio * d,
        },
        minus_branch: BranchVelocities {
            u_minus: s - d,
            u_plus: s - ratio * d,
        },
    })
}

/// Tests the strict Lax inequality chains `lambda_k(W+) < s < lambda_k(W-)`
/// for both families; `None` means the discontinuity is not admissible.
pub fn lax_classify(
    left: &EndState,
    right: &EndState,
    s: f64,
    gamma: f64,
) -> Result<Option<ShockFamily>> {
    let (l1_left, l2_left) = characteristic_speeds(left, gamma)?;
    let (l1_right, l2_right) = characteristic_speeds(right, gamma)?;
    if l1_right < s && s < l1_left {
        Ok(Some(ShockFamily::Lax1))
    } else if l2_right < s && s < l2_left {
        Ok(Some(ShockFamily::Lax2))
    } else {
        Ok(None)
    }
}

/// Compares `|u|` to the sound speed, with a 1e-12 band counted as sonic.
pub fn sonic_classify(state: &EndState, gamma: f64) -> Result<Sonicity> {
    let c = sound_speed(state.rho, gamma)?;
    let gap = state.u.abs() - c;
    if gap.abs() <= SONIC_BAND {
        Ok(Sonicity::Sonic)
    } else if gap > 0.0 {
        Ok(Sonicity::Supersonic)
    } else {
        Ok(Sonicity::Subsonic)
    }
}

/// A validated admissible shock: end states, speed, Lax family, the derived
/// profile constants, and the end states in the profile variable `P = sqrt(rho)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShockData {
    left: EndState,
    right: EndState,
    s: f64,
    family: ShockFamily,
    constants: ProfileConstants,
    p_minus: f64,
    p_plus: f64,
    gamma: f64,
}

impl ShockData {
    /// Validates and assembles a shock from explicit end states.
    ///
    /// Checks the jump-condition residuals, agreement of the constants
    /// computed from either side, and the Lax inequalities.
    pub fn new(left: EndState, right: EndState, s: f64, gamma: f64) -> Result<Self> {
        if s == 0.0 {
            return Err(Error::ZeroSpeed);
        }
        let (res1, res2) = rh_residuals(&left, &right, s, gamma)?;
        if res1.abs() >= RH_RESIDUAL_TOL || res2.abs() >= RH_RESIDUAL_TOL {
            return Err(Error::RankineHugoniot {
                res1: res1.abs(),
                res2: res2.abs(),
            });
        }
        let from_left = profile_constants(left.rho, left.u, s, gamma)?;
        let from_right = profile_constants(right.rho, right.u, s, gamma)?;
        let rel = |a: f64, b: f64| (a - b).abs() / a.abs().max(b.abs()).max(1e-300);
        if rel(from_left.mass_flux(), from_right.mass_flux()) > 1e-9
            || rel(from_left.bernoulli(), from_right.bernoulli()) > 1e-9
        {
            return Err(Error::InvalidConstants {
                reason: format!(
                    "constants disagree between end states: A = {} vs {}, B = {} vs {}",
                    from_left.mass_flux(),
                    from_right.mass_flux(),
                    from_left.bernoulli(),
                    from_right.bernoulli()
                ),
            });
        }
        let family = lax_classify(&left, &right, s, gamma)?.ok_or(Error::NotAdmissible)?;
        Ok(ShockData {
            left,
            right,
            s,
            family,
            constants: from_left,
            p_minus: left.rho.sqrt(),
            p_plus: right.rho.sqrt(),
            gamma,
        })
    }

    /// Assembles a shock from profile constants and the two positive roots
    /// of `f` (ascending): end states are recovered via `rho = P^2` and
    /// `u = s - A/P^2`, with the orientation fixed by the sign of the speed
    /// (`s > 0` puts the smaller root on the right).
    pub fn from_profile_constants(
        c: &ProfileConstants,
        gamma: f64,
        roots: (f64, f64),
    ) -> Result<Self> {
        let (lo, hi) = roots;
        if !(lo.is_finite() && hi.is_finite()) || lo <= 0.0 || lo >= hi {
            return Err(Error::InvalidConstants {
                reason: format!("root pair ({lo}, {hi}) is not ascending positive"),
            });
        }
        let s = c.speed();
        let (p_plus, p_minus) = if s > 0.0 { (lo, hi) } else { (hi, lo) };
        let left = EndState::new(p_minus * p_minus, velocity_from_density(p_minus, c)?)?;
        let right = EndState::new(p_plus * p_plus, velocity_from_density(p_plus, c)?)?;
        ShockData::new(left, right, s, gamma)
    }

    pub fn left(&self) -> EndState {
        self.left
    }

    pub fn right(&self) -> EndState {
        self.right
    }

    pub fn speed(&self) -> f64 {
        self.s
    }

    pub fn family(&self) -> ShockFamily {
        self.family
    }

    pub fn constants(&self) -> ProfileConstants {
        self.constants
    }

    /// End state at `y -> -infinity` in the profile variable, `sqrt(rho-)`.
    pub fn p_minus(&self) -> f64 {
        self.p_minus
    }

    /// End state at `y -> +infinity` in the profile variable, `sqrt(rho+)`.
    pub fn p_plus(&self) -> f64 {
        self.p_plus
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// The shock with both end states swapped, speed negated, and velocities
    /// negated: the image of this wave under the reflection `y -> -y`.
    pub fn mirrored(&self) -> Result<Self> {
        let left = EndState::new(self.right.rho, -self.right.u)?;
        let right = EndState::new(self.left.rho, -self.left.u)?;
        ShockData::new(left, right, -self.s, self.gamma)
    }
}

/// Picks the admissible velocity branch for a density pair: the minus branch
/// (a second-family shock) when the density decreases across the wave, the
/// plus branch (first family) when it increases. The selection follows from
/// the strict inequalities relating `d` and the sound speeds, which hold for
/// every density ratio and do not involve `s`.
pub fn select_admissible_branch(
    rho_minus: f64,
    rho_plus: f64,
    s: f64,
    gamma: f64,
) -> Result<ShockData> {
    if s == 0.0 {
        return Err(Error::ZeroSpeed);
    }
    let branches = rh_velocity_branches(rho_minus, rho_plus, s, gamma)?;
    let chosen = if rho_plus < rho_minus {
        branches.minus_branch
    } else {
        branches.plus_branch
    };
    let left = EndState::new(rho_minus, chosen.u_minus)?;
    let right = EndState::new(rho_plus, chosen.u_plus)?;
    let shock = ShockData::new(left, right, s, gamma)?;
    let expected = if rho_plus < rho_minus {
        ShockFamily::Lax2
    } else {
        ShockFamily::Lax1
    };
    if shock.family() != expected {
        return Err(Error::NotAdmissible);
    }
    Ok(shock)
}

/// Diagnostics attached to a successful orientation check: which (if any) of
/// the standard sufficient conditions held. Neither condition is necessary,
/// so a profile is still attempted when both fail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypothesisReport {
    /// Wave orientation; decides whether integration runs on the given or
    /// the reflected problem.
    pub direction: ProfileDirection,
    /// Speed regime of the attracting end state (the right state for a
    /// second-family shock, the left state for a first-family one).
    pub attracting_sonicity: Sonicity,
    /// True when the family/subsonic pairing holds: a second-family shock
    /// with subsonic right state, or a first-family shock with subsonic
    /// left state.
    pub subsonic_condition: bool,
    /// True when the speed-sign chain holds: `s > u+ + c_s(rho+) > 0` for a
    /// right-moving wave, `s < u- - c_s(rho-) < 0` for a left-moving one.
    pub signed_speed_condition: bool,
}

impl HypothesisReport {
    /// Human-readable label of the strongest sufficient condition that held.
    pub fn sufficient_condition(&self) -> &'static str {
        if self.subsonic_condition {
            "subsonic attracting state"
        } else if self.signed_speed_condition {
            "speed-sign chain"
        } else {
            "orientation hypotheses only"
        }
    }
}

/// Checks the orientation hypotheses under which a connecting profile is
/// guaranteed: a right-moving wave must have `P+ < P-`, a left-moving one
/// `P- < P+`. On success the report records which sufficient condition held;
/// failure of the subsonic test alone never rejects the shock.
pub fn check_profile_hypotheses(shock: &ShockData) -> Result<HypothesisReport> {
    let s = shock.speed();
    let (p_plus, p_minus) = (shock.p_plus(), shock.p_minus());
    let direction = if s > 0.0 && p_plus < p_minus {
        ProfileDirection::RightMoving
    } else if s < 0.0 && p_minus < p_plus {
        ProfileDirection::LeftMoving
    } else {
        return Err(Error::NoProfileGuarantee {
            details: format!(
                "need s > 0 with P+ < P- or s < 0 with P- < P+; got s = {s}, P+ = {p_plus}, \
                 P- = {p_minus}"
            ),
        });
    };
    let gamma = shock.gamma();
    let attracting = match shock.family() {
        ShockFamily::Lax2 => shock.right(),
        ShockFamily::Lax1 => shock.left(),
    };
    let attracting_sonicity = sonic_classify(&attracting, gamma)?;
    let subsonic_condition = attracting_sonicity == Sonicity::Subsonic;
    let signed_speed_condition = match direction {
        ProfileDirection::RightMoving => {
            let (_, l2_right) = characteristic_speeds(&shock.right(), gamma)?;
            s > l2_right && l2_right > 0.0
        }
        ProfileDirection::LeftMoving => {
            let (l1_left, _) = characteristic_speeds(&shock.left(), gamma)?;
            s < l1_left && l1_left < 0.0
        }
    };
    Ok(HypothesisReport {
        direction,
        attracting_sonicity,
        subsonic_condition,
        signed_speed_condition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMA_53: f64 = 5.0 / 3.0;
    const GAMMA_32: f64 = 1.5;

    fn assert_close(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol,
            "expected {expected}, got {actual} (tol {tol})"
        );
    }

    /// The example shock used throughout: gamma = 5/3, rho 1.5 -> 1.0, s = 1.
    pub(crate) fn example_shock() -> ShockData {
        select_admissible_branch(1.5, 1.0, 1.0, GAMMA_53).unwrap()
    }

    #[test]
    fn velocity_branches_match_reference() {
        let b = rh_velocity_branches(1.5, 1.0, 1.0, GAMMA_53).unwrap();
        assert_close(b.d, 1.114_218_465_301_034_8, 1e-12);
        assert_close(b.minus_branch.u_minus, -0.114_218_465_301_034_8, 1e-12);
        assert_close(b.minus_branch.u_plus, -0.671_327_697_951_552_1, 1e-12);
        assert_close(b.plus_branch.u_minus, 2.114_218_465_301_034_8, 1e-12);
        assert_close(b.plus_branch.u_plus, 2.671_327_697_951_552_1, 1e-12);
        // Published rounded values.
        assert_close(b.minus_branch.u_minus, -0.11, 0.005);
        assert_close(b.minus_branch.u_plus, -0.67, 0.005);
    }

    #[test]
    fn velocity_branches_near_vacuum() {
        let b = rh_velocity_branches(0.5, 0.05, 1.0, GAMMA_32).unwrap();
        assert_close(b.minus_branch.u_minus, 0.83, 0.005);
        assert_close(b.minus_branch.u_plus, -0.71, 0.005);
        assert_close(b.d, 0.171_181_276_134_938_2, 1e-12);
    }

    #[test]
    fn both_branches_satisfy_jump_conditions() {
        for (rm, rp, s, gamma) in [
            (1.5, 1.0, 1.0, GAMMA_53),
            (0.5, 0.05, 1.0, GAMMA_32),
            (1.0, 1.5, -1.0, GAMMA_53),
            (2.0, 0.7, 0.3, 1.0),
        ] {
            let b = rh_velocity_branches(rm, rp, s, gamma).unwrap();
            assert!(b.d > 0.0);
            for branch in [b.plus_branch, b.minus_branch] {
                let left = EndState::new(rm, branch.u_minus).unwrap();
                let right = EndState::new(rp, branch.u_plus).unwrap();
                let (r1, r2) = rh_residuals(&left, &right, s, gamma).unwrap();
                assert!(r1.abs() < 1e-9, "mass residual {r1:e}");
                assert!(r2.abs() < 1e-9, "velocity residual {r2:e}");
            }
        }
    }

    #[test]
    fn equal_densities_are_degenerate() {
        assert!(matches!(
            rh_velocity_branches(1.0, 1.0, 1.0, 1.4),
            Err(Error::DegenerateShock { .. })
        ));
    }

    #[test]
    fn lax_classification_of_both_branches() {
        let b = rh_velocity_branches(1.5, 1.0, 1.0, GAMMA_53).unwrap();
        let left2 = EndState::new(1.5, b.minus_branch.u_minus).unwrap();
        let right2 = EndState::new(1.0, b.minus_branch.u_plus).unwrap();
        assert_eq!(
            lax_classify(&left2, &right2, 1.0, GAMMA_53).unwrap(),
            Some(ShockFamily::Lax2)
        );
        // Second-family characteristic speeds bracket s = 1.
        let (_, l2_right) = characteristic_speeds(&right2, GAMMA_53).unwrap();
        let (_, l2_left) = characteristic_speeds(&left2, GAMMA_53).unwrap();
        assert_close(l2_right, 0.619_666_750_784_253_5, 1e-12);
        assert_close(l2_left, 1.363_601_267_224_129_2, 1e-12);

        let left1 = EndState::new(1.5, b.plus_branch.u_minus).unwrap();
        let right1 = EndState::new(1.0, b.plus_branch.u_plus).unwrap();
        assert_eq!(lax_classify(&left1, &right1, 1.0, GAMMA_53).unwrap(), None);
    }

    #[test]
    fn reflected_shock_is_first_family() {
        // Densities swapped, speed negated: the plus branch now carries the
        // admissible wave, in the first family.
        let b = rh_velocity_branches(1.0, 1.5, -1.0, GAMMA_53).unwrap();
        assert_close(b.plus_branch.u_minus, 0.671_327_697_951_552_1, 1e-12);
        assert_close(b.plus_branch.u_plus, 0.114_218_465_301_034_8, 1e-12);
        let left = EndState::new(1.0, b.plus_branch.u_minus).unwrap();
        let right = EndState::new(1.5, b.plus_branch.u_plus).unwrap();
        assert_eq!(
            lax_classify(&left, &right, -1.0, GAMMA_53).unwrap(),
            Some(ShockFamily::Lax1)
        );
    }

    #[test]
    fn select_admissible_second_family() {
        let shock = example_shock();
        assert_eq!(shock.family(), ShockFamily::Lax2);
        assert_close(shock.left().u(), -0.11, 0.005);
        assert_close(shock.right().u(), -0.67, 0.005);
        assert_close(shock.p_minus(), 1.224_744_871_391_589, 1e-12);
        assert_eq!(shock.p_plus(), 1.0);
        assert_close(shock.constants().mass_flux(), 1.671_327_697_951_552_1, 1e-12);
        assert_close(shock.constants().bernoulli(), -3.396_668_136_970_017_4, 1e-12);

        let near_vacuum = select_admissible_branch(0.5, 0.1, 1.0, GAMMA_32).unwrap();
        assert_close(near_vacuum.left().u(), 0.69, 0.005);
        assert_close(near_vacuum.right().u(), -0.56, 0.005);
    }

    #[test]
    fn select_admissible_first_family_on_reflection() {
        let shock = select_admissible_branch(1.0, 1.5, -1.0, GAMMA_53).unwrap();
        assert_eq!(shock.family(), ShockFamily::Lax1);
        let original = example_shock();
        // Velocities are the negation of the original pair with sides swapped.
        assert_close(shock.left().u(), -original.right().u(), 1e-12);
        assert_close(shock.right().u(), -original.left().u(), 1e-12);
    }

    #[test]
    fn select_rejects_zero_speed() {
        assert!(matches!(
            select_admissible_branch(1.5, 1.0, 0.0, GAMMA_53),
            Err(Error::ZeroSpeed)
        ));
    }

    #[test]
    fn mirrored_shock_round_trips() {
        let shock = example_shock();
        let mirrored = shock.mirrored().unwrap();
        assert_eq!(mirrored.family(), ShockFamily::Lax1);
        assert_eq!(mirrored.speed(), -1.0);
        assert_close(mirrored.constants().mass_flux(), -shock.constants().mass_flux(), 1e-12);
        assert_close(mirrored.constants().bernoulli(), shock.constants().bernoulli(), 1e-12);
        let back = mirrored.mirrored().unwrap();
        assert_close(back.left().u(), shock.left().u(), 1e-12);
        assert_close(back.right().u(), shock.right().u(), 1e-12);
    }

    #[test]
    fn sonic_classification() {
        let right = EndState::new(1.0, -0.671_327_697_951_552_1).unwrap();
        assert_eq!(sonic_classify(&right, GAMMA_53).unwrap(), Sonicity::Subsonic);
        let near_vacuum = EndState::new(0.05, -0.711_812_761_349_382_3).unwrap();
        assert_eq!(sonic_classify(&near_vacuum, GAMMA_32).unwrap(), Sonicity::Supersonic);
        // Isothermal sound speed is exactly 1.
        let sonic = EndState::new(1.0, 1.0).unwrap();
        assert_eq!(sonic_classify(&sonic, 1.0).unwrap(), Sonicity::Sonic);
    }

    #[test]
    fn hypotheses_for_right_moving_wave() {
        let report = check_profile_hypotheses(&example_shock()).unwrap();
        assert_eq!(report.direction, ProfileDirection::RightMoving);
        assert!(report.subsonic_condition);
        assert_eq!(report.sufficient_condition(), "subsonic attracting state");
    }

    #[test]
    fn supersonic_attracting_state_is_not_rejected() {
        let shock = select_admissible_branch(0.5, 0.05, 1.0, GAMMA_32).unwrap();
        let report = check_profile_hypotheses(&shock).unwrap();
        assert_eq!(report.direction, ProfileDirection::RightMoving);
        assert_eq!(report.attracting_sonicity, Sonicity::Supersonic);
        assert!(!report.subsonic_condition);
        // u+ + c_s(rho+) < 0 here, so the speed-sign chain fails too; the
        // orientation hypotheses alone still admit the wave.
        assert!(!report.signed_speed_condition);
        assert_eq!(report.sufficient_condition(), "orientation hypotheses only");
    }

    #[test]
    fn hypotheses_for_left_moving_wave() {
        let shock = select_admissible_branch(1.0, 1.5, -1.0, GAMMA_53).unwrap();
        let report = check_profile_hypotheses(&shock).unwrap();
        assert_eq!(report.direction, ProfileDirection::LeftMoving);
        assert!(report.subsonic_condition);
    }

    #[test]
    fn wrong_orientation_is_reported() {
        // A first-family wave with s > 0: admissible as a shock, but outside
        // both orientation hypotheses.
        let shock = select_admissible_branch(1.0, 1.5, 3.0, GAMMA_53).unwrap();
        assert_eq!(shock.family(), ShockFamily::Lax1);
        assert!(matches!(
            check_profile_hypotheses(&shock),
            Err(Error::NoProfileGuarantee { .. })
        ));
    }

    #[test]
    fn shock_from_direct_constants() {
        let c = ProfileConstants::new(1.0, -3.1, 1.0).unwrap();
        let roots = (0.806_963_786_333_359_8, 1.075_372_948_681_295_8);
        let shock = ShockData::from_profile_constants(&c, GAMMA_32, roots).unwrap();
        assert_eq!(shock.family(), ShockFamily::Lax2);
        assert_close(shock.right().rho(), 0.651_190_552_453_472_4, 1e-12);
        assert_close(shock.left().rho(), 1.156_426_978_755_504_9, 1e-12);
        assert_close(shock.right().u(), -0.535_648_814_670_802_6, 1e-12);
        assert_close(shock.left().u(), 0.135_267_493_433_822, 1e-12);
        let (r1, r2) = rh_residuals(&shock.left(), &shock.right(), 1.0, GAMMA_32).unwrap();
        assert!(r1.abs() < 1e-9 && r2.abs() < 1e-9);
    }

    #[test]
    fn shock_constructor_rejects_non_jump_states() {
        let left = EndState::new(1.5, 0.0).unwrap();
        let right = EndState::new(1.0, 0.5).unwrap();
        assert!(matches!(
            ShockData::new(left, right, 1.0, GAMMA_53),
            Err(Error::RankineHugoniot { .. })
        ));
    }
}
