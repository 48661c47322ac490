//! Closed-form thermodynamic and profile functions.
//!
//! Everything here is a pure function of its arguments: the enthalpy and
//! sound speed of the `p = rho^gamma` pressure law, the two conserved
//! constants `A` (mass flux in the co-moving frame) and `B` (Bernoulli
//! constant) attached to a traveling wave, and the scalar field
//!
//! ```text
//! f(P) = (1/2 (A^2/P^4 - s^2) + h(P^2) + B) P
//! ```
//!
//! whose positive roots are the wave's end states in the variable
//! `P = sqrt(rho)`. The module also provides `f`'s first two derivatives,
//! its scaled antiderivative `F` (the potential of the frictionless phase
//! plane), the orbit energy `H`, and the Lyapunov function `V` used to prove
//! convergence onto the attracting equilibrium.

use crate::error::{Error, Result};

/// Width of the band around `gamma = 1` treated as isothermal.
///
/// The isothermal (logarithmic) and adiabatic (power-law) enthalpies are
/// genuinely different formulas whose gamma -> 1 limit does not commute with
/// floating-point evaluation, so dispatch must be a hard switch.
pub(crate) const GAMMA_ISOTHERMAL_TOL: f64 = 1e-12;

/// True when `gamma` should use the isothermal (logarithmic) branch.
pub(crate) fn is_isothermal(gamma: f64) -> bool {
    (gamma - 1.0).abs() <= GAMMA_ISOTHERMAL_TOL
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !gamma.is_finite() || gamma < 1.0 {
        return Err(Error::InvalidParameter {
            name: "gamma",
            value: gamma,
            constraint: "gamma >= 1",
        });
    }
    Ok(())
}

fn check_positive(what: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::Domain { what, value });
    }
    Ok(())
}

/// Fluid parameters: adiabatic exponent, viscosity, and dispersion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluidParams {
    gamma: f64,
    mu: f64,
    k: f64,
}

impl FluidParams {
    /// Builds a parameter set, rejecting `gamma < 1`, `mu <= 0`, `k <= 0`,
    /// and non-finite values.
    pub fn new(gamma: f64, mu: f64, k: f64) -> Result<Self> {
        check_gamma(gamma)?;
        if !mu.is_finite() || mu <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "mu",
                value: mu,
                constraint: "mu > 0",
            });
        }
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "k",
                value: k,
                constraint: "k > 0",
            });
        }
        Ok(FluidParams { gamma, mu, k })
    }

    /// Adiabatic exponent of the pressure law `p = rho^gamma`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Viscosity coefficient.
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Dispersion coefficient.
    pub fn k(&self) -> f64 {
        self.k
    }
}

/// The two first integrals of the profile equations, together with the wave
/// speed: `A = (s - u) rho` (mass flux in the frame moving with the wave) and
/// `B = s u - u^2/2 - h(rho)` (Bernoulli constant).
///
/// Both constants evaluate to the same value at either end state of a
/// jump-condition-consistent shock; `A = 0` only for the degenerate
/// constant-velocity wave, which carries no shock.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileConstants {
    a: f64,
    b: f64,
    s: f64,
}

impl ProfileConstants {
    /// Builds constants directly, rejecting `s = 0` (the friction term
    /// `2 s mu / k^2` vanishes and no wave selection is possible) and
    /// non-finite values.
    pub fn new(a: f64, b: f64, s: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || !s.is_finite() {
            return Err(Error::InvalidConstants {
                reason: format!("non-finite constants A={a}, B={b}, s={s}"),
            });
        }
        if s == 0.0 {
            return Err(Error::ZeroSpeed);
        }
        Ok(ProfileConstants { a, b, s })
    }

    /// Mass-flux constant `A`.
    pub fn mass_flux(&self) -> f64 {
        self.a
    }

    /// Bernoulli constant `B`.
    pub fn bernoulli(&self) -> f64 {
        self.b
    }

    /// Wave speed `s`.
    pub fn speed(&self) -> f64 {
        self.s
    }

    /// Constants of the spatially reflected wave `y -> -y`.
    ///
    /// Reflection swaps the roles of the two end states and negates every
    /// velocity, hence `s -> -s` and `A -> -A` while `B` is even in `(s, u)`.
    /// `f` depends on `A` and `s` only through their squares, so the
    /// reflected wave solves the same scalar equation with the friction sign
    /// reversed.
    pub fn mirrored(&self) -> Self {
        ProfileConstants {
            a: -self.a,
            b: self.b,
            s: -self.s,
        }
    }
}

/// Enthalpy `h(rho)` of the pressure law `p = rho^gamma`: `ln rho` in the
/// isothermal case, `gamma/(gamma-1) rho^(gamma-1)` otherwise.
pub fn enthalpy(rho: f64, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    check_positive("rho", rho)?;
    if is_isothermal(gamma) {
        Ok(rho.ln())
    } else {
        Ok(gamma / (gamma - 1.0) * rho.powf(gamma - 1.0))
    }
}

/// Sound speed `c_s(rho) = sqrt(rho h'(rho)) = sqrt(gamma rho^(gamma-1))`;
/// identically 1 in the isothermal case.
pub fn sound_speed(rho: f64, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    check_positive("rho", rho)?;
    if is_isothermal(gamma) {
        Ok(1.0)
    } else {
        Ok((gamma * rho.powf(gamma - 1.0)).sqrt())
    }
}

/// Profile constants evaluated from one end state `(rho, u)` and the wave
/// speed: `A = (s - u) rho`, `B = s u - u^2/2 - h(rho)`.
pub fn profile_constants(rho: f64, u: f64, s: f64, gamma: f64) -> Result<ProfileConstants> {
    check_positive("rho", rho)?;
    if !u.is_finite() {
        return Err(Error::InvalidParameter {
            name: "u",
            value: u,
            constraint: "finite velocity",
        });
    }
    let a = (s - u) * rho;
    let b = s * u - u * u / 2.0 - enthalpy(rho, gamma)?;
    ProfileConstants::new(a, b, s)
}

/// `f(P)` without the domain check, usable on transient non-positive `P`
/// produced by trial integrator stages. Division by `P = 0` and logs of 0
/// yield non-finite values, which the caller treats as a rejected step.
pub(crate) fn f_raw(p: f64, c: &ProfileConstants, gamma: f64) -> f64 {
    let rho = p * p;
    let h = if is_isothermal(gamma) {
        rho.ln()
    } else {
        gamma / (gamma - 1.0) * rho.powf(gamma - 1.0)
    };
    let a2 = c.a * c.a;
    (0.5 * (a2 / (rho * rho) - c.s * c.s) + h + c.b) * p
}

/// The scalar field `f(P) = (1/2 (A^2/P^4 - s^2) + h(P^2) + B) P` whose
/// positive roots are the end states `P = sqrt(rho)` of the wave.
pub fn f_eval(p: f64, c: &ProfileConstants, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    check_positive("P", p)?;
    Ok(f_raw(p, c, gamma))
}

/// First derivative of `f`.
pub fn f_prime(p: f64, c: &ProfileConstants, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    check_positive("P", p)?;
    let a2 = c.a * c.a;
    let common = -1.5 * a2 / p.powi(4) + c.b - c.s * c.s / 2.0;
    if is_isothermal(gamma) {
        Ok(common + (p * p).ln() + 2.0)
    } else {
        Ok(common + gamma * (2.0 * gamma - 1.0) / (gamma - 1.0) * p.powf(2.0 * (gamma - 1.0)))
    }
}

/// Second derivative of `f`; strictly positive on `P > 0` whenever `A != 0`,
/// which is what makes the root structure of `f` a two-root structure.
pub fn f_second(p: f64, c: &ProfileConstants, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    check_positive("P", p)?;
    let a2 = c.a * c.a;
    if is_isothermal(gamma) {
        Ok(6.0 * a2 / p.powi(5) + 2.0 / p)
    } else {
        Ok(6.0 * a2 / p.powi(5)
            + 2.0 * gamma * (2.0 * gamma - 1.0) * p.powf(2.0 * gamma - 3.0))
    }
}

/// The potential `F(P)`: the closed-form antiderivative of `f` divided by
/// `k^2`, so that `F'(P) = f(P)/k^2`. Diverges to negative infinity as
/// `P -> 0+` when `A != 0`.
pub fn potential_f(p: f64, c: &ProfileConstants, params: &FluidParams) -> Result<f64> {
    check_positive("P", p)?;
    let a2 = c.a * c.a;
    let s2 = c.s * c.s;
    let k2 = params.k * params.k;
    let p2 = p * p;
    if is_isothermal(params.gamma) {
        Ok((-a2 / (4.0 * p2) + 0.5 * (c.b - s2 / 2.0 - 1.0) * p2 + 0.5 * p2 * p2.ln()) / k2)
    } else {
        let gamma = params.gamma;
        Ok(
            (-a2 / p2 + (2.0 * c.b - s2) * p2 + 2.0 / (gamma - 1.0) * p2.powf(gamma))
                / (4.0 * k2),
        )
    }
}

/// Orbit energy `H(P, Q) = F(P) - Q^2/2 - F(P_minus)`, conserved by the
/// frictionless flow and zero on the homoclinic loop through the saddle
/// `(P_minus, 0)`. Along the viscous flow `H' = (2 s mu / k^2) Q^2`.
pub fn energy_h(
    p: f64,
    q: f64,
    c: &ProfileConstants,
    params: &FluidParams,
    p_minus: f64,
) -> Result<f64> {
    Ok(potential_f(p, c, params)? - q * q / 2.0 - potential_f(p_minus, c, params)?)
}

/// Lyapunov function `V(P, Q) = Q^2/2 - F(P) + F(P_plus)`: zero at the
/// attracting equilibrium `(P_plus, 0)` and non-increasing along the flow
/// when `s > 0`.
pub fn lyapunov_v(
    p: f64,
    q: f64,
    c: &ProfileConstants,
    params: &FluidParams,
    p_plus: f64,
) -> Result<f64> {
    Ok(q * q / 2.0 - potential_f(p, c, params)? + potential_f(p_plus, c, params)?)
}

/// Velocity recovered from the profile variable: `U(P) = s - A/P^2`.
pub fn velocity_from_density(p: f64, c: &ProfileConstants) -> Result<f64> {
    check_positive("P", p)?;
    Ok(c.s - c.a / (p * p))
}
