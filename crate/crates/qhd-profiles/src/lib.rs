//! Traveling-wave profiles for one-dimensional quantum hydrodynamics with
//! nonlinear (density-weighted) viscosity.
//!
//! A planar wave moving at speed `s` reduces the flow equations to a second
//! order system for `P(y) = sqrt(rho)`: `P'' = f(P)/k^2 - (2 s mu / k^2) P'`
//! with `f` built from the end states through the mass-flux constant `A` and
//! the Bernoulli constant `B`. This crate computes everything around that
//! reduction:
//!
//! - jump (shock) data: residuals, admissible velocity branches, Lax
//!   classification, sonicity ([`rankine_hugoniot`]);
//! - the nonlinearity `f`, its potential, enthalpy, orbit energy and
//!   Lyapunov functions ([`model`]);
//! - equilibria of the phase plane, their spectra, monotone-versus
//!   -oscillatory classification, and the frictionless homoclinic loop
//!   ([`phase_plane`]);
//! - adaptive integration and saddle-to-node shooting that produces the
//!   actual profiles ([`integrator`]);
//! - parameter sweeps over viscosity and vacuum-approaching end states
//!   ([`experiments`]);
//! - a small command-line front end with CSV/JSON/SVG output ([`cli`]).
//!
//! Each capability has a runnable demonstration under `examples/`.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod model;
pub mod phase_plane;
pub mod rankine_hugoniot;

pub mod integrator;

mod roots;

pub use error::{Error, Result};
