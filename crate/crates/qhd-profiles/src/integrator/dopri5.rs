//! Explicit embedded Runge-Kutta 5(4) stepper for two-dimensional systems,
//! with FSAL reuse, PI step-size control, and a fourth-order dense-output
//! interpolant on the last accepted step.

use crate::error::{Error, Result};

type State = [f64; 2];

// Node fractions.
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

// Stage coupling coefficients.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
// Fifth-order weights (also the last stage row: first-same-as-last).
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// Difference between the fifth- and fourth-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

// Dense-output weights.
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

// Step-size controller constants.
const SAFETY: f64 = 0.9;
const BETA: f64 = 0.04;
const EXPO1: f64 = 0.2 - BETA * 0.75;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 10.0;
/// Below this step size the problem is declared too stiff to continue.
const H_FLOOR: f64 = 1e-14;
/// Cap on rejected attempts within a single accepted step.
const MAX_REJECTS: usize = 10_000;

/// One accepted step: the interval covered and the state at its right end.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AcceptedStep {
    pub y_from: f64,
    pub y_to: f64,
    pub h: f64,
    pub state: State,
    /// True when the step landed exactly on the requested endpoint.
    pub reached_end: bool,
}

pub(crate) struct Dopri5<F> {
    rhs: F,
    y: f64,
    state: State,
    /// Derivative at `(y, state)`, reused as the first stage (FSAL).
    k1: State,
    h: f64,
    h_max: f64,
    tol: f64,
    err_old: f64,
    just_rejected: bool,
    /// Dense-output polynomial coefficients of the last accepted step.
    cont: [State; 5],
    dense_from: f64,
    dense_h: f64,
}

impl<F: FnMut(f64, State) -> State> Dopri5<F> {
    /// Prepares a stepper at `(y0, state0)` with mixed absolute/relative
    /// local tolerance `tol` per step; the initial step size is estimated
    /// from the local derivative and curvature.
    pub(crate) fn new(mut rhs: F, y0: f64, state0: State, tol: f64, h_max: f64) -> Result<Self> {
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "tol",
                value: tol,
                constraint: "tol > 0",
            });
        }
        let k1 = rhs(y0, state0);
        if !(k1[0].is_finite() && k1[1].is_finite()) {
            return Err(Error::Precondition {
                what: format!("right-hand side not finite at the initial point y = {y0}"),
            });
        }
        let h = initial_step(&mut rhs, y0, state0, k1, tol).min(h_max);
        Ok(Dopri5 {
            rhs,
            y: y0,
            state: state0,
            k1,
            h,
            h_max,
            tol,
            err_old: 1e-4,
            just_rejected: false,
            cont: [[0.0; 2]; 5],
            dense_from: y0,
            dense_h: 0.0,
        })
    }

    pub(crate) fn y(&self) -> f64 {
        self.y
    }

    #[cfg(test)]
    pub(crate) fn state(&self) -> State {
        self.state
    }

    /// Advances one accepted step, not overshooting `y_end`. Attempts are
    /// retried with shrinking steps until the error estimate passes.
    pub(crate) fn advance(&mut self, y_end: f64) -> Result<AcceptedStep> {
        let mut rejects = 0;
        loop {
            let mut h = self.h.min(self.h_max);
            let remaining = y_end - self.y;
            let mut reached_end = false;
            if h >= remaining {
                h = remaining;
                reached_end = true;
            }
            if h < H_FLOOR {
                if reached_end && remaining >= 0.0 {
                    // The interval itself is already exhausted.
                    return Ok(AcceptedStep {
                        y_from: self.y,
                        y_to: y_end,
                        h: remaining,
                        state: self.state,
                        reached_end: true,
                    });
                }
                return Err(Error::StepSizeUnderflow { y: self.y, h });
            }

            let (y0, s0, k1) = (self.y, self.state, self.k1);
            let eval = |rhs: &mut F, c: f64, st: State| rhs(y0 + c * h, st);
            let stage = |acc: &[(f64, State)]| {
                let mut st = s0;
                for (w, k) in acc {
                    st[0] += h * w * k[0];
                    st[1] += h * w * k[1];
                }
                st
            };
            let k2 = eval(&mut self.rhs, C2, stage(&[(A21, k1)]));
            let k3 = eval(&mut self.rhs, C3, stage(&[(A31, k1), (A32, k2)]));
            let k4 = eval(&mut self.rhs, C4, stage(&[(A41, k1), (A42, k2), (A43, k3)]));
            let k5 = eval(
                &mut self.rhs,
                C5,
                stage(&[(A51, k1), (A52, k2), (A53, k3), (A54, k4)]),
            );
            let k6 = eval(
                &mut self.rhs,
                1.0,
                stage(&[(A61, k1), (A62, k2), (A63, k3), (A64, k4), (A65, k5)]),
            );
            let s1 = stage(&[(A71, k1), (A73, k3), (A74, k4), (A75, k5), (A76, k6)]);
            let k7 = eval(&mut self.rhs, 1.0, s1);

            // Scaled error norm of the embedded fourth-order difference.
            let mut err_sq = 0.0;
            for i in 0..2 {
                let e = h
                    * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i]
                        + E7 * k7[i]);
                let scale = self.tol + self.tol * s0[i].abs().max(s1[i].abs());
                err_sq += (e / scale) * (e / scale);
            }
            let err = (err_sq / 2.0).sqrt();

            if !err.is_finite() || !(s1[0].is_finite() && s1[1].is_finite()) {
                // A stage left the domain of the right-hand side; retry much
                // smaller without touching the controller memory.
                self.h = h * 0.1;
                self.just_rejected = true;
            } else if err <= 1.0 {
                // Accept: build the dense-output coefficients, then apply the
                // PI controller for the next step size.
                for i in 0..2 {
                    let ydiff = s1[i] - s0[i];
                    let bspl = h * k1[i] - ydiff;
                    self.cont[0][i] = s0[i];
                    self.cont[1][i] = ydiff;
                    self.cont[2][i] = bspl;
                    self.cont[3][i] = ydiff - h * k7[i] - bspl;
                    self.cont[4][i] = h
                        * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i]
                            + D7 * k7[i]);
                }
                self.dense_from = y0;
                self.dense_h = h;
                let fac = (err.powf(EXPO1) / self.err_old.powf(BETA) / SAFETY)
                    .clamp(1.0 / FAC_MAX, 1.0 / FAC_MIN);
                let mut h_next = h / fac;
                if self.just_rejected {
                    h_next = h_next.min(h);
                }
                self.err_old = err.max(1e-4);
                self.just_rejected = false;
                // Land exactly on the endpoint when the step was clamped.
                self.y = if reached_end { y_end } else { y0 + h };
                self.state = s1;
                self.k1 = k7;
                self.h = h_next;
                return Ok(AcceptedStep {
                    y_from: y0,
                    y_to: self.y,
                    h,
                    state: s1,
                    reached_end,
                });
            } else {
                self.h = h / (err.powf(EXPO1) / SAFETY).min(1.0 / FAC_MIN);
                self.just_rejected = true;
            }
            rejects += 1;
            if rejects > MAX_REJECTS {
                return Err(Error::StepLimit { y: self.y });
            }
        }
    }

    /// Dense-output evaluation at fraction `theta` in [0, 1] of the last
    /// accepted step; fourth-order accurate.
    pub(crate) fn dense(&self, theta: f64) -> State {
        let t = theta;
        let mut out = [0.0; 2];
        for i in 0..2 {
            out[i] = self.cont[0][i]
                + t * (self.cont[1][i]
                    + (1.0 - t)
                        * (self.cont[2][i]
                            + t * (self.cont[3][i] + (1.0 - t) * self.cont[4][i])));
        }
        out
    }

    /// Left end of the dense-output interval.
    #[cfg(test)]
    pub(crate) fn dense_from(&self) -> f64 {
        self.dense_from
    }

    /// Width of the dense-output interval.
    #[cfg(test)]
    pub(crate) fn dense_h(&self) -> f64 {
        self.dense_h
    }
}

/// Classical starting-step heuristic: balance the sizes of the state, its
/// derivative, and an Euler estimate of the curvature.
fn initial_step<F: FnMut(f64, State) -> State>(
    rhs: &mut F,
    y0: f64,
    state0: State,
    k1: State,
    tol: f64,
) -> f64 {
    let sc = |v: f64, s: f64| (tol + tol * s.abs(), v);
    let norm = |v: State, reference: State| {
        let mut acc = 0.0;
        for i in 0..2 {
            let (scale, val) = sc(v[i], reference[i]);
            acc += (val / scale) * (val / scale);
        }
        (acc / 2.0).sqrt()
    };
    let d0 = norm(state0, state0);
    let d1 = norm(k1, state0);
    let h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    let euler = [state0[0] + h0 * k1[0], state0[1] + h0 * k1[1]];
    let k2 = rhs(y0 + h0, euler);
    let d2 = norm([k2[0] - k1[0], k2[1] - k1[1]], state0) / h0;
    let d_max = d1.max(d2);
    let h1 = if d_max <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d_max).powf(0.2)
    };
    let h = (100.0 * h0).min(h1);
    if h.is_finite() && h > 0.0 {
        h
    } else {
        1e-6
    }
}
