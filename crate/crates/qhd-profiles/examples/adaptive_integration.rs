// Drive the adaptive Runge-Kutta core directly on the frictionless wave
// equation P'' = f(P)/k^2. Orbits of this system conserve the energy
// H(P, Q) = F(P) - Q^2/2 - F(P_saddle), so the drift in H measures the
// integrator's true accuracy, independent of any shooting logic.

use qhd_profiles::integrator::integrate;
use qhd_profiles::model::{f_eval, potential_f, FluidParams, ProfileConstants};
use qhd_profiles::phase_plane::find_equilibria;
use qhd_profiles::Result;

fn main() -> Result<()> {
    let c = ProfileConstants::new(1.0, -3.1, 1.0)?;
    let params = FluidParams::new(1.5, 0.3, 1.0)?;
    let k2 = params.k() * params.k();

    let (_, p_saddle) = find_equilibria(&c, &params, None)?;
    let f_saddle = potential_f(p_saddle, &c, &params)?;
    let energy = |p: f64, q: f64| -> Result<f64> {
        Ok(potential_f(p, &c, &params)? - q * q / 2.0 - f_saddle)
    };

    // Start inside the homoclinic loop with a transverse kick; without
    // friction the orbit circles the attracting rest point forever.
    let start = [0.9, 0.1];
    let h0 = energy(start[0], start[1])?;

    for tol in [1e-6, 1e-9, 1e-12] {
        let rhs = |_y: f64, state: [f64; 2]| {
            [
                state[1],
                f_eval(state[0], &c, params.gamma()).unwrap_or(f64::NAN) / k2,
            ]
        };
        let trajectory = integrate(rhs, 0.0, start, 50.0, tol)?;
        let mut max_drift = 0.0_f64;
        for pt in trajectory.points() {
            max_drift = max_drift.max((energy(pt.p, pt.q)? - h0).abs());
        }
        let steps = trajectory.accepted_step_sizes();
        let h_min = steps.iter().cloned().fold(f64::INFINITY, f64::min);
        let h_max = steps.iter().cloned().fold(0.0_f64, f64::max);
        println!(
            "tol = {tol:>7.0e}: {:>5} accepted steps, h in [{:.3e}, {:.3e}], max |H - H0| = {:.3e}",
            steps.len(),
            h_min,
            h_max,
            max_drift,
        );
    }
    Ok(())
}
