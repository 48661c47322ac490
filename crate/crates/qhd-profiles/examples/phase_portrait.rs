// Overlay the damped orbit on the frictionless homoclinic loop and verify
// the trapping-region picture numerically: the orbit's energy H stays
// nonnegative and grows along the flow, so the wave never escapes the loop.

use qhd_profiles::integrator::{shoot_heteroclinic, ShootOptions};
use qhd_profiles::model::FluidParams;
use qhd_profiles::phase_plane::homoclinic_loop;
use qhd_profiles::rankine_hugoniot::select_admissible_branch;
use qhd_profiles::Result;

fn main() -> Result<()> {
    let gamma = 5.0 / 3.0;
    let params = FluidParams::new(gamma, 0.5, std::f64::consts::SQRT_2)?;
    let shock = select_admissible_branch(1.5, 1.0, 1.0, gamma)?;

    let lp = homoclinic_loop(&shock.constants(), &params, 257)?;
    println!(
        "loop: P* = {:.9}, P_saddle = {:.9}, widest |Q| = {:.9}",
        lp.p_star,
        lp.p_saddle,
        lp.samples
            .iter()
            .map(|s| s.q_upper)
            .fold(0.0_f64, f64::max),
    );

    let profile = shoot_heteroclinic(&shock, &params, &ShootOptions::default())?;
    let points = profile.trajectory().points();
    let monitors = profile
        .trajectory()
        .monitors()
        .expect("shooting records monitors");

    let p_span = points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), pt| {
            (lo.min(pt.p), hi.max(pt.p))
        });
    let q_span = points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), pt| {
            (lo.min(pt.q), hi.max(pt.q))
        });
    println!(
        "orbit: {} samples, P in [{:.9}, {:.9}], Q in [{:.9}, {:.9}]",
        points.len(),
        p_span.0,
        p_span.1,
        q_span.0,
        q_span.1
    );
    println!(
        "containment: P* <= min P ({}) and max |Q| below loop top ({})",
        lp.p_star <= p_span.0,
        q_span.1.max(-q_span.0)
            <= lp.samples.iter().map(|s| s.q_upper).fold(0.0_f64, f64::max),
    );

    let h_min = monitors.energy.iter().cloned().fold(f64::INFINITY, f64::min);
    let growth_violations = monitors
        .energy
        .windows(2)
        .filter(|w| w[1] + 1e-12 < w[0])
        .count();
    println!("energy monitor: min H = {h_min:.3e}, decreases observed = {growth_violations}");

    let v_first = monitors.lyapunov.first().expect("non-empty");
    let v_last = monitors.lyapunov.last().expect("non-empty");
    println!("Lyapunov monitor: V(start) = {v_first:.6e} -> V(end) = {v_last:.6e}");
    Ok(())
}
