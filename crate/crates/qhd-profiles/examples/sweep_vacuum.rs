// Push the downstream density toward vacuum at fixed viscosity and track
// the jump velocities, the limiting oscillation frequency sqrt(-f'(P+)),
// and the moment the attracting state turns supersonic.

use qhd_profiles::experiments::{sweep_vacuum, SweepBase, SweepRowOutcome, SweepSpec, SweepVariable};
use qhd_profiles::integrator::ShootOptions;
use qhd_profiles::Result;

fn main() -> Result<()> {
    let base = SweepBase {
        gamma: 1.5,
        k: std::f64::consts::SQRT_2,
        s: 1.0,
        rho_minus: 0.5,
    };
    let spec = SweepSpec::new(
        base,
        SweepVariable::RhoPlus {
            values: vec![0.4, 0.3, 0.2, 0.1, 0.05],
            mu: 1.2,
        },
        ShootOptions::default(),
    )?;

    let outcome = sweep_vacuum(&spec)?;
    println!(
        "{:>8} {:>12} {:>12} {:>14} {:>10} {:>12} {:>8}",
        "rho+", "u-", "u+", "sqrt(-f')", "c_s(rho+)", "sonicity", "extrema"
    );
    for row in outcome.report.rows() {
        match row {
            SweepRowOutcome::Analyzed(r) => println!(
                "{:>8} {:>12.8} {:>12.8} {:>14.8} {:>10.6} {:>12} {:>8}",
                r.rho_plus,
                r.u_minus,
                r.u_plus,
                r.sqrt_neg_fprime,
                r.sound_speed_attracting,
                r.attracting_sonicity.as_str(),
                r.extrema_count
                    .map(|n| n.to_string())
                    .unwrap_or_else(|| "-".to_string()),
            ),
            SweepRowOutcome::Rejected {
                rho_plus, reason, ..
            } => println!("{rho_plus:>8} rejected: {reason}"),
        }
    }
    Ok(())
}
