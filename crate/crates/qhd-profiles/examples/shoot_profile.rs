// Shoot the traveling-wave profile connecting two jump states: leave the
// saddle along its unstable direction, integrate until the orbit settles on
// the attracting rest point, and recover the physical density and velocity
// along the way.

use qhd_profiles::integrator::{profile_fields, shoot_heteroclinic, ShootOptions};
use qhd_profiles::model::FluidParams;
use qhd_profiles::rankine_hugoniot::select_admissible_branch;
use qhd_profiles::Result;

fn main() -> Result<()> {
    let gamma = 5.0 / 3.0;
    let params = FluidParams::new(gamma, 0.5, std::f64::consts::SQRT_2)?;
    let shock = select_admissible_branch(1.5, 1.0, 1.0, gamma)?;

    let opts = ShootOptions::default();
    let profile = shoot_heteroclinic(&shock, &params, &opts)?;

    println!(
        "wave is {} with {} interior extrema",
        profile.classification().as_str(),
        profile.extrema_count(),
    );
    println!(
        "converged = {} (terminal distance {:.3e} after {} accepted steps)",
        profile.converged(),
        profile.terminal_error(),
        profile.trajectory().accepted_step_sizes().len(),
    );

    let fields = profile_fields(&profile)?;
    let first = fields.first().expect("profile has samples");
    let last = fields.last().expect("profile has samples");
    println!(
        "start: y = {:>9.4}, rho = {:.9}, u = {:+.9}",
        first.y, first.rho, first.u
    );
    println!(
        "end:   y = {:>9.4}, rho = {:.9}, u = {:+.9}",
        last.y, last.rho, last.u
    );
    println!(
        "targets:            rho = {:.9}, u = {:+.9}",
        shock.right().rho(),
        shock.right().u()
    );
    println!();

    // A coarse picture of the oscillatory tail: every 400th sample.
    println!("{:>10} {:>12} {:>12} {:>12}", "y", "P", "rho", "u");
    for row in fields.iter().step_by(400) {
        println!(
            "{:>10.4} {:>12.8} {:>12.8} {:>12.8}",
            row.y, row.p, row.rho, row.u
        );
    }
    Ok(())
}
