// Solve the jump conditions for a density pair and wave speed: print both
// velocity branches, their Lax families, the admissible selection, and the
// sonicity of each end state.

use qhd_profiles::rankine_hugoniot::{
    characteristic_speeds, lax_classify, rh_residuals, rh_velocity_branches,
    select_admissible_branch, sonic_classify, BranchVelocities, EndState,
};
use qhd_profiles::Result;

fn main() -> Result<()> {
    let gamma = 5.0 / 3.0;
    let s = 1.0;
    let (rho_minus, rho_plus) = (1.5, 1.0);

    println!("end states: rho- = {rho_minus}, rho+ = {rho_plus}, s = {s}, gamma = {gamma:.6}");

    let branches = rh_velocity_branches(rho_minus, rho_plus, s, gamma)?;
    println!("velocity offset d = {:.12}", branches.d);

    let describe = |name: &str, b: &BranchVelocities| -> Result<()> {
        let left = EndState::new(rho_minus, b.u_minus)?;
        let right = EndState::new(rho_plus, b.u_plus)?;
        let family = lax_classify(&left, &right, s, gamma)?
            .map(|f| f.as_str())
            .unwrap_or("not a Lax shock");
        println!(
            "{name:>5} branch: u- = {:+.12}  u+ = {:+.12}  ({family})",
            b.u_minus, b.u_plus
        );
        Ok(())
    };
    describe("plus", &branches.plus_branch)?;
    describe("minus", &branches.minus_branch)?;

    let shock = select_admissible_branch(rho_minus, rho_plus, s, gamma)?;
    println!(
        "selected: {} with A = {:.12}, B = {:.12}",
        shock.family().as_str(),
        shock.constants().mass_flux(),
        shock.constants().bernoulli(),
    );

    let residuals = rh_residuals(&shock.left(), &shock.right(), s, gamma)?;
    println!("jump residuals: mass {:.3e}, momentum {:.3e}", residuals.0, residuals.1);

    for (label, state) in [("left ", shock.left()), ("right", shock.right())] {
        let (lam1, lam2) = characteristic_speeds(&state, gamma)?;
        println!(
            "{label} state: rho = {:.6}, u = {:+.12}, lambda = ({:+.6}, {:+.6}), {}",
            state.rho(),
            state.u(),
            lam1,
            lam2,
            sonic_classify(&state, gamma)?.as_str(),
        );
    }
    Ok(())
}
