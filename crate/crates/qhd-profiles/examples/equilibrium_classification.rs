// Classify the two rest points of the wave equation for a family of
// viscosities: eigenvalues, local type (saddle / stable node / stable
// focus), and the resulting monotone-versus-oscillatory verdict for the
// whole profile.

use qhd_profiles::model::FluidParams;
use qhd_profiles::phase_plane::{classify_monotonicity, equilibrium_report};
use qhd_profiles::rankine_hugoniot::{check_profile_hypotheses, select_admissible_branch};
use qhd_profiles::Result;

fn main() -> Result<()> {
    let gamma = 5.0 / 3.0;
    let k = std::f64::consts::SQRT_2;
    let s = 1.0;
    let (rho_minus, rho_plus) = (1.5, 1.0);

    let shock = select_admissible_branch(rho_minus, rho_plus, s, gamma)?;
    let hypotheses = check_profile_hypotheses(&shock)?;
    println!(
        "shock: P- = {:.12}, P+ = {:.12}, {}, attracting state {}",
        shock.p_minus(),
        shock.p_plus(),
        hypotheses.direction.as_str(),
        hypotheses.attracting_sonicity.as_str(),
    );
    println!(
        "profile hypotheses sufficient: {}",
        hypotheses.sufficient_condition()
    );
    println!();

    for mu in [4.0, 1.0, 0.5, 0.25] {
        let params = FluidParams::new(gamma, mu, k)?;
        let verdict = classify_monotonicity(&shock, &params)?;
        println!("mu = {mu:<5} wave is {}", verdict.as_str());
        let c = shock.constants();
        for p_eq in [shock.p_plus(), shock.p_minus()] {
            let report = equilibrium_report(p_eq, &c, &params)?;
            let (l1, l2) = report.eigenvalues;
            println!(
                "  P = {:.12}: {:<12} lambda = {:+.6}{:+.6}i, {:+.6}{:+.6}i",
                report.p_eq,
                report.kind.as_str(),
                l1.re,
                l1.im,
                l2.re,
                l2.im,
            );
            if let Some(v) = report.unstable_eigvec {
                println!("    unstable direction ({:+.6}, {:+.6})", v[0], v[1]);
            }
        }
    }
    Ok(())
}
