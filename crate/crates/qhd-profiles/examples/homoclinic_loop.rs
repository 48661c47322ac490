// Sample the frictionless homoclinic loop that bounds every orbit of the
// damped system, together with the landmarks of the potential: the saddle,
// the attracting rest point, the inflection P0, and the far turning point
// P* where the loop closes.

use qhd_profiles::model::{potential_f, FluidParams, ProfileConstants};
use qhd_profiles::phase_plane::{find_equilibria, find_inflection_p0, find_p_star, homoclinic_loop};
use qhd_profiles::Result;

fn main() -> Result<()> {
    // Same constants as the reference phase portrait: A = 1, B = -3.1,
    // s = 1, gamma = 3/2, k = 1.
    let c = ProfileConstants::new(1.0, -3.1, 1.0)?;
    let params = FluidParams::new(1.5, 0.3, 1.0)?;

    let (p_plus, p_minus) = find_equilibria(&c, &params, None)?;
    let p0 = find_inflection_p0(&c, &params, p_plus, p_minus)?;
    let p_star = find_p_star(&c, &params, p_plus, p_minus)?;
    println!("attracting P+ = {p_plus:.12}");
    println!("inflection P0 = {p0:.12}");
    println!("turning    P* = {p_star:.12}");
    println!("saddle     P- = {p_minus:.12}");

    let gap = potential_f(p_plus, &c, &params)? - potential_f(p_minus, &c, &params)?;
    println!("potential gap F(P+) - F(P-) = {gap:.12e}");
    println!();

    let lp = homoclinic_loop(&c, &params, 17)?;
    println!("{:>14} {:>14} {:>14}", "P", "Q_upper", "Q_lower");
    for sample in &lp.samples {
        println!(
            "{:>14.9} {:>14.9} {:>14.9}",
            sample.p, sample.q_upper, sample.q_lower
        );
    }
    Ok(())
}
