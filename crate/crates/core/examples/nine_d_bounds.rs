//! The nine-dimensional real two-qubit body: its volume by two sampling
//! routes and the bound from a single 2x2 partial-transpose minor.

use sepvol::scenarios::{evaluate_scenario, nine_d_volume_cad, ConstraintLevel, ScenarioSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 1_000_000;
    let target = std::f64::consts::PI.powi(4) / 60480.0;
    let cad = nine_d_volume_cad(n, 3)?;
    println!("volume, nested limits   {:.6e} +- {:.1e}  (pi^4/60480 = {target:.6e})", cad.value, cad.stderr);
    let r = evaluate_scenario(&ScenarioSpec::full_real(ConstraintLevel::OnePt2x2Minor), n, 5)?;
    println!("volume, implicit        {:.6e} +- {:.1e}", r.total.value, r.total.stderr);
    println!("2x2-minor bound         {:.6e} +- {:.1e}", r.separable.value, r.separable.stderr);
    println!("bound probability       {:.5} +- {:.5}", r.probability.value, r.probability.stderr);
    Ok(())
}
