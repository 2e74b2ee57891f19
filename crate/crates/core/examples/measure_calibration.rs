//! Total volumes of the two-qubit state space from eigenvalue quadrature,
//! against their closed forms.

use sepvol::integrate::{quad_simplex_detailed, QuadratureSpec};
use sepvol::measures::{constants, density_unchecked, haar_total, orbit_volume, MetricKind, Quantity, System};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Haar integral          {:.12e}", haar_total());
    println!("orbit volume (n = 4)   {:.12e}", orbit_volume(4));

    let spec = QuadratureSpec::new(3, 1e-11);
    for metric in MetricKind::ALL {
        let q = quad_simplex_detailed(|l| density_unchecked(metric, l), &spec)?;
        let total = orbit_volume(4) * q.value;
        let known = constants(metric, System::TwoQubit, Quantity::TotalVolume).ok().map(|c| c.value);
        match known {
            Some(k) => println!("{metric:>14}  total {total:.12e}  closed form {k:.12e}  ratio {:.10}", total / k),
            None => println!("{metric:>14}  total {total:.12e}  ({} nodes/axis)", q.nodes),
        }
    }
    Ok(())
}
