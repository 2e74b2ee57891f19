//! Monte Carlo integration with reproducible streams: the same seed gives
//! the same estimate regardless of thread count, and independent runs merge.

use sepvol::integrate::{mc_integrate, merge, Region};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // volume of the unit 4-ball by rejection on [-1, 1]^4: pi^2/2
    let ball = |x: &[f64]| if x.iter().map(|v| v * v).sum::<f64>() <= 1.0 { 1.0 } else { 0.0 };
    let cube = Region::Box { lo: vec![-1.0; 4], hi: vec![1.0; 4] };
    let runs = (0..4).map(|seed| mc_integrate(ball, &cube, 250_000, seed)).collect::<Result<Vec<_>, _>>()?;
    for r in &runs {
        println!("seed {}: {:.5} +- {:.5}", r.seed, r.value, r.stderr);
    }
    let m = merge(&runs)?;
    let exact = std::f64::consts::PI.powi(2) / 2.0;
    println!("merged: {:.5} +- {:.5}  exact {exact:.5}  z {:+.2}", m.value, m.stderr, m.z_score(exact));

    // simplex region: integral of x1 x2 over the 2-simplex is 1/24
    let s = mc_integrate(|x| x[0] * x[1], &Region::Simplex { dim: 2 }, 1_000_000, 9)?;
    println!("simplex moment {:.6} +- {:.6}  exact {:.6}", s.value, s.stderr, 1.0 / 24.0);
    Ok(())
}
