//! The qubit-qutrit weighting `c e5^(9/5)`: fit of `c` to the HS separable
//! volume and the resulting predictions.

use sepvol::measures::MetricKind;
use sepvol::weightfit::{fit_qutrit, predict, Measure, Targets};
use sepvol::measures::System;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fit = fit_qutrit(Targets::hs(System::QubitQutrit).volume)?;
    println!("c = {:.1}", fit.c);
    for (metric, quantity) in [
        (MetricKind::Hs, Measure::Hyperarea),
        (MetricKind::Bures, Measure::Volume),
        (MetricKind::Bures, Measure::Hyperarea),
    ] {
        let r = predict(&fit.form(), metric, quantity)?;
        println!("{:>6} {:<9} predicted {:.6e}  ratio {:.6}", metric.name(), quantity.name(), r.predicted, r.ratio.unwrap_or(f64::NAN));
    }
    Ok(())
}
