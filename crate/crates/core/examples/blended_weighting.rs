//! A convex combination of the two two-term fits and its worst deviation
//! from the conjectured ratios over the five indicators.

use sepvol::measures::MetricKind;
use sepvol::weightfit::{blend, fit_two_term, predict, Measure, Targets};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f33 = fit_two_term(3, 3, Targets::hs_two_qubit())?.form();
    let f43 = fit_two_term(4, 3, Targets::hs_two_qubit())?.form();
    let w = blend(vec![(f33, 0.570347), (f43, 0.429653)])?;
    let indicators = [
        (MetricKind::Bures, Measure::Volume),
        (MetricKind::KuboMori, Measure::Volume),
        (MetricKind::AvgMonotone, Measure::Volume),
        (MetricKind::WignerYanase, Measure::Volume),
        (MetricKind::Bures, Measure::Hyperarea),
    ];
    let mut worst: f64 = 0.0;
    for (metric, quantity) in indicators {
        let ratio = predict(&w, metric, quantity)?.ratio.expect("indicator has a conjecture");
        println!("{:>14} {:<9} ratio {ratio:.6}", metric.name(), quantity.name());
        worst = worst.max((ratio - 1.0).abs());
    }
    println!("worst deviation {:.3}%", 100.0 * worst);
    Ok(())
}
