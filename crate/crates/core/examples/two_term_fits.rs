//! Two-term weightings `a e2^m1 + b e3^m2` fitted to the HS separable
//! volume and hyperarea, and what they predict for the other metrics.

use sepvol::measures::MetricKind;
use sepvol::weightfit::{fit_two_term, predict, Measure, Targets};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m1, m2) in [(3, 3), (4, 3), (2, 2), (3, 4)] {
        let fit = fit_two_term(m1, m2, Targets::hs_two_qubit())?;
        println!("m1 = {m1}, m2 = {m2}: a = {:.6}  b = {:.4}  b/a = {:.4}", fit.a, fit.b, fit.b / fit.a);
        if fit.has_negative_coefficient() {
            println!("    negative coefficient, not a valid weighting");
            continue;
        }
        for metric in MetricKind::MONOTONE {
            let v = predict(&fit.form(), metric, Measure::Volume)?;
            let h = predict(&fit.form(), metric, Measure::Hyperarea)?;
            println!("    {:>14}  volume ratio {:>9}  hyperarea ratio {:>9}", metric.name(), fmt(v.ratio), fmt(h.ratio));
        }
    }
    Ok(())
}

fn fmt(x: Option<f64>) -> String {
    x.map_or("-".into(), |x| format!("{x:.5}"))
}
