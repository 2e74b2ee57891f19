//! Separable volumes and hyperareas predicted by the single-term weighting
//! `6086 e3^(53/20)` under each metric.

use sepvol::measures::MetricKind;
use sepvol::weightfit::{boundary_probability, predict, Measure, WeightingForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let form = WeightingForm::single_term();
    println!("W = {}", form.label());
    for metric in MetricKind::ALL {
        for quantity in [Measure::Volume, Measure::Hyperarea] {
            let r = predict(&form, metric, quantity)?;
            let ratio = r.ratio.map_or("-".into(), |x| format!("{x:.6}"));
            println!("{:>14} {:<9}  predicted {:.8e}  ratio {ratio}", metric.name(), quantity.name(), r.predicted);
        }
    }
    println!("kubo-mori boundary probability {:.7}", boundary_probability(&form, MetricKind::KuboMori)?);
    Ok(())
}
