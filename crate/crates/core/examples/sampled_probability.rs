//! Separability probabilities of two-qubit states drawn from the
//! Hilbert-Schmidt and Bures measures.
//!
//! Usage: `cargo run --release --example sampled_probability [samples] [seed]`

use sepvol::measures::{separability_probability, MetricKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(Ok(200_000), |s| s.parse::<f64>().map(|x| x as u64))?;
    let seed: u64 = args.next().map_or(Ok(1), |s| s.parse())?;
    for (metric, conjecture) in [(MetricKind::Hs, 0.242379), (MetricKind::Bures, 0.0733389)] {
        let p = separability_probability(metric, 4, n, seed)?;
        println!(
            "{:>6}: {:.6} +- {:.6}  (conjecture {conjecture:.6}, z = {:+.2})",
            metric.name(),
            p.value,
            p.stderr,
            p.z_score(conjecture)
        );
    }
    Ok(())
}
