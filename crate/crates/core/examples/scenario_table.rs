//! Restricted real two-qubit scenarios: enumeration, classification and
//! Monte Carlo volumes against their stated closed forms.
//!
//! Usage: `cargo run --release --example scenario_table [dimension] [samples]`

use sepvol::scenarios::{enumerate_scenarios, evaluate_scenario, Classification};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dim: usize = args.next().map_or(Ok(4), |s| s.parse())?;
    let n: u64 = args.next().map_or(Ok(100_000), |s| s.parse::<f64>().map(|x| x as u64))?;
    let entries = enumerate_scenarios(dim)?;
    let trivial = entries.iter().filter(|e| e.classification == Classification::TrivialProbOne).count();
    println!("{} scenarios of dimension {dim}, {trivial} with B = D", entries.len());
    for e in &entries {
        let r = evaluate_scenario(&e.spec, n, 1)?;
        let target = |t: &Option<sepvol::scenarios::Target>| t.as_ref().map_or("-".to_string(), |t| t.symbolic.clone());
        println!(
            "zero {:<16} total {:.5e} ({:>12})  separable {:.5e}  probability {:.4} ({})",
            e.zeroed_labels.join(","),
            r.total.value,
            target(&e.expected.total),
            r.separable.value,
            r.probability.value,
            target(&e.expected.probability),
        );
    }
    Ok(())
}
