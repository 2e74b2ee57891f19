//! Majorization behaviour of candidate weightings, and how much they vary
//! over the ball of eigenvalue vectors that are separable on every orbit.

use sepvol::weightfit::{fit_two_term, flat_core_diagnostic, schur_classify, Targets, WeightingForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let forms = [
        WeightingForm::single_term(),
        fit_two_term(3, 3, Targets::hs_two_qubit())?.form(),
        fit_two_term(4, 3, Targets::hs_two_qubit())?.form(),
    ];
    for f in &forms {
        let s = schur_classify(f, 20_000, 1);
        let c = flat_core_diagnostic(f, 20_000, 1);
        println!("{}", f.label());
        println!("    {:?}: {} increasing, {} decreasing steps", s.class, s.increasing, s.decreasing);
        println!("    on the separable ball W ranges {:.4e}..{:.4e} (relative spread {:.3})", c.min, c.max, c.relative_variation);
    }
    Ok(())
}
