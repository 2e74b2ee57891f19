//! The Peres-Horodecki test on Werner states and on random states of both
//! supported splits.

use sepvol::density::{is_separable, partial_transpose, Bipartition, DensityMatrix, hermitian_eigenvalues};
use sepvol::measures::{sample_state, MetricKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Werner states p |Phi+><Phi+| + (1-p) I/4 are separable exactly for p <= 1/3
    for p in [0.0, 0.2, 1.0 / 3.0, 0.34, 0.6, 1.0] {
        let w = DensityMatrix::werner(p)?;
        let min = hermitian_eigenvalues(&partial_transpose(&w, Bipartition::QUBIT_QUBIT)?)[0];
        println!("werner p = {p:.4}  min PT eigenvalue {min:+.6}  separable {}", is_separable(&w, Bipartition::QUBIT_QUBIT)?);
    }
    for (dim, parts) in [(4, Bipartition::QUBIT_QUBIT), (6, Bipartition::QUBIT_QUTRIT)] {
        for seed in 0..3 {
            let rho = sample_state(MetricKind::Hs, dim, seed)?;
            println!("HS state dim {dim} seed {seed}: separable {}", is_separable(&rho, parts)?);
        }
    }
    Ok(())
}
