//! A real two-qubit state built from Bloore coordinates, with the
//! determinant factors of the state and of its partial transpose.

use sepvol::bloore::{
    bloore_compose, factor_b, factor_d, is_feasible, is_separable_restricted, pt_difference, RestrictedDiag, ZValues,
};
use sepvol::density::{hermitian_eigenvalues, partial_transpose_matrix, Bipartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = ZValues::new(0.3, -0.2, 0.5, 0.1, 0.4, -0.3);
    let diag = RestrictedDiag::new(0.2)?;
    let coords = diag.coords(z)?;
    let rho = bloore_compose(&coords);

    println!("B = {:.12}", factor_b(&z));
    println!("D = {:.12}", factor_d(&z));
    println!("D - B = {:.12}  cubic = {:.12}", factor_d(&z) - factor_b(&z), pt_difference(&z));
    println!("det rho    = {:.12e}  A B = {:.12e}", rho.determinant(), coords.diag_product() * factor_b(&z));

    let pt = partial_transpose_matrix(rho.entries(), Bipartition::QUBIT_QUBIT)?;
    let det_pt = pt.clone().determinant().re;
    println!("det rho_PT = {:.12e}  prefactor D = {:.12e}", det_pt, diag.pt_prefactor() * factor_d(&z));
    println!("eigenvalues of rho    {:?}", rho.eigenvalues());
    println!("eigenvalues of rho_PT {:?}", hermitian_eigenvalues(&pt));
    println!("feasible {}  separable {}", is_feasible(&coords), is_separable_restricted(&z));
    Ok(())
}
