//! Density matrices, the partial transpose and the PPT separability test.

use nalgebra::{Complex, DMatrix};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Eigenvalue-nonnegativity tolerance, relative to the matrix 1-norm.
pub const TOL_PSD: f64 = 1e-10;

const TOL_HERMITIAN: f64 = 1e-10;
const TOL_TRACE: f64 = 1e-10;

pub type CMatrix = DMatrix<Complex<f64>>;

/// A Hermitian, unit-trace matrix of dimension 4 (two qubits) or 6 (qubit-qutrit).
///
/// Positivity is not enforced on construction: matrices composed from
/// infeasible Bloore coordinates are representable so they can be tested.
/// Use [`DensityMatrix::is_positive`] for the PSD check.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: CMatrix,
}

/// Bipartition of the underlying Hilbert space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub d_a: usize,
    pub d_b: usize,
}

impl Bipartition {
    pub const QUBIT_QUBIT: Self = Self { d_a: 2, d_b: 2 };
    pub const QUBIT_QUTRIT: Self = Self { d_a: 2, d_b: 3 };

    pub fn dim(&self) -> usize {
        self.d_a * self.d_b
    }

    /// PPT is necessary and sufficient for separability only for 2x2 and 2x3.
    pub fn ppt_is_exact(&self) -> bool {
        matches!((self.d_a, self.d_b), (2, 2) | (2, 3) | (3, 2))
    }

    /// The standard split for a supported total dimension.
    pub fn for_dim(dim: usize) -> Result<Self> {
        match dim {
            4 => Ok(Self::QUBIT_QUBIT),
            6 => Ok(Self::QUBIT_QUTRIT),
            _ => Err(Error::InvalidInput(format!("no standard bipartition for dimension {dim}"))),
        }
    }
}

impl DensityMatrix {
    pub fn new(entries: CMatrix) -> Result<Self> {
        let n = entries.nrows();
        if n != entries.ncols() {
            return Err(Error::InvalidInput(format!(
                "matrix is {}x{}, expected square",
                n,
                entries.ncols()
            )));
        }
        if n != 4 && n != 6 {
            return Err(Error::InvalidInput(format!("dimension {n} is not 4 or 6")));
        }
        let scale = one_norm(&entries).max(1.0);
        for i in 0..n {
            for j in i..n {
                let d = entries[(i, j)] - entries[(j, i)].conj();
                if d.norm() > TOL_HERMITIAN * scale {
                    return Err(Error::InvalidInput(format!("matrix is not Hermitian at ({i},{j})")));
                }
            }
        }
        let tr: f64 = (0..n).map(|i| entries[(i, i)].re).sum();
        if (tr - 1.0).abs() > TOL_TRACE {
            return Err(Error::InvalidInput(format!("trace is {tr}, expected 1")));
        }
        Ok(Self { entries })
    }

    /// Builds from a real symmetric matrix given row-major.
    pub fn from_real(dim: usize, values: &[f64]) -> Result<Self> {
        if values.len() != dim * dim {
            return Err(Error::InvalidInput(format!(
                "{} values for a {dim}x{dim} matrix",
                values.len()
            )));
        }
        Self::new(CMatrix::from_fn(dim, dim, |i, j| Complex::new(values[i * dim + j], 0.0)))
    }

    /// `(1/n) I`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(CMatrix::identity(dim, dim).map(|z| z / dim as f64))
    }

    /// Projector onto a (not necessarily normalized) vector.
    pub fn pure(psi: &[Complex<f64>]) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if norm2 <= 0.0 {
            return Err(Error::InvalidInput("zero state vector".into()));
        }
        let n = psi.len();
        Self::new(CMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj() / norm2))
    }

    /// The Bell projector onto `(|00> + |11>)/sqrt 2`.
    pub fn bell_phi_plus() -> Self {
        let s = Complex::new(1.0, 0.0);
        let z = Complex::new(0.0, 0.0);
        Self::pure(&[s, z, z, s]).expect("valid Bell state")
    }

    /// Werner state `p |Phi+><Phi+| + (1-p) I/4`.
    pub fn werner(p: f64) -> Result<Self> {
        let bell = Self::bell_phi_plus();
        let id = CMatrix::identity(4, 4).map(|z| z / 4.0);
        Self::new(bell.entries.map(|z| z * p) + id.map(|z| z * (1.0 - p)))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> CMatrix {
        self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.entries[(i, i)].re).sum()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.entries)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    pub fn is_positive(&self) -> bool {
        is_psd(&self.entries)
    }

    pub fn partial_transpose(&self, parts: Bipartition) -> Result<CMatrix> {
        partial_transpose(self, parts)
    }

    /// Real determinant through the eigenvalues.
    pub fn determinant(&self) -> f64 {
        self.eigenvalues().iter().product()
    }
}

/// Maximum absolute column sum.
pub fn one_norm(m: &CMatrix) -> f64 {
    (0..m.ncols())
        .map(|j| (0..m.nrows()).map(|i| m[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut ev: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Minimum eigenvalue at or above `-TOL_PSD * ||m||_1`.
pub fn is_psd(m: &CMatrix) -> bool {
    let tol = TOL_PSD * one_norm(m).max(f64::MIN_POSITIVE);
    hermitian_eigenvalues(m)[0] >= -tol
}

/// Transposes the second-subsystem indices of an arbitrary `dA*dB` matrix.
pub fn partial_transpose_matrix(m: &CMatrix, parts: Bipartition) -> Result<CMatrix> {
    let n = m.nrows();
    if n != m.ncols() || n != parts.dim() {
        return Err(Error::DimensionMismatch { dim: n, d_a: parts.d_a, d_b: parts.d_b });
    }
    let db = parts.d_b;
    Ok(CMatrix::from_fn(n, n, |r, c| {
        let (a, b) = (r / db, r % db);
        let (a2, b2) = (c / db, c % db);
        m[(a * db + b2, a2 * db + b)]
    }))
}

pub fn partial_transpose(rho: &DensityMatrix, parts: Bipartition) -> Result<CMatrix> {
    if !matches!((parts.d_a, parts.d_b), (2, 2) | (2, 3)) {
        return Err(Error::Unsupported(format!(
            "partial transpose for a {}x{} split",
            parts.d_a, parts.d_b
        )));
    }
    partial_transpose_matrix(rho.entries(), parts)
}

/// Peres-Horodecki test: every eigenvalue of the partial transpose is at or
/// above `-TOL_PSD` (relative to its 1-norm).
pub fn is_separable(rho: &DensityMatrix, parts: Bipartition) -> Result<bool> {
    if !parts.ppt_is_exact() {
        return Err(Error::Unsupported("PPT is not sufficient for this split".into()));
    }
    Ok(is_psd(&partial_transpose(rho, parts)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximally_mixed_is_fixed_by_partial_transpose() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        let pt = rho.partial_transpose(Bipartition::QUBIT_QUBIT).unwrap();
        assert_eq!(&pt, rho.entries());
        assert!(is_separable(&rho, Bipartition::QUBIT_QUBIT).unwrap());
    }

    #[test]
    fn bell_state_is_entangled() {
        let bell = DensityMatrix::bell_phi_plus();
        let pt = bell.partial_transpose(Bipartition::QUBIT_QUBIT).unwrap();
        let ev = hermitian_eigenvalues(&pt);
        assert!((ev[0] + 0.5).abs() < 1e-12);
        assert!(!is_separable(&bell, Bipartition::QUBIT_QUBIT).unwrap());
    }

    #[test]
    fn werner_boundary_at_one_third() {
        // Eigenvalues of the PT of a Werner state are (1+p)/4 (x3) and (1-3p)/4.
        let rho = DensityMatrix::werner(1.0 / 3.0).unwrap();
        let pt = rho.partial_transpose(Bipartition::QUBIT_QUBIT).unwrap();
        let ev = hermitian_eigenvalues(&pt);
        let det: f64 = ev.iter().product();
        assert!(det.abs() < 1e-14, "det {det}");
        assert!(is_separable(&DensityMatrix::werner(0.3).unwrap(), Bipartition::QUBIT_QUBIT).unwrap());
        assert!(!is_separable(&DensityMatrix::werner(0.36).unwrap(), Bipartition::QUBIT_QUBIT).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        assert!(matches!(
            rho.partial_transpose(Bipartition::QUBIT_QUTRIT),
            Err(Error::DimensionMismatch { dim: 4, .. })
        ));
    }

    #[test]
    fn rejects_bad_trace_and_non_hermitian() {
        let mut m = CMatrix::identity(4, 4);
        assert!(DensityMatrix::new(m.clone()).is_err());
        m = m.map(|z| z / 4.0);
        m[(0, 1)] = Complex::new(0.1, 0.0);
        assert!(DensityMatrix::new(m).is_err());
        assert!(DensityMatrix::maximally_mixed(5).is_err());
    }

    #[test]
    fn qubit_qutrit_transpose_moves_blocks() {
        let mut m = CMatrix::zeros(6, 6);
        // |0,0><0,1| becomes |0,1><0,0| under the transpose on B.
        m[(0, 1)] = Complex::new(1.0, 0.0);
        let pt = partial_transpose_matrix(&m, Bipartition::QUBIT_QUTRIT).unwrap();
        assert_eq!(pt[(1, 0)], Complex::new(1.0, 0.0));
        assert_eq!(pt[(0, 1)], Complex::new(0.0, 0.0));
    }
}
