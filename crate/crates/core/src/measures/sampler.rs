//! Random density matrices distributed by the Hilbert-Schmidt or Bures measure.
//!
//! Hilbert-Schmidt: `rho = G G^+ / tr(G G^+)` with `G` square complex Ginibre.
//! Bures: `rho ∝ (1 + U) G G^+ (1 + U)^+` with `U` Haar-random unitary.

use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::MetricKind;
use crate::density::{is_separable, Bipartition, CMatrix, DensityMatrix};
use crate::error::{Error, Result};
use crate::integrate::{mc_paired, Estimate};

fn check(metric: MetricKind, dim: usize) -> Result<()> {
    if dim != 4 && dim != 6 {
        return Err(Error::InvalidInput(format!("dimension {dim} is not 4 or 6")));
    }
    if !matches!(metric, MetricKind::Hs | MetricKind::Bures) {
        return Err(Error::Unsupported(format!("no sampler for the {metric} measure")));
    }
    Ok(())
}

fn ginibre<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CMatrix {
    DMatrix::from_fn(dim, dim, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex::new(re, im)
    })
}

/// Haar-random unitary from the QR decomposition of a Ginibre matrix, with
/// the phases of `R`'s diagonal divided out.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CMatrix {
    let qr = ginibre(rng, dim).qr();
    let (mut q, r) = qr.unpack();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

fn normalize(m: CMatrix) -> CMatrix {
    let tr: f64 = (0..m.nrows()).map(|i| m[(i, i)].re).sum();
    let mut out = m.map(|z| z / tr);
    // Symmetrize away rounding so the Hermiticity check is exact.
    for i in 0..out.nrows() {
        out[(i, i)].im = 0.0;
        for j in i + 1..out.ncols() {
            let avg = (out[(i, j)] + out[(j, i)].conj()) * 0.5;
            out[(i, j)] = avg;
            out[(j, i)] = avg.conj();
        }
    }
    out
}

/// Trace-normalized sample as a raw matrix, drawing from `rng`.
pub fn sample_matrix<R: Rng + ?Sized>(rng: &mut R, metric: MetricKind, dim: usize) -> CMatrix {
    let g = ginibre(rng, dim);
    let a = match metric {
        MetricKind::Bures => {
            let mut u = haar_unitary(rng, dim);
            for i in 0..dim {
                u[(i, i)] += Complex::new(1.0, 0.0);
            }
            u * g
        }
        _ => g,
    };
    normalize(&a * a.adjoint())
}

/// Reproducible stream of random states.
#[derive(Debug, Clone)]
pub struct StateSampler {
    metric: MetricKind,
    dim: usize,
    rng: ChaCha8Rng,
}

impl StateSampler {
    pub fn new(metric: MetricKind, dim: usize, seed: u64) -> Result<Self> {
        check(metric, dim)?;
        Ok(Self { metric, dim, rng: ChaCha8Rng::seed_from_u64(seed) })
    }

    pub fn from_rng(metric: MetricKind, dim: usize, rng: ChaCha8Rng) -> Result<Self> {
        check(metric, dim)?;
        Ok(Self { metric, dim, rng })
    }

    pub fn next_state(&mut self) -> DensityMatrix {
        DensityMatrix::new(sample_matrix(&mut self.rng, self.metric, self.dim)).expect("sampled matrix is a state")
    }
}

impl Iterator for StateSampler {
    type Item = DensityMatrix;

    fn next(&mut self) -> Option<DensityMatrix> {
        Some(self.next_state())
    }
}

/// First state of the stream seeded by `seed`.
pub fn sample_state(metric: MetricKind, dim: usize, seed: u64) -> Result<DensityMatrix> {
    Ok(StateSampler::new(metric, dim, seed)?.next_state())
}

/// Fraction of PPT states among `n` draws of the `metric` measure.
pub fn separability_probability(metric: MetricKind, dim: usize, n: u64, seed: u64) -> Result<Estimate> {
    check(metric, dim)?;
    let parts = Bipartition::for_dim(dim)?;
    let acc = mc_paired(n, seed, |rng| {
        let rho = DensityMatrix::new(sample_matrix(rng, metric, dim))?;
        Ok((if is_separable(&rho, parts)? { 1.0 } else { 0.0 }, 0.0))
    })?;
    Ok(acc.x.estimate(1.0, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unsupported_metric_is_rejected() {
        assert!(matches!(sample_state(MetricKind::KuboMori, 4, 1), Err(Error::Unsupported(_))));
        assert!(sample_state(MetricKind::Hs, 5, 1).is_err());
    }

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<_> = StateSampler::new(MetricKind::Bures, 4, 9).unwrap().take(5).collect();
        let b: Vec<_> = StateSampler::new(MetricKind::Bures, 4, 9).unwrap().take(5).collect();
        assert_eq!(a, b);
        let c = sample_state(MetricKind::Bures, 4, 10).unwrap();
        assert_ne!(a[0], c);
    }

    #[test]
    fn samples_are_states() {
        for metric in [MetricKind::Hs, MetricKind::Bures] {
            for dim in [4, 6] {
                let mut s = StateSampler::new(metric, dim, 3).unwrap();
                for _ in 0..20 {
                    let rho = s.next_state();
                    assert!((rho.trace() - 1.0).abs() < 1e-12);
                    assert!(rho.min_eigenvalue() > -1e-12);
                }
            }
        }
    }

    #[test]
    fn hs_probability_rough() {
        let e = separability_probability(MetricKind::Hs, 4, 20_000, 1).unwrap();
        assert!(e.agrees(0.242379, 4.0, 0.0), "{e:?}");
    }

    #[test]
    fn haar_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let u = haar_unitary(&mut rng, 6);
        let id = &u * u.adjoint();
        for i in 0..6 {
            for j in 0..6 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((id[(i, j)] - Complex::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }
}
