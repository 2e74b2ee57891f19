//! Plain Monte Carlo over boxes and simplices.
//!
//! Samples are drawn in chunks of [`CHUNK`]; chunk `c` uses the ChaCha8
//! stream `c` of the run seed, and chunk statistics are combined in chunk
//! order, so results do not depend on the number of worker threads.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;

use super::estimate::{Estimate, Paired};
use crate::error::{Error, Result};

pub const CHUNK: u64 = 1 << 16;

const MIN_SAMPLES: u64 = 1000;

/// Integration domain.
#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    /// Axis-aligned box `[lo_i, hi_i]`.
    Box { lo: Vec<f64>, hi: Vec<f64> },
    /// `{x >= 0, sum x <= 1}` in `dim` coordinates, volume `1/dim!`.
    Simplex { dim: usize },
}

impl Region {
    /// The cube `[-1, 1]^k`.
    pub fn symmetric_cube(k: usize) -> Self {
        Region::Box { lo: vec![-1.0; k], hi: vec![1.0; k] }
    }

    pub fn dim(&self) -> usize {
        match self {
            Region::Box { lo, .. } => lo.len(),
            Region::Simplex { dim } => *dim,
        }
    }

    pub fn volume(&self) -> f64 {
        match self {
            Region::Box { lo, hi } => lo.iter().zip(hi).map(|(a, b)| b - a).product(),
            Region::Simplex { dim } => 1.0 / (1..=*dim).map(|k| k as f64).product::<f64>(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Region::Box { lo, hi } => {
                if lo.len() != hi.len() || lo.is_empty() {
                    return Err(Error::InvalidInput("box bounds must be nonempty and of equal length".into()));
                }
                if lo.iter().zip(hi).any(|(a, b)| !(a <= b)) {
                    return Err(Error::InvalidInput("box has lo > hi".into()));
                }
            }
            Region::Simplex { dim } => {
                if *dim == 0 {
                    return Err(Error::InvalidInput("simplex dimension must be positive".into()));
                }
            }
        }
        Ok(())
    }

    /// Uniform point of the region written into `x`.
    pub fn sample_into<R: Rng + ?Sized>(&self, rng: &mut R, x: &mut [f64]) {
        match self {
            Region::Box { lo, hi } => {
                for ((xi, a), b) in x.iter_mut().zip(lo).zip(hi) {
                    *xi = a + (b - a) * rng.random::<f64>();
                }
            }
            Region::Simplex { dim } => {
                // Normalized exponentials give a uniform point of the
                // (dim+1)-part probability simplex; drop the last part.
                let mut total: f64 = rng.sample(Exp1);
                for xi in x.iter_mut().take(*dim) {
                    *xi = rng.sample(Exp1);
                    total += *xi;
                }
                x.iter_mut().for_each(|xi| *xi /= total);
            }
        }
    }
}

/// Generator for chunk `chunk` of the run seeded by `seed`.
pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Runs `n` draws of `f` and returns the joint moments of its two outputs.
/// `f` receives the chunk generator and must be pure apart from it.
pub fn mc_paired<F>(n: u64, seed: u64, f: F) -> Result<Paired>
where
    F: Fn(&mut ChaCha8Rng) -> Result<(f64, f64)> + Sync,
{
    if n < MIN_SAMPLES {
        return Err(Error::InvalidInput(format!("need at least {MIN_SAMPLES} samples, got {n}")));
    }
    let chunks = n.div_ceil(CHUNK);
    let parts: Vec<Result<Paired>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let len = CHUNK.min(n - c * CHUNK);
            let mut acc = Paired::default();
            for _ in 0..len {
                let (x, y) = f(&mut rng)?;
                acc.push(x, y);
            }
            Ok(acc)
        })
        .collect();
    let mut total = Paired::default();
    for p in parts {
        total.merge(&p?);
    }
    Ok(total)
}

/// Sample mean of `f` over `region` times its volume.
pub fn mc_integrate<F>(f: F, region: &Region, n: u64, seed: u64) -> Result<Estimate>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    region.validate()?;
    let dim = region.dim();
    let acc = mc_paired(n, seed, |rng| {
        let mut x = vec![0.0; dim];
        region.sample_into(rng, &mut x);
        let v = f(&x);
        if !v.is_finite() {
            return Err(Error::NonFinite { point: x });
        }
        Ok((v, 0.0))
    })?;
    Ok(acc.x.estimate(region.volume(), seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_over_cube_is_exact() {
        let e = mc_integrate(|_| 1.0, &Region::symmetric_cube(6), 5000, 1).unwrap();
        assert_eq!(e.value, 64.0);
        assert_eq!(e.stderr, 0.0);
        assert_eq!(e.n_samples, 5000);
    }

    #[test]
    fn too_few_samples() {
        assert!(mc_integrate(|_| 1.0, &Region::symmetric_cube(2), 999, 1).is_err());
    }

    #[test]
    fn non_finite_reports_point() {
        let r = mc_integrate(|x| if x[0] > 0.5 { f64::NAN } else { 0.0 }, &Region::symmetric_cube(2), 2000, 1);
        match r {
            Err(Error::NonFinite { point }) => assert!(point[0] > 0.5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn simplex_mean_of_coordinate() {
        // E[x_1] over the uniform 3-simplex is 1/4; integral is 1/24.
        let e = mc_integrate(|x| x[0], &Region::Simplex { dim: 3 }, 200_000, 5).unwrap();
        assert!(e.agrees(1.0 / 24.0, 4.0, 0.0), "{e:?}");
    }

    #[test]
    fn deterministic_per_seed() {
        let f = |x: &[f64]| x[0] * x[1];
        let r = Region::symmetric_cube(2);
        let a = mc_integrate(f, &r, 150_000, 9).unwrap();
        let b = mc_integrate(f, &r, 150_000, 9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn independent_seeds_agree() {
        let f = |x: &[f64]| if x[0] * x[0] + x[1] * x[1] <= 1.0 { 1.0 } else { 0.0 };
        let r = Region::symmetric_cube(2);
        let a = mc_integrate(f, &r, 1_000_000, 1).unwrap();
        let b = mc_integrate(f, &r, 1_000_000, 2).unwrap();
        let s = (a.stderr.powi(2) + b.stderr.powi(2)).sqrt();
        assert!((a.value - b.value).abs() < 4.0 * s);
        assert!(a.agrees(std::f64::consts::PI, 4.0, 0.0));
    }
}
