//! Quasi-Monte Carlo on the unit cube with the Kronecker sequence
//! `x_k = frac(1/2 + k alpha)`, `alpha_i = phi_d^{-i}`, where `phi_d` is the
//! positive root of `x^{d+1} = x + 1`.

use rayon::prelude::*;

use super::quadrature::{chart, warp};
use crate::error::{Error, Result};

const BLOCK: u64 = 1 << 16;

fn generator(dim: usize) -> Vec<f64> {
    let mut phi = 2.0f64;
    for _ in 0..64 {
        phi = (1.0 + phi).powf(1.0 / (dim as f64 + 1.0));
    }
    (1..=dim).map(|i| phi.powi(-(i as i32)).fract()).collect()
}

/// Sums of `f` over points `start..end` of the sequence, in blocks summed in
/// order.
fn block_sums<F>(f: &F, dim: usize, start: u64, end: u64) -> Result<f64>
where
    F: Fn(&[f64]) -> Result<f64> + Sync,
{
    let alpha = generator(dim);
    let blocks = (end - start).div_ceil(BLOCK);
    let parts: Vec<Result<f64>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let lo = start + b * BLOCK;
            let hi = (lo + BLOCK).min(end);
            let mut x = vec![0.0; dim];
            let mut s = 0.0;
            for k in lo..hi {
                for (xi, a) in x.iter_mut().zip(&alpha) {
                    // (k * a) mod 1 computed without losing the fraction for large k
                    *xi = (0.5 + (k as f64 * a).fract()).fract();
                }
                s += f(&x)?;
            }
            Ok(s)
        })
        .collect();
    parts.into_iter().sum()
}

/// Mean of `f` over the first `n` points of the `dim`-dimensional sequence.
pub fn qmc_cube<F>(f: F, dim: usize, n: u64) -> Result<f64>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    if n == 0 || dim == 0 {
        return Err(Error::InvalidInput("qmc needs a positive dimension and point count".into()));
    }
    let g = |x: &[f64]| {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { point: x.to_vec() })
        }
    };
    Ok(block_sums(&g, dim, 0, n)? / n as f64)
}

/// Integral of a symmetric `f` over the `dim`-simplex through the same chart
/// and warp as the tensor rule. Returns the value and the relative
/// difference from the estimate on the first half of the points.
pub fn qmc_simplex<F>(f: &F, dim: usize, n: u64, warp_depth: u32) -> Result<(f64, f64)>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    if n < 2 {
        return Err(Error::InvalidInput("qmc needs at least two points".into()));
    }
    let g = |t: &[f64]| {
        let mut u = [0.0; 8];
        let mut weight = 1.0;
        for (k, &tk) in t.iter().enumerate() {
            let (uk, duk) = warp(tk, warp_depth);
            u[k] = uk;
            weight *= duk;
        }
        let mut lambda = vec![0.0; dim + 1];
        let jac = chart(&u[..dim], &mut lambda);
        let v = f(&lambda);
        if v.is_finite() {
            Ok(weight * jac * v)
        } else {
            Err(Error::NonFinite { point: lambda })
        }
    };
    let half = n / 2;
    let first = block_sums(&g, dim, 0, half)?;
    let second = block_sums(&g, dim, half, n)?;
    let value = (first + second) / n as f64;
    let early = first / half as f64;
    let achieved = if value == 0.0 { (value - early).abs() } else { ((value - early) / value).abs() };
    Ok((value, achieved))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_root() {
        let a = generator(1);
        // golden ratio conjugate
        assert!((a[0] - 0.618_033_988_749_895).abs() < 1e-12);
    }

    #[test]
    fn cube_polynomial() {
        let v = qmc_cube(|x| x[0] * x[1] * x[2], 3, 200_000).unwrap();
        assert!((v - 0.125).abs() < 1e-4);
    }

    #[test]
    fn simplex_volume() {
        let (v, achieved) = qmc_simplex(&|_: &[f64]| 1.0, 5, 400_000, 1).unwrap();
        assert!((v * 120.0 - 1.0).abs() < 1e-3, "{v}");
        assert!(achieved < 1e-2);
    }
}
