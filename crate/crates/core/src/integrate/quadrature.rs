//! Deterministic integration of symmetric functions over the eigenvalue
//! simplex.
//!
//! The integrand is only evaluated on the ordered chart `l_1 >= ... >= l_n`,
//! parameterized by a point `w` of the standard simplex through
//! `l_i = sum_{k>=i} w_k / k`. The chart has Jacobian `1/n!` and covers one of
//! the `n!` symmetric copies, so for symmetric integrands the two factors
//! cancel. `w` comes from the unit cube by stick breaking, and each cube axis
//! is warped by `u = sin^2(pi t / 2)` before tensor Gauss-Legendre, which
//! tames the algebraic endpoint behaviour of fractional powers.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::qmc;
use crate::error::{Error, Result};

/// Refinement controls.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Simplex dimension; the integrand sees `dimension + 1` eigenvalues.
    pub dimension: usize,
    pub target_rel_error: f64,
    /// Largest number of nodes per axis before giving up on the tensor rule.
    pub max_subdivisions: usize,
    /// Points of the quasi-Monte Carlo fallback; used only for `dimension >= 4`.
    pub qmc_points: u64,
    /// How many times the endpoint warp is composed; 2 suits integrands
    /// with logarithmic boundary behaviour.
    pub warp_depth: u32,
}

impl QuadratureSpec {
    pub fn new(dimension: usize, target_rel_error: f64) -> Self {
        let max_subdivisions = if dimension >= 4 { 24 } else { 96 };
        Self { dimension, target_rel_error, max_subdivisions, qmc_points: 100_000_000, warp_depth: 1 }
    }

    pub fn with_max_subdivisions(self, max_subdivisions: usize) -> Self {
        Self { max_subdivisions, ..self }
    }

    pub fn with_qmc_points(self, qmc_points: u64) -> Self {
        Self { qmc_points, ..self }
    }

    pub fn with_warp_depth(self, warp_depth: u32) -> Self {
        Self { warp_depth, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(1..=5).contains(&self.dimension) {
            return Err(Error::InvalidInput(format!("simplex dimension {} not in 1..=5", self.dimension)));
        }
        if !(self.target_rel_error > 0.0) {
            return Err(Error::InvalidInput("target relative error must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TensorGauss,
    QuasiMonteCarlo,
}

/// A converged quadrature value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quadrature {
    pub value: f64,
    /// Relative difference between the last two refinement levels.
    pub achieved: f64,
    /// Nodes per axis (tensor rule) or total points (fallback).
    pub nodes: u64,
    pub method: Method,
}

/// Gauss-Legendre nodes and weights on `[0, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let wt = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = (1.0 - z) / 2.0;
        x[n - 1 - i] = (1.0 + z) / 2.0;
        w[i] = wt / 2.0;
        w[n - 1 - i] = wt / 2.0;
    }
    (x, w)
}

/// Maps a cube point (already warped) to the ordered eigenvalues and
/// returns the stick-breaking Jacobian.
pub(crate) fn chart(u: &[f64], lambda: &mut [f64]) -> f64 {
    let n = u.len() + 1;
    let mut rest = 1.0;
    let mut jac = 1.0;
    // reuse lambda as scratch for w, then accumulate suffix sums in place
    for k in 0..n - 1 {
        lambda[k] = rest * u[k];
        jac *= rest;
        rest *= 1.0 - u[k];
    }
    lambda[n - 1] = rest;
    let mut acc = 0.0;
    for i in (0..n).rev() {
        acc += lambda[i] / (i + 1) as f64;
        lambda[i] = acc;
    }
    jac
}

fn sin2(t: f64) -> (f64, f64) {
    let s = (0.5 * PI * t).sin();
    (s * s, 0.5 * PI * (PI * t).sin())
}

/// `depth`-fold composition of `t -> sin^2(pi t / 2)` and its derivative.
pub(crate) fn warp(t: f64, depth: u32) -> (f64, f64) {
    let (mut u, mut du) = (t, 1.0);
    for _ in 0..depth {
        let (v, dv) = sin2(u);
        u = v;
        du *= dv;
    }
    (u, du)
}

fn tensor<F>(f: &F, dim: usize, n: usize, warp_depth: u32) -> Result<f64>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    let (t, wt) = gauss_legendre(n);
    let nodes: Vec<(f64, f64)> = t
        .iter()
        .zip(&wt)
        .map(|(&t, &w)| {
            let (u, du) = warp(t, warp_depth);
            (u, w * du)
        })
        .collect();
    let partial: Vec<Result<f64>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut idx = vec![0usize; dim];
            idx[0] = first;
            let mut u = vec![0.0; dim];
            let mut lambda = vec![0.0; dim + 1];
            let mut sum = 0.0;
            loop {
                let mut weight = 1.0;
                for (k, &i) in idx.iter().enumerate() {
                    u[k] = nodes[i].0;
                    weight *= nodes[i].1;
                }
                let jac = chart(&u, &mut lambda);
                let v = f(&lambda);
                if !v.is_finite() {
                    return Err(Error::NonFinite { point: lambda });
                }
                sum += weight * jac * v;
                // odometer over axes 1..dim
                let mut k = dim;
                loop {
                    if k == 1 {
                        return Ok(sum);
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < n {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        })
        .collect();
    let mut total = 0.0;
    for p in partial {
        total += p?;
    }
    Ok(total)
}

fn rel_diff(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Integral of a symmetric `f` over the simplex `{l_i >= 0, sum l_i = 1}`
/// in the coordinates `l_1, ..., l_dim`, with `f` called on the
/// `dim + 1` eigenvalues in decreasing order.
pub fn quad_simplex_detailed<F>(f: F, spec: &QuadratureSpec) -> Result<Quadrature>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    spec.validate()?;
    let dim = spec.dimension;
    let mut prev: Option<f64> = None;
    let mut best = Quadrature { value: f64::NAN, achieved: f64::INFINITY, nodes: 0, method: Method::TensorGauss };
    let mut n = 8;
    while n <= spec.max_subdivisions.max(8) {
        let value = tensor(&f, dim, n, spec.warp_depth)?;
        if let Some(p) = prev {
            let achieved = rel_diff(value, p);
            best = Quadrature { value, achieved, nodes: n as u64, method: Method::TensorGauss };
            if achieved <= spec.target_rel_error {
                return Ok(best);
            }
        } else {
            best.value = value;
        }
        prev = Some(value);
        n += if dim >= 4 { 4 } else { 8 };
    }
    if dim >= 4 && spec.qmc_points > 0 {
        let (value, achieved) = qmc::qmc_simplex(&f, dim, spec.qmc_points, spec.warp_depth)?;
        if achieved <= spec.target_rel_error || achieved < best.achieved {
            best = Quadrature { value, achieved, nodes: spec.qmc_points, method: Method::QuasiMonteCarlo };
        }
        if best.achieved <= spec.target_rel_error {
            return Ok(best);
        }
    }
    Err(Error::NoConvergence { estimate: best.value, achieved: best.achieved })
}

/// Value-only form of [`quad_simplex_detailed`].
pub fn quad_simplex<F>(f: F, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    quad_simplex_detailed(f, spec).map(|q| q.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        for n in [1, 2, 5, 8, 13] {
            let (x, w) = gauss_legendre(n);
            let deg = 2 * n - 1;
            let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
            assert!((s - 1.0 / (deg + 1) as f64).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn chart_is_ordered_and_normalized() {
        let mut l = [0.0; 4];
        chart(&[0.3, 0.6, 0.2], &mut l);
        assert!((l.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!(l.windows(2).all(|p| p[0] >= p[1]));
    }

    #[test]
    fn unit_volume() {
        let v = quad_simplex(|_| 1.0, &QuadratureSpec::new(3, 1e-12)).unwrap();
        assert!((v - 1.0 / 6.0).abs() < 1e-13);
        let v = quad_simplex(|_| 1.0, &QuadratureSpec::new(2, 1e-12)).unwrap();
        assert!((v - 0.5).abs() < 1e-13);
    }

    #[test]
    fn symmetric_monomial() {
        // each l_i^2 integrates to 2!/4! over the 2-simplex
        let v = quad_simplex(|l| l.iter().map(|x| x * x).sum(), &QuadratureSpec::new(2, 1e-12)).unwrap();
        assert!((v - 0.25).abs() < 1e-13, "{v}");
    }

    #[test]
    fn no_convergence_reports_best() {
        let spec = QuadratureSpec::new(2, 1e-15).with_max_subdivisions(16);
        match quad_simplex(|l| (l[0] - 0.5).abs().sqrt(), &spec) {
            Err(Error::NoConvergence { estimate, achieved }) => {
                assert!(estimate.is_finite());
                assert!(achieved > 1e-15);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_dimension() {
        assert!(quad_simplex(|_| 1.0, &QuadratureSpec::new(0, 1e-6)).is_err());
        assert!(quad_simplex(|_| 1.0, &QuadratureSpec::new(6, 1e-6)).is_err());
    }
}
