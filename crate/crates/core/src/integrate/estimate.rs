use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Monte Carlo result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
    pub n_samples: u64,
    pub seed: u64,
}

impl Estimate {
    /// An exact value, carried through the same plumbing as estimates.
    pub fn exact(value: f64) -> Self {
        Self { value, stderr: 0.0, n_samples: 1, seed: 0 }
    }

    /// Signed distance from `target` in standard errors (infinite when the
    /// standard error is zero and the values differ).
    pub fn z_score(&self, target: f64) -> f64 {
        let d = self.value - target;
        if d == 0.0 {
            0.0
        } else {
            d / self.stderr
        }
    }

    /// Agreement within `max(k sigma, rel |target|)`.
    pub fn agrees(&self, target: f64, k: f64, rel: f64) -> bool {
        (self.value - target).abs() <= (k * self.stderr).max(rel * target.abs())
    }

    pub fn scaled(self, factor: f64) -> Self {
        Self { value: self.value * factor, stderr: self.stderr * factor.abs(), ..self }
    }
}

/// Inverse-variance weighted combination of independent estimates.
///
/// Estimates with zero standard error are exact and dominate; if there are
/// several they are averaged. The result carries the summed sample count and
/// the smallest seed, so the combination does not depend on order.
pub fn merge(estimates: &[Estimate]) -> Result<Estimate> {
    let first = estimates.first().ok_or(Error::Empty("estimates"))?;
    let n_samples = estimates.iter().map(|e| e.n_samples).sum();
    let seed = estimates.iter().map(|e| e.seed).min().unwrap_or(first.seed);
    let exact: Vec<f64> = estimates.iter().filter(|e| e.stderr == 0.0).map(|e| e.value).collect();
    if !exact.is_empty() {
        let value = exact.iter().sum::<f64>() / exact.len() as f64;
        return Ok(Estimate { value, stderr: 0.0, n_samples, seed });
    }
    let (mut wsum, mut vsum) = (0.0, 0.0);
    for e in estimates {
        let w = 1.0 / (e.stderr * e.stderr);
        wsum += w;
        vsum += w * e.value;
    }
    Ok(Estimate { value: vsum / wsum, stderr: wsum.recip().sqrt(), n_samples, seed })
}

/// Running mean and variance (Welford), mergeable (Chan et al.).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Moments {
    pub n: u64,
    pub mean: f64,
    m2: f64,
}

impl Moments {
    pub fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    pub fn merge(&mut self, other: &Moments) {
        if other.n == 0 {
            return;
        }
        if self.n == 0 {
            *self = *other;
            return;
        }
        let n = self.n + other.n;
        let d = other.mean - self.mean;
        let w = other.n as f64 / n as f64;
        self.mean += d * w;
        self.m2 += other.m2 + d * d * self.n as f64 * w;
        self.n = n;
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            self.m2 / (self.n - 1) as f64
        }
    }

    pub fn stderr(&self) -> f64 {
        (self.variance() / self.n as f64).sqrt()
    }

    /// Estimate of `scale * E[x]`.
    pub fn estimate(&self, scale: f64, seed: u64) -> Estimate {
        Estimate { value: scale * self.mean, stderr: scale.abs() * self.stderr(), n_samples: self.n, seed }
    }
}

/// Joint moments of two quantities observed on the same samples, for
/// ratio estimates such as `E[sep] / E[total]`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Paired {
    pub x: Moments,
    pub y: Moments,
    cxy: f64,
}

impl Paired {
    pub fn push(&mut self, x: f64, y: f64) {
        let dx = x - self.x.mean;
        self.x.push(x);
        self.y.push(y);
        self.cxy += dx * (y - self.y.mean);
    }

    pub fn merge(&mut self, other: &Paired) {
        if other.x.n == 0 {
            return;
        }
        if self.x.n == 0 {
            *self = *other;
            return;
        }
        let (na, nb) = (self.x.n as f64, other.x.n as f64);
        let dx = other.x.mean - self.x.mean;
        let dy = other.y.mean - self.y.mean;
        self.cxy += other.cxy + dx * dy * na * nb / (na + nb);
        self.x.merge(&other.x);
        self.y.merge(&other.y);
    }

    pub fn covariance(&self) -> f64 {
        if self.x.n < 2 {
            0.0
        } else {
            self.cxy / (self.x.n - 1) as f64
        }
    }

    /// `E[x] / E[y]` with a first-order (delta method) standard error.
    pub fn ratio(&self, seed: u64) -> Estimate {
        let (mx, my) = (self.x.mean, self.y.mean);
        let r = mx / my;
        let n = self.x.n as f64;
        let var = (self.x.variance() - 2.0 * r * self.covariance() + r * r * self.y.variance()) / (my * my * n);
        Estimate { value: r, stderr: var.max(0.0).sqrt(), n_samples: self.x.n, seed }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn est(value: f64, stderr: f64, seed: u64) -> Estimate {
        Estimate { value, stderr, n_samples: 100, seed }
    }

    #[test]
    fn merge_single_is_identity() {
        let a = est(1.5, 0.1, 3);
        assert_eq!(merge(&[a]).unwrap(), a);
    }

    #[test]
    fn merge_equal_variance_shrinks_by_sqrt_k() {
        let es: Vec<_> = (0..9).map(|k| est(1.0 + k as f64 * 1e-3, 0.2, k)).collect();
        let m = merge(&es).unwrap();
        assert!((m.stderr / (0.2 / 3.0) - 1.0).abs() < 0.01);
        assert_eq!(m.n_samples, 900);
    }

    #[test]
    fn merge_is_symmetric() {
        let a = est(1.0, 0.1, 1);
        let b = est(1.3, 0.25, 2);
        let ab = merge(&[a, b]).unwrap();
        let ba = merge(&[b, a]).unwrap();
        assert!(((ab.value - ba.value) / ab.value).abs() < 1e-12);
        assert_eq!(ab.stderr, ba.stderr);
        assert_eq!(ab.seed, ba.seed);
    }

    #[test]
    fn merge_empty_fails() {
        assert_eq!(merge(&[]), Err(Error::Empty("estimates")));
    }

    #[test]
    fn moments_merge_matches_sequential() {
        let xs: Vec<f64> = (0..1000).map(|k| ((k * 37) % 101) as f64 / 7.0).collect();
        let mut all = Moments::default();
        xs.iter().for_each(|&x| all.push(x));
        let mut a = Moments::default();
        let mut b = Moments::default();
        xs[..313].iter().for_each(|&x| a.push(x));
        xs[313..].iter().for_each(|&x| b.push(x));
        a.merge(&b);
        assert_eq!(a.n, all.n);
        assert!((a.mean - all.mean).abs() < 1e-12);
        assert!((a.variance() / all.variance() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn paired_ratio_of_proportional_data_is_exact() {
        let mut p = Paired::default();
        for k in 0..100 {
            let y = 1.0 + (k % 7) as f64;
            p.push(0.5 * y, y);
        }
        let r = p.ratio(0);
        assert!((r.value - 0.5).abs() < 1e-15);
        assert!(r.stderr < 1e-9);
    }
}
