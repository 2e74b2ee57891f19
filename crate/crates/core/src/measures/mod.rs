//! Volume measures on density matrices, split into a unitary-orbit part and
//! an eigenvalue part.
//!
//! Every measure used here factors as `orbit_volume(n) * density(lambda)`
//! where the orbit part is common to all metrics. For `n = 4` the orbit part
//! is the integral of the Euler-angle Haar density ([`haar`]), `pi^6 / 96`.
//!
//! Monotone metrics are normalized through the line element
//! `ds^2 = (1/4) [ sum dl_i^2 / l_i + 2 sum_{i<j} (l_i - l_j)^2 c(l_i, l_j) |<i|dU U^+|j>|^2 ]`
//! and the Hilbert-Schmidt measure through `ds^2 = tr(d rho^2)`; both over
//! the unordered eigenvalue simplex, so each state is counted `n!` times and
//! the constants below carry the `1/n!`.

pub mod constants;
pub mod haar;
pub mod sampler;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use constants::{constants, ConstantEntry, ConstantKey, Quantity, System};
pub use haar::{haar_density, EulerAngles, haar_total};
pub use sampler::{sample_state, separability_probability, StateSampler};

/// A point of the probability simplex of eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplexPoint {
    lambda: Vec<f64>,
}

impl SimplexPoint {
    pub fn new(lambda: Vec<f64>) -> Result<Self> {
        if lambda.len() < 2 {
            return Err(Error::InvalidInput("need at least two eigenvalues".into()));
        }
        if lambda.iter().any(|&l| !(l >= 0.0)) {
            return Err(Error::InvalidInput(format!("negative eigenvalue in {lambda:?}")));
        }
        let s: f64 = lambda.iter().sum();
        if (s - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidInput(format!("eigenvalues sum to {s}")));
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }
}

/// The metrics whose volume measures are supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricKind {
    Hs,
    Bures,
    KuboMori,
    WignerYanase,
    AvgMonotone,
}

impl MetricKind {
    pub const ALL: [MetricKind; 5] = [
        MetricKind::Hs,
        MetricKind::Bures,
        MetricKind::KuboMori,
        MetricKind::WignerYanase,
        MetricKind::AvgMonotone,
    ];

    pub const MONOTONE: [MetricKind; 4] = [
        MetricKind::Bures,
        MetricKind::KuboMori,
        MetricKind::WignerYanase,
        MetricKind::AvgMonotone,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MetricKind::Hs => "hs",
            MetricKind::Bures => "bures",
            MetricKind::KuboMori => "kubo-mori",
            MetricKind::WignerYanase => "wigner-yanase",
            MetricKind::AvgMonotone => "avg-monotone",
        }
    }

    pub fn is_monotone(&self) -> bool {
        !matches!(self, MetricKind::Hs)
    }

    /// Morozova-Chentsov function `c(x, y)`, normalized so `c(x, x) = 1/x`.
    ///
    /// The average metric is the one generated by the mean of the operator
    /// monotone functions of the minimal and maximal metrics,
    /// `f(t) = [(1+t)/2 + 2t/(1+t)] / 2`, giving `c = 4(x+y) / (x^2 + 6xy + y^2)`.
    pub fn morozova_chentsov(&self, x: f64, y: f64) -> f64 {
        match self {
            MetricKind::Hs => 1.0,
            MetricKind::Bures => 2.0 / (x + y),
            MetricKind::KuboMori => {
                let d = x - y;
                let r = d / (x + y);
                if d == 0.0 {
                    1.0 / x
                } else if r.abs() < 0.5 {
                    2.0 * r.atanh() / d
                } else {
                    (x.ln() - y.ln()) / d
                }
            }
            MetricKind::WignerYanase => {
                let s = x.sqrt() + y.sqrt();
                4.0 / (s * s)
            }
            MetricKind::AvgMonotone => 4.0 * (x + y) / (x * x + 6.0 * x * y + y * y),
        }
    }

    /// `x^2 c(x, 0)` for a pair that touches the rank-deficient face.
    ///
    /// The Kubo-Mori function diverges logarithmically at zero; its face
    /// density takes the minimal-metric value `2x` for these pairs.
    pub fn boundary_pair(&self, x: f64) -> f64 {
        match self {
            MetricKind::Hs => x * x,
            MetricKind::Bures | MetricKind::KuboMori => 2.0 * x,
            MetricKind::WignerYanase | MetricKind::AvgMonotone => 4.0 * x,
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hs" | "hilbert-schmidt" => Ok(MetricKind::Hs),
            "bures" => Ok(MetricKind::Bures),
            "km" | "kubo-mori" => Ok(MetricKind::KuboMori),
            "wy" | "wigner-yanase" => Ok(MetricKind::WignerYanase),
            "avg" | "avg-monotone" | "average" => Ok(MetricKind::AvgMonotone),
            other => Err(Error::InvalidInput(format!("unknown metric {other}"))),
        }
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn superfactorial(n: usize) -> f64 {
    (1..=n).map(factorial).product()
}

/// Orbit factor `pi^{n(n-1)/2} / (2^{n-1} prod_{k<n} k!)`; `pi^6/96` at `n = 4`.
pub fn orbit_volume(n: usize) -> f64 {
    let half = (n * (n - 1) / 2) as i32;
    std::f64::consts::PI.powi(half) / (2f64.powi(n as i32 - 1) * superfactorial(n - 1))
}

fn hs_volume_const(n: usize) -> f64 {
    let e = (n * (n - 1) / 2 + n - 1) as i32;
    (n as f64).sqrt() * 2f64.powi(e) / factorial(n)
}

fn hs_face_const(n: usize) -> f64 {
    let e = (n * (n - 1) / 2 + n - 1) as i32;
    ((n - 1) as f64).sqrt() * 2f64.powi(e) / factorial(n - 1)
}

fn monotone_volume_const(n: usize) -> f64 {
    2f64.powi(-((n * (n - 1) / 2) as i32)) / factorial(n)
}

fn monotone_face_const(n: usize) -> f64 {
    2f64.powi(1 - (n * (n - 1) / 2) as i32) / factorial(n - 1)
}

/// Eigenvalue density without validation. Zero eigenvalues give `inf` or
/// NaN for monotone metrics; callers integrating over the open simplex never
/// hit them.
pub fn density_unchecked(metric: MetricKind, lambda: &[f64]) -> f64 {
    let n = lambda.len();
    let mut p = 1.0;
    match metric {
        MetricKind::Hs => {
            for i in 0..n {
                for j in i + 1..n {
                    let d = lambda[i] - lambda[j];
                    p *= d * d;
                }
            }
            hs_volume_const(n) * p
        }
        m => {
            let mut prod = 1.0;
            for i in 0..n {
                prod *= lambda[i];
                for j in i + 1..n {
                    let d = lambda[i] - lambda[j];
                    p *= d * d * m.morozova_chentsov(lambda[i], lambda[j]);
                }
            }
            monotone_volume_const(n) * p / prod.sqrt()
        }
    }
}

/// Face density over the nonzero eigenvalues `nonzero` of a state with one
/// zero eigenvalue (so the full dimension is `nonzero.len() + 1`).
pub fn face_density_unchecked(metric: MetricKind, nonzero: &[f64]) -> f64 {
    let n = nonzero.len() + 1;
    let mut p = 1.0;
    match metric {
        MetricKind::Hs => {
            for i in 0..n - 1 {
                p *= nonzero[i] * nonzero[i];
                for j in i + 1..n - 1 {
                    let d = nonzero[i] - nonzero[j];
                    p *= d * d;
                }
            }
            hs_face_const(n) * p
        }
        m => {
            let mut prod = 1.0;
            for i in 0..n - 1 {
                prod *= nonzero[i];
                p *= m.boundary_pair(nonzero[i]);
                for j in i + 1..n - 1 {
                    let d = nonzero[i] - nonzero[j];
                    p *= d * d * m.morozova_chentsov(nonzero[i], nonzero[j]);
                }
            }
            monotone_face_const(n) * p / prod.sqrt()
        }
    }
}

/// Eigenvalue part of the volume measure; `orbit_volume(n) * integral` over
/// the simplex gives the total volume.
pub fn simplex_density(metric: MetricKind, p: &SimplexPoint) -> Result<f64> {
    if metric.is_monotone() && p.lambda().iter().any(|&l| l <= 0.0) {
        return Err(Error::ZeroEigenvalue { metric: metric.name() });
    }
    Ok(density_unchecked(metric, p.lambda()))
}

/// Eigenvalue part of the hyperarea measure on the face where exactly one
/// eigenvalue vanishes.
pub fn face_density(metric: MetricKind, p: &SimplexPoint) -> Result<f64> {
    let zeros = p.lambda().iter().filter(|&&l| l == 0.0).count();
    if zeros != 1 {
        return Err(Error::InvalidInput(format!("face point needs exactly one zero eigenvalue, found {zeros}")));
    }
    let nonzero: Vec<f64> = p.lambda().iter().copied().filter(|&l| l != 0.0).collect();
    Ok(face_density_unchecked(metric, &nonzero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[f64]) -> SimplexPoint {
        SimplexPoint::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hs_density_examples() {
        assert_eq!(simplex_density(MetricKind::Hs, &pt(&[0.25; 4])).unwrap(), 0.0);
        let v = simplex_density(MetricKind::Hs, &pt(&[0.4, 0.3, 0.2, 0.1])).unwrap();
        assert!((v / hs_volume_const(4) - 1.44e-10).abs() < 1e-22);
        assert!((hs_volume_const(4) - 128.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn hs_face_examples() {
        assert_eq!(face_density(MetricKind::Hs, &pt(&[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0])).unwrap(), 0.0);
        let v = face_density(MetricKind::Hs, &pt(&[0.5, 0.3, 0.2, 0.0])).unwrap();
        assert!((v / hs_face_const(4) - 3.24e-8).abs() < 1e-20);
        assert!(face_density(MetricKind::Hs, &pt(&[0.5, 0.5, 0.0, 0.0])).is_err());
        assert!(face_density(MetricKind::Hs, &pt(&[0.4, 0.3, 0.2, 0.1])).is_err());
    }

    #[test]
    fn monotone_density_rejects_zero_eigenvalue() {
        let p = pt(&[0.5, 0.3, 0.2, 0.0]);
        assert!(matches!(
            simplex_density(MetricKind::Bures, &p),
            Err(Error::ZeroEigenvalue { metric: "bures" })
        ));
        assert!(simplex_density(MetricKind::Hs, &p).is_ok());
    }

    #[test]
    fn morozova_chentsov_diagonal_is_fisher() {
        for m in MetricKind::MONOTONE {
            for x in [0.01, 0.3, 0.9] {
                assert!((m.morozova_chentsov(x, x) * x - 1.0).abs() < 1e-12, "{m}");
            }
        }
    }

    #[test]
    fn kubo_mori_near_diagonal_is_continuous() {
        let m = MetricKind::KuboMori;
        let x = 0.3;
        let a = m.morozova_chentsov(x, x * (1.0 + 1e-12));
        assert!((a * x - 1.0).abs() < 1e-10);
        let b = m.morozova_chentsov(0.4, 0.1);
        assert!((b - (0.4f64.ln() - 0.1f64.ln()) / 0.3).abs() < 1e-12);
    }

    #[test]
    fn boundary_pair_is_limit_where_finite() {
        for m in [MetricKind::Bures, MetricKind::WignerYanase, MetricKind::AvgMonotone] {
            let x = 0.37;
            let lim = x * x * m.morozova_chentsov(x, 1e-14);
            assert!((lim - m.boundary_pair(x)).abs() < 1e-6, "{m}");
        }
    }

    #[test]
    fn orbit_volume_matches_euler_integral() {
        let v = orbit_volume(4);
        assert!((v - std::f64::consts::PI.powi(6) / 96.0).abs() < 1e-12);
    }

    #[test]
    fn metric_names_round_trip() {
        for m in MetricKind::ALL {
            assert_eq!(m.name().parse::<MetricKind>().unwrap(), m);
        }
        assert!("gks".parse::<MetricKind>().is_err());
    }
}
