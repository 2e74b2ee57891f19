//! Haar density on the twelve Euler angles of the 4x4 unitary orbit.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integral of [`haar_density`] over its box: `pi^6 / 96`.
pub fn haar_total() -> f64 {
    PI.powi(6) / 96.0
}

/// Twelve Euler angles, stored zero-based: `alpha[k]` is the `(k+1)`-th angle.
/// Even-numbered angles (`alpha_2, alpha_4, ...`) lie in `[0, pi/2]`,
/// odd-numbered ones in `[0, pi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerAngles {
    pub alpha: [f64; 12],
}

impl EulerAngles {
    pub fn new(alpha: [f64; 12]) -> Result<Self> {
        for (k, &a) in alpha.iter().enumerate() {
            let hi = Self::upper(k);
            if !(0.0..=hi).contains(&a) {
                return Err(Error::InvalidInput(format!("alpha_{} = {a} outside [0, {hi}]", k + 1)));
            }
        }
        Ok(Self { alpha })
    }

    /// Upper range limit of zero-based angle `k`.
    pub fn upper(k: usize) -> f64 {
        if (k + 1).is_multiple_of(2) {
            FRAC_PI_2
        } else {
            PI
        }
    }
}

/// `cos^3 a4 cos a6 cos a10 sin 2a2 sin a4 sin^5 a6 sin 2a8 sin^3 a10 sin 2a12`.
/// The odd-numbered angles do not enter.
pub fn haar_density(angles: &EulerAngles) -> f64 {
    let a = |k: usize| angles.alpha[k - 1];
    let v = a(4).cos().powi(3)
        * a(6).cos()
        * a(10).cos()
        * (2.0 * a(2)).sin()
        * a(4).sin()
        * a(6).sin().powi(5)
        * (2.0 * a(8)).sin()
        * a(10).sin().powi(3)
        * (2.0 * a(12)).sin();
    // cos(pi/2) is ~6e-17, not zero.
    v.max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_constant() {
        assert!((haar_total() - 10.014_470_766_409_42).abs() < 1e-12);
    }

    #[test]
    fn vanishes_at_alpha4_right_angle() {
        let mut alpha = [0.7; 12];
        alpha[3] = FRAC_PI_2;
        let v = haar_density(&EulerAngles::new(alpha).unwrap());
        assert!(v < 1e-30);
    }

    #[test]
    fn vanishes_when_cos_alpha6_does() {
        let q = PI / 4.0;
        let mut alpha = [1.1; 12];
        for (k, v) in [(2, q), (4, q), (6, FRAC_PI_2), (8, q), (10, q), (12, q)] {
            alpha[k - 1] = v;
        }
        assert!(haar_density(&EulerAngles::new(alpha).unwrap()) < 1e-16);
    }

    #[test]
    fn range_check() {
        let mut alpha = [0.1; 12];
        alpha[1] = 2.0;
        assert!(EulerAngles::new(alpha).is_err());
        alpha[1] = 0.1;
        alpha[0] = 3.0;
        assert!(EulerAngles::new(alpha).is_ok());
    }
}
