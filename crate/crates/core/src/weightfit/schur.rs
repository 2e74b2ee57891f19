//! Empirical Schur-convexity tests and the flat-core diagnostic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};

use super::forms::WeightingForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchurClass {
    /// Only pairs with `W(p) > W(q)` for `p` majorizing `q` were seen.
    ConvexEvidence,
    /// Only pairs with `W(p) < W(q)`.
    ConcaveEvidence,
    /// Both kinds were seen.
    Neither,
    /// `W` never changed along a majorization step.
    DegenerateFlat,
}

/// A majorization-comparable pair: `major` majorizes `minor`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub major: Vec<f64>,
    pub minor: Vec<f64>,
    pub w_major: f64,
    pub w_minor: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchurReport {
    pub class: SchurClass,
    pub draws: usize,
    pub increasing: usize,
    pub decreasing: usize,
    /// Examples with `W(major) > W(minor)`; these refute Schur-concavity.
    pub convex_witnesses: Vec<Witness>,
    /// Examples with `W(major) < W(minor)`; these refute Schur-convexity.
    pub concave_witnesses: Vec<Witness>,
}

const KEEP: usize = 5;

fn simplex_point<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut x: Vec<f64> = (0..n).map(|_| rng.sample(Exp1)).collect();
    let s: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= s);
    x
}

/// Draws `q` uniformly on the simplex and a `p` majorizing it by moving mass
/// from a smaller coordinate to a larger one, then compares `W(p)` and `W(q)`.
pub fn schur_classify(form: &WeightingForm, draws: usize, seed: u64) -> SchurReport {
    let n = form.natural_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SchurReport {
        class: SchurClass::DegenerateFlat,
        draws,
        increasing: 0,
        decreasing: 0,
        convex_witnesses: Vec::new(),
        concave_witnesses: Vec::new(),
    };
    for _ in 0..draws {
        let minor = simplex_point(&mut rng, n);
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let (hi, lo) = if minor[i] >= minor[j] { (i, j) } else { (j, i) };
        let t = minor[lo] * rng.random::<f64>();
        let mut major = minor.clone();
        major[hi] += t;
        major[lo] -= t;
        let (wp, wq) = (form.eval(&major), form.eval(&minor));
        let tol = 1e-12 * wp.abs().max(wq.abs());
        let w = Witness { major, minor, w_major: wp, w_minor: wq };
        if wp > wq + tol {
            report.increasing += 1;
            if report.convex_witnesses.len() < KEEP {
                report.convex_witnesses.push(w);
            }
        } else if wp < wq - tol {
            report.decreasing += 1;
            if report.concave_witnesses.len() < KEEP {
                report.concave_witnesses.push(w);
            }
        }
    }
    report.class = match (report.increasing > 0, report.decreasing > 0) {
        (true, true) => SchurClass::Neither,
        (true, false) => SchurClass::ConvexEvidence,
        (false, true) => SchurClass::ConcaveEvidence,
        (false, false) => SchurClass::DegenerateFlat,
    };
    report
}

/// Variation of `W` over the ball of eigenvalue vectors known to be
/// separable for every unitary orbit, `sum (l_i - 1/n)^2 <= 1/(n(n-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlatCoreReport {
    pub at_centre: f64,
    pub min: f64,
    pub max: f64,
    /// `(max - min) / max`; zero for a form that is flat on the ball.
    pub relative_variation: f64,
    pub samples: usize,
}

pub fn flat_core_diagnostic(form: &WeightingForm, draws: usize, seed: u64) -> FlatCoreReport {
    let n = form.natural_dim();
    let centre = vec![1.0 / n as f64; n];
    let r2 = 1.0 / (n * (n - 1)) as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let at_centre = form.eval(&centre);
    let (mut min, mut max, mut samples) = (at_centre, at_centre, 0);
    while samples < draws {
        let p = simplex_point(&mut rng, n);
        let d2: f64 = p.iter().map(|x| (x - 1.0 / n as f64).powi(2)).sum();
        if d2 > r2 {
            continue;
        }
        let w = form.eval(&p);
        min = min.min(w);
        max = max.max(w);
        samples += 1;
    }
    FlatCoreReport { at_centre, min, max, relative_variation: if max > 0.0 { (max - min) / max } else { 0.0 }, samples }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_is_flat() {
        let c = WeightingForm::two_term(1.0, 1.0, 0, 0);
        let r = schur_classify(&c, 200, 1);
        assert_eq!(r.class, SchurClass::DegenerateFlat);
        let f = flat_core_diagnostic(&c, 100, 1);
        assert_eq!(f.relative_variation, 0.0);
    }

    #[test]
    fn vertex_pair_is_not_a_witness() {
        let w = WeightingForm::Power { coeff: 1.0, k: 3, exponent: 53.0 / 20.0 };
        assert_eq!(w.eval(&[0.5, 0.5, 0.0, 0.0]), 0.0);
        assert_eq!(w.eval(&[1.0, 0.0, 0.0, 0.0]), 0.0);
    }

    #[test]
    fn elementary_powers_decrease_under_majorization() {
        let r = schur_classify(&WeightingForm::single_term(), 2000, 3);
        assert_eq!(r.class, SchurClass::ConcaveEvidence);
        assert!(!r.concave_witnesses.is_empty());
    }

    #[test]
    fn single_term_varies_on_the_separable_ball() {
        let f = flat_core_diagnostic(&WeightingForm::single_term(), 500, 2);
        assert_eq!(f.samples, 500);
        assert!(f.relative_variation > 0.1);
        assert!(f.max <= f.at_centre * (1.0 + 1e-12));
    }
}
