use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::SimplexPoint;
use crate::symmetric::{clamped_pow, elementary, elementary_all};

/// A symmetric weighting function of the eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WeightingForm {
    /// `coeff * e_k^exponent`.
    Power { coeff: f64, k: usize, exponent: f64 },
    /// `a e_2^m1 + b e_3^m2`.
    TwoTerm { a: f64, b: f64, m1: u32, m2: u32 },
    /// Pointwise convex combination.
    Blend { parts: Vec<(WeightingForm, f64)> },
}

impl WeightingForm {
    /// `6086 e_3^{53/20}` for two qubits.
    pub fn single_term() -> Self {
        WeightingForm::Power { coeff: 6086.0, k: 3, exponent: 53.0 / 20.0 }
    }

    /// `c e_5^{9/5}` for a qubit and a qutrit.
    pub fn qutrit(c: f64) -> Self {
        WeightingForm::Power { coeff: c, k: 5, exponent: 9.0 / 5.0 }
    }

    pub fn two_term(a: f64, b: f64, m1: u32, m2: u32) -> Self {
        WeightingForm::TwoTerm { a, b, m1, m2 }
    }

    /// Number of eigenvalues the form is meant for.
    pub fn natural_dim(&self) -> usize {
        match self {
            WeightingForm::Power { k, .. } => {
                if *k >= 4 {
                    6
                } else {
                    4
                }
            }
            WeightingForm::TwoTerm { .. } => 4,
            WeightingForm::Blend { parts } => parts.first().map_or(4, |(f, _)| f.natural_dim()),
        }
    }

    /// Short human-readable label.
    pub fn label(&self) -> String {
        match self {
            WeightingForm::Power { coeff, k, exponent } => format!("{coeff} e{k}^{exponent}"),
            WeightingForm::TwoTerm { a, b, m1, m2 } => format!("{a} e2^{m1} + {b} e3^{m2}"),
            WeightingForm::Blend { parts } => parts
                .iter()
                .map(|(f, w)| format!("{w} [{}]", f.label()))
                .collect::<Vec<_>>()
                .join(" + "),
        }
    }

    /// Value at an unchecked eigenvalue vector.
    pub fn eval(&self, lambda: &[f64]) -> f64 {
        match self {
            WeightingForm::Power { coeff, k, exponent } => coeff * clamped_pow(elementary(lambda, *k), *exponent),
            WeightingForm::TwoTerm { a, b, m1, m2 } => {
                let e = elementary_all(lambda);
                let e2 = e.get(2).copied().unwrap_or(0.0);
                let e3 = e.get(3).copied().unwrap_or(0.0);
                a * e2.powi(*m1 as i32) + b * e3.powi(*m2 as i32)
            }
            WeightingForm::Blend { parts } => parts.iter().map(|(f, w)| w * f.eval(lambda)).sum(),
        }
    }
}

/// Value of `form` at `p`.
pub fn eval_w(form: &WeightingForm, p: &SimplexPoint) -> f64 {
    form.eval(p.lambda())
}

/// Convex combination of forms. Weights must be nonnegative and sum to 1.
/// A single unit weight returns that form unchanged.
pub fn blend(forms: Vec<(WeightingForm, f64)>) -> Result<WeightingForm> {
    if forms.is_empty() {
        return Err(Error::Empty("blend components"));
    }
    let sum: f64 = forms.iter().map(|(_, w)| w).sum();
    if (sum - 1.0).abs() > 1e-9 || forms.iter().any(|(_, w)| *w < 0.0) {
        return Err(Error::InvalidInput(format!("blend weights must be nonnegative and sum to 1, got {sum}")));
    }
    let live: Vec<_> = forms.into_iter().filter(|(_, w)| *w != 0.0).collect();
    if live.len() == 1 {
        return Ok(live.into_iter().next().unwrap().0);
    }
    Ok(WeightingForm::Blend { parts: live })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_term_examples() {
        let w = WeightingForm::single_term();
        assert_eq!(w.eval(&[1.0, 0.0, 0.0, 0.0]), 0.0);
        let v = w.eval(&[0.25; 4]);
        assert!((v / (6086.0 * 16f64.powf(-53.0 / 20.0)) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn face_reduction() {
        let w = WeightingForm::single_term();
        let (a, b, c) = (0.5f64, 0.3, 0.2);
        let reduced = 6086.0 * (a * b * c).powf(53.0 / 20.0);
        assert!((w.eval(&[a, b, c, 0.0]) / reduced - 1.0).abs() < 1e-13);
    }

    #[test]
    fn blend_rules() {
        let f = WeightingForm::single_term();
        let g = WeightingForm::two_term(1.0, 2.0, 3, 3);
        assert_eq!(blend(vec![(f.clone(), 1.0), (g.clone(), 0.0)]).unwrap(), f);
        assert!(blend(vec![(f.clone(), 0.7), (g.clone(), 0.2)]).is_err());
        let h = blend(vec![(f.clone(), 0.25), (g.clone(), 0.75)]).unwrap();
        let l = [0.4, 0.3, 0.2, 0.1];
        assert!((h.eval(&l) - 0.25 * f.eval(&l) - 0.75 * g.eval(&l)).abs() < 1e-15);
    }

    #[test]
    fn natural_dims() {
        assert_eq!(WeightingForm::single_term().natural_dim(), 4);
        assert_eq!(WeightingForm::qutrit(1.0).natural_dim(), 6);
    }

    #[test]
    fn json_round_trip() {
        let f = blend(vec![(WeightingForm::single_term(), 0.5), (WeightingForm::two_term(1.0, 2.0, 4, 3), 0.5)]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<WeightingForm>(&s).unwrap(), f);
    }
}
