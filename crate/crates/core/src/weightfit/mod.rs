//! Weighting functions of the eigenvalues whose integrals against a metric's
//! measure give separable volumes and hyperareas.
//!
//! A form is fitted so that its Hilbert-Schmidt integrals reproduce the
//! HS separable volume and hyperarea; the same form is then integrated
//! against other metrics to predict their separable quantities.

pub mod fit;
pub mod forms;
pub mod predict;
pub mod schur;

pub use fit::{fit_qutrit, fit_two_term, hyperarea_integral, volume_integral, QutritFit, Targets, TwoTermFit};
pub use forms::{blend, eval_w, WeightingForm};
pub use predict::{boundary_probability, predict, total_hyperarea, Measure, PredictionReport};
pub use schur::{flat_core_diagnostic, schur_classify, FlatCoreReport, SchurClass, SchurReport, Witness};

/// Weight of the first fit in the blend that balances the five non-HS
/// indicators.
pub const BLEND_WEIGHT: f64 = 0.570347;
