use std::sync::atomic::{AtomicBool, Ordering};

use serde::{Deserialize, Serialize};

use super::forms::WeightingForm;
use crate::error::{Error, Result};
use crate::integrate::{quad_simplex, QuadratureSpec};
use crate::measures::{
    constants, density_unchecked, face_density_unchecked, orbit_volume, MetricKind, Quantity, System,
};

/// Separable volume and hyperarea a fitted form has to reproduce.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Targets {
    pub volume: f64,
    pub hyperarea: f64,
}

impl Targets {
    /// Hilbert-Schmidt separable volume and hyperarea of two qubits.
    pub fn hs_two_qubit() -> Self {
        Self::hs(System::TwoQubit)
    }

    pub fn hs(system: System) -> Self {
        let get = |q| constants(MetricKind::Hs, system, q).expect("table has HS separable entries").value;
        Self { volume: get(Quantity::SepVolume), hyperarea: get(Quantity::SepHyperarea) }
    }
}

/// Quadrature settings used for integrals of weighted densities over the
/// `dim`-simplex.
pub fn quadrature_spec(metric: MetricKind, dim: usize) -> QuadratureSpec {
    if dim >= 4 {
        return QuadratureSpec::new(dim, 2e-3).with_qmc_points(20_000_000);
    }
    match metric {
        MetricKind::Hs => QuadratureSpec::new(dim, 1e-11),
        MetricKind::KuboMori => QuadratureSpec::new(dim, 2e-6).with_warp_depth(2),
        _ => QuadratureSpec::new(dim, 1e-9),
    }
}

/// `orbit_volume(n) * integral of W * density` over the eigenvalue simplex.
pub fn volume_integral(form: &WeightingForm, metric: MetricKind, n: usize) -> Result<f64> {
    let spec = quadrature_spec(metric, n - 1);
    let v = quad_simplex(|l| form.eval(l) * density_unchecked(metric, l), &spec)?;
    Ok(orbit_volume(n) * v)
}

static FACE_FAULT: AtomicBool = AtomicBool::new(false);

/// Deliberately skews the face density used by [`hyperarea_integral`], so
/// the verification suite can be shown to catch it.
#[doc(hidden)]
pub fn set_face_fault(on: bool) {
    FACE_FAULT.store(on, Ordering::SeqCst);
}

/// Same over the face where the smallest eigenvalue vanishes.
pub fn hyperarea_integral(form: &WeightingForm, metric: MetricKind, n: usize) -> Result<f64> {
    let spec = quadrature_spec(metric, n - 2);
    let skew = FACE_FAULT.load(Ordering::SeqCst);
    let v = quad_simplex(
        |l| {
            let mut full = [0.0; 8];
            full[..l.len()].copy_from_slice(l);
            let d = face_density_unchecked(metric, l);
            form.eval(&full[..n]) * if skew { d * (1.0 + 0.05 * l[0]) } else { d }
        },
        &spec,
    )?;
    Ok(orbit_volume(n) * v)
}

/// Result of the two-term fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoTermFit {
    pub m1: u32,
    pub m2: u32,
    pub a: f64,
    pub b: f64,
    /// `[[V(e2^m1), V(e3^m2)], [A(e2^m1), A(e3^m2)]]`.
    pub moments: [[f64; 2]; 2],
    pub targets: Targets,
}

impl TwoTermFit {
    pub fn form(&self) -> WeightingForm {
        WeightingForm::two_term(self.a, self.b, self.m1, self.m2)
    }

    /// True when either coefficient came out negative.
    pub fn has_negative_coefficient(&self) -> bool {
        self.a < 0.0 || self.b < 0.0
    }
}

/// Solves for `a, b` in `a e2^m1 + b e3^m2` so that the HS volume and
/// hyperarea integrals hit `targets`.
pub fn fit_two_term(m1: u32, m2: u32, targets: Targets) -> Result<TwoTermFit> {
    if !(1..=4).contains(&m1) || !(1..=4).contains(&m2) {
        return Err(Error::InvalidInput(format!("exponents ({m1}, {m2}) outside 1..=4")));
    }
    let e2 = WeightingForm::two_term(1.0, 0.0, m1, 1);
    let e3 = WeightingForm::two_term(0.0, 1.0, 1, m2);
    let hs = MetricKind::Hs;
    let m = [
        [volume_integral(&e2, hs, 4)?, volume_integral(&e3, hs, 4)?],
        [hyperarea_integral(&e2, hs, 4)?, hyperarea_integral(&e3, hs, 4)?],
    ];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let scale = (m[0][0] * m[1][1]).abs().max((m[0][1] * m[1][0]).abs());
    if det.abs() <= 1e-12 * scale {
        return Err(Error::SingularSystem { det });
    }
    let a = (targets.volume * m[1][1] - m[0][1] * targets.hyperarea) / det;
    let b = (m[0][0] * targets.hyperarea - m[1][0] * targets.volume) / det;
    Ok(TwoTermFit { m1, m2, a, b, moments: m, targets })
}

/// Result of the qubit-qutrit single-power fit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QutritFit {
    pub c: f64,
    /// Volume integral of `e5^{9/5}` alone.
    pub moment: f64,
    pub target: f64,
}

impl QutritFit {
    pub fn form(&self) -> WeightingForm {
        WeightingForm::qutrit(self.c)
    }
}

/// Chooses `c` so that `c e5^{9/5}` reproduces the separable HS volume
/// `target` of a qubit and a qutrit.
pub fn fit_qutrit(target: f64) -> Result<QutritFit> {
    let moment = volume_integral(&WeightingForm::qutrit(1.0), MetricKind::Hs, 6)?;
    Ok(QutritFit { c: target / moment, moment, target })
}
