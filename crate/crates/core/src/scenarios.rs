//! Restricted real two-qubit scenarios: some Bloore variables are set to
//! zero and volumes are computed in the remaining ones.
//!
//! In the restricted setting `rho11 = rho22 = r` and `rho33 = rho44 = s`
//! with `s = 1/2 - r`. Each free `z_ij` carries the factor
//! `sqrt(rho_ii rho_jj)` of the HS volume element, so the volume is
//! `J(e_r, e_s) * vol_z(indicator)` where
//! `J = int_0^{1/2} r^{e_r} s^{e_s} dr = B(e_r + 1, e_s + 1) / 2^{e_r + e_s + 1}`
//! and only the z-volume needs Monte Carlo.
//!
//! In the full nine-dimensional real setting the diagonal is a point of the
//! 3-simplex weighted by `prod rho_ii^{3/2}`; its integral is
//! `Gamma(5/2)^4 / Gamma(10)`, and results carry the overall factor 16 that
//! matches the standard normalization of the real state space.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::Matrix4;
use rand::Rng;
use rand_distr::Gamma;
use serde::{Deserialize, Serialize};

use crate::bloore::{cad_map, factor_b, factor_d, minor3_factor, ZValues, FEASIBILITY_MINOR_OMIT, PAIRS, PAIR_LABELS};
use crate::error::{Error, Result};
use crate::integrate::{mc_paired, Estimate};

/// Pairs of z-variables exchanged by the partial transpose of a restricted
/// state; zeroing both members of one pair makes `B = D`.
pub const PT_PAIRS: [(usize, usize); 3] = [(2, 3), (1, 4), (0, 5)];

/// Overall factor applied to nine-dimensional volumes.
pub const NINE_D_SCALE: f64 = 16.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagMode {
    /// `rho11 = rho22`, `rho33 = rho44`.
    Restricted,
    /// All nine real parameters free.
    FullReal9d,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstraintLevel {
    FeasibleOnly,
    /// Feasible and one principal 3x3 minor of the partial transpose is
    /// nonnegative.
    #[serde(rename = "one-3x3-pt-minor")]
    OnePt3x3Minor,
    /// Feasible and the 2x2 minor `rho11 rho44 - rho23^2` of the partial
    /// transpose is nonnegative.
    #[serde(rename = "one-2x2-pt-minor")]
    OnePt2x2Minor,
    FullySeparable,
}

impl ConstraintLevel {
    pub fn name(&self) -> &'static str {
        match self {
            ConstraintLevel::FeasibleOnly => "feasible-only",
            ConstraintLevel::OnePt3x3Minor => "one-3x3-pt-minor",
            ConstraintLevel::OnePt2x2Minor => "one-2x2-pt-minor",
            ConstraintLevel::FullySeparable => "fully-separable",
        }
    }
}

impl fmt::Display for ConstraintLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstraintLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "feasible-only" | "feasible" => Ok(ConstraintLevel::FeasibleOnly),
            "one-3x3-pt-minor" => Ok(ConstraintLevel::OnePt3x3Minor),
            "one-2x2-pt-minor" => Ok(ConstraintLevel::OnePt2x2Minor),
            "fully-separable" | "separable" => Ok(ConstraintLevel::FullySeparable),
            other => Err(Error::InvalidInput(format!("unknown constraint level {other}"))),
        }
    }
}

/// Which variables are zeroed, how the diagonal is treated, and which
/// constraint defines the "separable" volume.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScenarioSpec {
    /// Indices into [`PAIRS`], sorted.
    pub zeroed: Vec<usize>,
    pub diag_mode: DiagMode,
    pub constraint: ConstraintLevel,
}

impl ScenarioSpec {
    pub fn restricted(zeroed: &[usize], constraint: ConstraintLevel) -> Result<Self> {
        let mut z = zeroed.to_vec();
        z.sort_unstable();
        z.dedup();
        if z.len() != zeroed.len() || z.iter().any(|&k| k >= 6) {
            return Err(Error::InvalidInput(format!("bad zeroed set {zeroed:?}")));
        }
        Ok(Self { zeroed: z, diag_mode: DiagMode::Restricted, constraint })
    }

    /// Restricted scenario from labels such as `["z23", "z24"]`.
    pub fn from_labels(labels: &[&str], constraint: ConstraintLevel) -> Result<Self> {
        let idx = labels
            .iter()
            .map(|l| {
                PAIR_LABELS
                    .iter()
                    .position(|p| p == l)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown variable {l}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::restricted(&idx, constraint)
    }

    pub fn full_real(constraint: ConstraintLevel) -> Self {
        Self { zeroed: Vec::new(), diag_mode: DiagMode::FullReal9d, constraint }
    }

    pub fn with_constraint(&self, constraint: ConstraintLevel) -> Self {
        Self { constraint, ..self.clone() }
    }

    /// Number of free real parameters.
    pub fn dimension(&self) -> usize {
        match self.diag_mode {
            DiagMode::Restricted => 7 - self.zeroed.len(),
            DiagMode::FullReal9d => 9,
        }
    }

    pub fn free(&self) -> Vec<usize> {
        (0..6).filter(|k| !self.zeroed.contains(k)).collect()
    }

    pub fn zeroed_labels(&self) -> Vec<&'static str> {
        self.zeroed.iter().map(|&k| PAIR_LABELS[k]).collect()
    }

    /// Whether `B = D` identically on this scenario.
    pub fn b_equals_d(&self) -> bool {
        self.diag_mode == DiagMode::Restricted
            && PT_PAIRS.iter().any(|&(a, b)| self.zeroed.contains(&a) && self.zeroed.contains(&b))
    }

    /// Whether the free variables are pairwise disjoint edges, in which case
    /// every box point is feasible.
    pub fn free_is_matching(&self) -> bool {
        let free = self.free();
        free.iter().enumerate().all(|(i, &a)| {
            free[i + 1..].iter().all(|&b| {
                let (p, q) = (PAIRS[a], PAIRS[b]);
                p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1
            })
        })
    }

    /// Exponents of `r` and `s` in the restricted volume element.
    pub fn jacobian_exponents(&self) -> (f64, f64) {
        let (mut er, mut es) = (0.0, 0.0);
        for k in self.free() {
            let (i, j) = PAIRS[k];
            for v in [i, j] {
                if v < 2 {
                    er += 0.5;
                } else {
                    es += 0.5;
                }
            }
        }
        (er, es)
    }

    /// `int_0^{1/2} r^{e_r} (1/2 - r)^{e_s} dr`.
    pub fn diagonal_factor(&self) -> f64 {
        let (er, es) = self.jacobian_exponents();
        beta(er + 1.0, es + 1.0) * 0.5f64.powf(er + es + 1.0)
    }

    /// Rejects constraint levels that do not apply to the diagonal mode.
    pub fn validate(&self) -> Result<()> {
        match (self.diag_mode, self.constraint) {
            (DiagMode::Restricted, ConstraintLevel::OnePt2x2Minor) => Err(Error::Unsupported(
                "2x2 minors of a restricted partial transpose are implied by the box".into(),
            )),
            (DiagMode::FullReal9d, ConstraintLevel::OnePt3x3Minor) => {
                Err(Error::Unsupported("3x3 partial-transpose minor bound is defined for restricted scenarios".into()))
            }
            (DiagMode::FullReal9d, _) if !self.zeroed.is_empty() => {
                Err(Error::InvalidInput("the nine-dimensional case has no zeroed variables".into()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ScenarioSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.diag_mode {
            DiagMode::Restricted => {
                let z = self.zeroed_labels();
                let z = if z.is_empty() { "none".to_string() } else { z.join("=") + "=0" };
                write!(f, "{}-d restricted [{z}] {}", self.dimension(), self.constraint)
            }
            DiagMode::FullReal9d => write!(f, "9-d real {}", self.constraint),
        }
    }
}

fn ln_gamma(x: f64) -> f64 {
    // Lanczos, g = 7, n = 9; plenty for half-integer arguments below 20.
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = C[0];
    let t = x + 7.5;
    for (i, c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

fn beta(a: f64, b: f64) -> f64 {
    (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp()
}

/// `16 * Gamma(5/2)^4 / Gamma(10)`: diagonal factor of nine-dimensional
/// volumes including the overall scale.
pub fn nine_d_diagonal_factor() -> f64 {
    NINE_D_SCALE * (4.0 * ln_gamma(2.5) - ln_gamma(10.0)).exp()
}

/// A closed-form target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Target {
    pub symbolic: String,
    pub value: f64,
}

fn target(symbolic: &str, value: f64) -> Option<Target> {
    Some(Target { symbolic: symbolic.to_string(), value })
}

/// Published targets for a scenario, where they exist.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub total: Option<Target>,
    pub separable: Option<Target>,
    pub probability: Option<Target>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// `B = D` identically, so every feasible state is separable.
    TrivialProbOne,
    Nontrivial,
}

fn is_triangle(free: &[usize]) -> bool {
    let mut deg = [0; 4];
    for &k in free {
        deg[PAIRS[k].0] += 1;
        deg[PAIRS[k].1] += 1;
    }
    free.len() == 3 && deg.iter().filter(|&&d| d == 2).count() == 3
}

/// Targets stated for `spec`.
pub fn expected_for(spec: &ScenarioSpec) -> Expected {
    let pi2 = PI * PI;
    let one = || target("1", 1.0);
    let mut e = Expected::default();
    if spec.diag_mode == DiagMode::FullReal9d {
        e.total = target("pi^4/60480", PI.powi(4) / 60480.0);
        if spec.constraint == ConstraintLevel::OnePt2x2Minor {
            e.separable = target("0.0014242052589", 0.0014242052589);
            e.probability = target("0.88426997055", 0.88426997055);
        }
        return e;
    }
    let trivial = spec.b_equals_d();
    let sep_level = spec.constraint == ConstraintLevel::FullySeparable;
    let free = spec.free();
    match spec.dimension() {
        7 => {
            e.total = target("pi^2/15120", pi2 / 15120.0);
            if spec.constraint == ConstraintLevel::OnePt3x3Minor {
                e.separable = target("pi^4/172032", PI.powi(4) / 172032.0);
                e.probability = target("45 pi^2/512", 45.0 * pi2 / 512.0);
            }
        }
        5 => {
            e.total = target("pi^2/1440", pi2 / 1440.0);
            if sep_level {
                if trivial {
                    e.separable = e.total.clone();
                    e.probability = one();
                } else if spec.zeroed == [3, 4] {
                    e.separable = target("0.00532303", 0.00532303);
                    e.probability = target("0.776643", 0.776643);
                } else if spec.zeroed == [0, 1] {
                    e.probability = target("0.776643", 0.776643);
                }
            }
        }
        4 => {
            if trivial {
                if sep_level {
                    e.probability = one();
                }
            } else {
                let tri = is_triangle(&free);
                e.total = if tri { target("pi^2/384", pi2 / 384.0) } else { target("pi/144", PI / 144.0) };
                if sep_level {
                    e.separable = target("(4+pi^2)/1536", (4.0 + pi2) / 1536.0);
                    e.probability = if tri {
                        target("(4+pi^2)/(4 pi^2)", (4.0 + pi2) / (4.0 * pi2))
                    } else {
                        target("3(4+pi^2)/(32 pi)", 3.0 * (4.0 + pi2) / (32.0 * PI))
                    };
                }
            }
        }
        3 => {
            e.total = if spec.free_is_matching() {
                target("1/12", 1.0 / 12.0)
            } else if spec.jacobian_exponents() == (1.0, 1.0) {
                target("pi/48", PI / 48.0)
            } else {
                target("pi^2/128", pi2 / 128.0)
            };
            if sep_level {
                e.separable = e.total.clone();
                e.probability = one();
            }
        }
        _ => {}
    }
    e
}

/// One row of the scenario catalog.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub spec: ScenarioSpec,
    pub label: String,
    pub zeroed_labels: Vec<String>,
    pub classification: Classification,
    pub expected: Expected,
}

fn catalog_entry(spec: ScenarioSpec) -> CatalogEntry {
    CatalogEntry {
        label: spec.to_string(),
        zeroed_labels: spec.zeroed_labels().iter().map(|s| s.to_string()).collect(),
        classification: if spec.b_equals_d() { Classification::TrivialProbOne } else { Classification::Nontrivial },
        expected: expected_for(&spec),
        spec,
    }
}

fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0u32..64)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..6).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// All restricted scenarios of the given dimension at the fully separable
/// level. Dimensions 3, 4 and 5 zero out 4, 3 and 2 variables; 6 and 7 are
/// also accepted.
pub fn enumerate_scenarios(dimension: usize) -> Result<Vec<CatalogEntry>> {
    if !(3..=7).contains(&dimension) {
        return Err(Error::InvalidInput(format!("restricted scenarios have dimension 3..=7, got {dimension}")));
    }
    subsets(7 - dimension)
        .into_iter()
        .map(|z| ScenarioSpec::restricted(&z, ConstraintLevel::FullySeparable).map(catalog_entry))
        .collect()
}

/// The scenarios with stated results, including the bound runs and the
/// nine-dimensional case.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for level in [ConstraintLevel::FeasibleOnly, ConstraintLevel::OnePt3x3Minor, ConstraintLevel::FullySeparable] {
        out.push(catalog_entry(ScenarioSpec::restricted(&[], level).expect("empty set is valid")));
    }
    for d in [5, 4, 3] {
        out.extend(enumerate_scenarios(d).expect("valid dimension"));
    }
    for level in [ConstraintLevel::FeasibleOnly, ConstraintLevel::OnePt2x2Minor] {
        out.push(catalog_entry(ScenarioSpec::full_real(level)));
    }
    out
}

/// Evaluated volumes. `separable` is the volume at the spec's constraint
/// level, an upper bound on the separable volume below `FullySeparable`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioResult {
    pub spec: ScenarioSpec,
    pub total: Estimate,
    pub separable: Estimate,
    pub probability: Estimate,
    pub expected: Expected,
}

impl ScenarioResult {
    /// `(name, estimate, target)` triples that have a target.
    pub fn comparisons(&self) -> Vec<(&'static str, Estimate, &Target)> {
        let mut v = Vec::new();
        for (name, est, t) in [
            ("total", self.total, &self.expected.total),
            ("separable", self.separable, &self.expected.separable),
            ("probability", self.probability, &self.expected.probability),
        ] {
            if let Some(t) = t {
                v.push((name, est, t));
            }
        }
        v
    }
}

fn restricted_indicator(z: &ZValues, level: ConstraintLevel) -> (bool, bool) {
    let feasible = factor_b(z) >= 0.0 && minor3_factor(z, FEASIBILITY_MINOR_OMIT) >= 0.0;
    if !feasible {
        return (false, false);
    }
    let passes = match level {
        ConstraintLevel::FeasibleOnly | ConstraintLevel::OnePt2x2Minor => true,
        ConstraintLevel::OnePt3x3Minor => minor3_factor(&z.pt_swapped(), FEASIBILITY_MINOR_OMIT) >= 0.0,
        ConstraintLevel::FullySeparable => factor_d(z) >= 0.0,
    };
    (true, passes)
}

/// Partial transpose of the real composed matrix has a nonnegative
/// determinant; for two qubits this is PPT.
fn real_ppt(diag: &[f64; 4], z: &ZValues) -> bool {
    let mut m = Matrix4::zeros();
    for i in 0..4 {
        m[(i, i)] = diag[i];
        for j in 0..4 {
            if i != j {
                m[(i, j)] = (diag[i] * diag[j]).sqrt() * z.get(i, j);
            }
        }
    }
    // swap the (0,3) and (1,2) blocks' off-diagonal entries
    let (a, b) = (m[(0, 3)], m[(1, 2)]);
    m[(0, 3)] = b;
    m[(3, 0)] = b;
    m[(1, 2)] = a;
    m[(2, 1)] = a;
    m.determinant() >= 0.0
}

fn sample_diag<R: Rng + ?Sized>(rng: &mut R) -> [f64; 4] {
    let g = Gamma::new(2.5, 1.0).expect("valid shape");
    let mut d = [0.0; 4];
    for x in d.iter_mut() {
        *x = rng.sample(g);
    }
    let s: f64 = d.iter().sum();
    d.map(|x| x / s)
}

fn sample_box<R: Rng + ?Sized>(rng: &mut R, free: &[usize]) -> ZValues {
    let mut z = [0.0; 6];
    for &k in free {
        z[k] = 2.0 * rng.random::<f64>() - 1.0;
    }
    ZValues(z)
}

/// Monte Carlo evaluation with `n` samples.
pub fn evaluate_scenario(spec: &ScenarioSpec, n: u64, seed: u64) -> Result<ScenarioResult> {
    spec.validate()?;
    let expected = expected_for(spec);
    match spec.diag_mode {
        DiagMode::Restricted => {
            let free = spec.free();
            let scale = spec.diagonal_factor() * 2f64.powi(free.len() as i32);
            if spec.free_is_matching() {
                // every box point is feasible and B = D
                let total = Estimate { value: scale, stderr: 0.0, n_samples: 1, seed };
                return Ok(ScenarioResult {
                    spec: spec.clone(),
                    total,
                    separable: total,
                    probability: Estimate { value: 1.0, ..total },
                    expected,
                });
            }
            let level = if spec.b_equals_d() && spec.constraint == ConstraintLevel::FullySeparable {
                ConstraintLevel::FeasibleOnly
            } else {
                spec.constraint
            };
            let acc = mc_paired(n, seed, |rng| {
                let z = sample_box(rng, &free);
                let (f, s) = restricted_indicator(&z, level);
                Ok((s as u8 as f64, f as u8 as f64))
            })?;
            let total = acc.y.estimate(scale, seed);
            let separable = acc.x.estimate(scale, seed);
            let probability = if level == ConstraintLevel::FeasibleOnly {
                Estimate { value: 1.0, stderr: 0.0, n_samples: acc.x.n, seed }
            } else {
                acc.ratio(seed)
            };
            Ok(ScenarioResult { spec: spec.clone(), total, separable, probability, expected })
        }
        DiagMode::FullReal9d => {
            let scale = nine_d_diagonal_factor() * 64.0;
            let level = spec.constraint;
            let acc = mc_paired(n, seed, |rng| {
                let diag = sample_diag(rng);
                let z = sample_box(rng, &[0, 1, 2, 3, 4, 5]);
                let feasible = factor_b(&z) >= 0.0 && minor3_factor(&z, FEASIBILITY_MINOR_OMIT) >= 0.0;
                let passes = feasible
                    && match level {
                        ConstraintLevel::FeasibleOnly => true,
                        ConstraintLevel::OnePt2x2Minor => diag[0] * diag[3] - diag[1] * diag[2] * z.z23() * z.z23() >= 0.0,
                        ConstraintLevel::FullySeparable => real_ppt(&diag, &z),
                        ConstraintLevel::OnePt3x3Minor => unreachable!("rejected by validate"),
                    };
                Ok((passes as u8 as f64, feasible as u8 as f64))
            })?;
            let total = acc.y.estimate(scale, seed);
            let separable = acc.x.estimate(scale, seed);
            let probability = if level == ConstraintLevel::FeasibleOnly {
                Estimate { value: 1.0, stderr: 0.0, n_samples: acc.x.n, seed }
            } else {
                acc.ratio(seed)
            };
            Ok(ScenarioResult { spec: spec.clone(), total, separable, probability, expected })
        }
    }
}

/// Volume under a partial set of partial-transpose constraints.
pub fn upper_bound_run(spec: &ScenarioSpec, n: u64, seed: u64) -> Result<ScenarioResult> {
    if spec.constraint == ConstraintLevel::FullySeparable {
        return Err(Error::InvalidInput("an upper-bound run needs a constraint level below fully-separable".into()));
    }
    evaluate_scenario(spec, n, seed)
}

/// Doubles the sample count from `n0` until the separable volume's relative
/// standard error is at most `rel_stderr`, or `max_n` is exceeded.
pub fn evaluate_to_precision(spec: &ScenarioSpec, rel_stderr: f64, n0: u64, max_n: u64, seed: u64) -> Result<ScenarioResult> {
    let mut n = n0.max(1000);
    loop {
        let r = evaluate_scenario(spec, n, seed)?;
        let achieved = if r.separable.value == 0.0 { f64::INFINITY } else { r.separable.stderr / r.separable.value };
        if achieved <= rel_stderr {
            return Ok(r);
        }
        if n >= max_n {
            return Err(Error::NoConvergence { estimate: r.separable.value, achieved });
        }
        n = (2 * n).min(max_n);
    }
}

/// Feasible z-volume of the nine-dimensional case through the nested
/// integration limits, scaled like [`evaluate_scenario`].
pub fn nine_d_volume_cad(n: u64, seed: u64) -> Result<Estimate> {
    let acc = mc_paired(n, seed, |rng| {
        let mut u = [0.0; 6];
        u.iter_mut().for_each(|x| *x = rng.random());
        Ok((cad_map(&u).map_or(0.0, |(_, w)| w), 0.0))
    })?;
    Ok(acc.x.estimate(nine_d_diagonal_factor(), seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_values() {
        assert!((beta(4.0, 4.0) - 1.0 / 140.0).abs() < 1e-14);
        assert!((beta(0.5, 0.5) - PI).abs() < 1e-12);
    }

    #[test]
    fn seven_d_diagonal_factor() {
        let s = ScenarioSpec::restricted(&[], ConstraintLevel::FeasibleOnly).unwrap();
        assert_eq!(s.jacobian_exponents(), (3.0, 3.0));
        assert!((s.diagonal_factor() - 1.0 / 17920.0).abs() < 1e-16);
        assert_eq!(s.dimension(), 7);
    }

    #[test]
    fn nine_d_factor() {
        let g = 0.75 * PI.sqrt();
        let want = 16.0 * g.powi(4) / 362_880.0;
        assert!((nine_d_diagonal_factor() / want - 1.0).abs() < 1e-13);
    }

    #[test]
    fn counts() {
        let four = enumerate_scenarios(4).unwrap();
        assert_eq!(four.len(), 20);
        assert_eq!(four.iter().filter(|e| e.classification == Classification::TrivialProbOne).count(), 12);
        assert_eq!(enumerate_scenarios(3).unwrap().len(), 15);
        assert_eq!(enumerate_scenarios(5).unwrap().len(), 15);
        assert!(enumerate_scenarios(2).is_err());
    }

    #[test]
    fn three_d_totals_split_8_4_3() {
        let three = enumerate_scenarios(3).unwrap();
        let count = |s: &str| three.iter().filter(|e| e.expected.total.as_ref().unwrap().symbolic == s).count();
        assert_eq!((count("pi^2/128"), count("pi/48"), count("1/12")), (8, 4, 3));
    }

    #[test]
    fn three_d_totals_from_jacobian() {
        for e in enumerate_scenarios(3).unwrap() {
            let s = &e.spec;
            let zvol = if s.free_is_matching() { 4.0 } else { PI };
            let v = s.diagonal_factor() * zvol;
            let t = e.expected.total.unwrap().value;
            assert!((v / t - 1.0).abs() < 1e-12, "{s}");
        }
    }

    #[test]
    fn four_d_triangles_and_stars() {
        let four = enumerate_scenarios(4).unwrap();
        let tri = four.iter().filter(|e| e.expected.total.as_ref().is_some_and(|t| t.symbolic == "pi^2/384")).count();
        let star = four.iter().filter(|e| e.expected.total.as_ref().is_some_and(|t| t.symbolic == "pi/144")).count();
        assert_eq!((tri, star), (4, 4));
        let s = ScenarioSpec::from_labels(&["z12", "z23", "z24"], ConstraintLevel::FullySeparable).unwrap();
        assert_eq!(expected_for(&s).total.unwrap().symbolic, "pi^2/384");
        // the triangle's z-volume is the volume of 3x3 correlation matrices, pi^2/2
        assert!((s.diagonal_factor() * PI * PI / 2.0 / (PI * PI / 384.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn invalid_combinations() {
        let s = ScenarioSpec::restricted(&[], ConstraintLevel::OnePt2x2Minor).unwrap();
        assert!(matches!(evaluate_scenario(&s, 1000, 1), Err(Error::Unsupported(_))));
        assert!(ScenarioSpec::restricted(&[1, 1], ConstraintLevel::FeasibleOnly).is_err());
        assert!(ScenarioSpec::from_labels(&["z15"], ConstraintLevel::FeasibleOnly).is_err());
        let full = ScenarioSpec::full_real(ConstraintLevel::FullySeparable);
        assert!(upper_bound_run(&full, 1000, 1).is_err());
    }

    #[test]
    fn matching_scenario_is_exact() {
        let s = ScenarioSpec::from_labels(&["z12", "z13", "z14", "z24"], ConstraintLevel::FullySeparable).unwrap();
        // free: z23, z34 share vertex 3, not a matching
        assert!(!s.free_is_matching());
        let s = ScenarioSpec::from_labels(&["z13", "z14", "z23", "z24"], ConstraintLevel::FullySeparable).unwrap();
        let r = evaluate_scenario(&s, 1000, 1).unwrap();
        assert_eq!(r.total.stderr, 0.0);
        assert!((r.total.value - 1.0 / 12.0).abs() < 1e-15);
        assert_eq!(r.probability.value, 1.0);
    }

    #[test]
    fn seven_d_total_quick() {
        let s = ScenarioSpec::restricted(&[], ConstraintLevel::FullySeparable).unwrap();
        let r = evaluate_scenario(&s, 400_000, 3).unwrap();
        let t = PI * PI / 15120.0;
        assert!(r.total.agrees(t, 4.0, 0.0), "{:?}", r.total);
        assert!(r.separable.value < r.total.value);
    }

    #[test]
    fn real_ppt_agrees_with_factor_d_on_restricted_states() {
        let mut rng = crate::integrate::mc::chunk_rng(11, 0);
        for _ in 0..2000 {
            let z = sample_box(&mut rng, &[0, 1, 2, 3, 4, 5]);
            if !restricted_indicator(&z, ConstraintLevel::FeasibleOnly).0 {
                continue;
            }
            let r: f64 = 0.05 + 0.4 * rng.random::<f64>();
            let diag = [r, r, 0.5 - r, 0.5 - r];
            assert_eq!(real_ppt(&diag, &z), factor_d(&z) >= 0.0);
        }
    }
}
