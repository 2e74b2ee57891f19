use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::fit::{hyperarea_integral, volume_integral};
use super::forms::WeightingForm;
use crate::error::{Error, Result};
use crate::measures::{constants, MetricKind, Quantity, System};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Measure {
    Volume,
    Hyperarea,
}

impl Measure {
    pub fn name(&self) -> &'static str {
        match self {
            Measure::Volume => "volume",
            Measure::Hyperarea => "hyperarea",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "volume" => Ok(Measure::Volume),
            "hyperarea" => Ok(Measure::Hyperarea),
            other => Err(Error::InvalidInput(format!("unknown measure {other}"))),
        }
    }
}

fn system_for(n: usize) -> System {
    if n == 6 {
        System::QubitQutrit
    } else {
        System::TwoQubit
    }
}

/// A predicted separable volume or hyperarea against its conjecture.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictionReport {
    pub form: String,
    pub metric: MetricKind,
    pub quantity: Measure,
    pub predicted: f64,
    pub conjectured: Option<f64>,
    pub symbolic: Option<String>,
    pub ratio: Option<f64>,
}

/// Integrates `form` against the metric's volume or face measure.
pub fn predict(form: &WeightingForm, metric: MetricKind, quantity: Measure) -> Result<PredictionReport> {
    let n = form.natural_dim();
    let predicted = match quantity {
        Measure::Volume => volume_integral(form, metric, n)?,
        Measure::Hyperarea => hyperarea_integral(form, metric, n)?,
    };
    let key = match quantity {
        Measure::Volume => Quantity::SepVolume,
        Measure::Hyperarea => Quantity::SepHyperarea,
    };
    let entry = constants(metric, system_for(n), key).ok();
    let conjectured = entry.as_ref().map(|e| e.value);
    Ok(PredictionReport {
        form: form.label(),
        metric,
        quantity,
        predicted,
        conjectured,
        symbolic: entry.map(|e| e.symbolic.to_string()),
        ratio: conjectured.map(|c| predicted / c),
    })
}

/// Total hyperarea under `metric`, the unweighted face integral.
pub fn total_hyperarea(metric: MetricKind, n: usize) -> Result<f64> {
    hyperarea_integral(&WeightingForm::Power { coeff: 1.0, k: 0, exponent: 0.0 }, metric, n)
}

/// Separability probability of boundary states implied by `form`.
pub fn boundary_probability(form: &WeightingForm, metric: MetricKind) -> Result<f64> {
    let n = form.natural_dim();
    Ok(hyperarea_integral(form, metric, n)? / total_hyperarea(metric, n)?)
}

/// Writes reports as a JSON array.
pub fn write_json<W: Write>(reports: &[PredictionReport], out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, reports).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// Writes reports as CSV, one row per (form, metric, quantity).
pub fn write_csv<W: Write>(reports: &[PredictionReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::InvalidInput(e.to_string());
    w.write_record(["form", "metric", "quantity", "predicted", "conjectured", "ratio"]).map_err(io)?;
    let num = |x: Option<f64>| x.map(|v| format!("{v:.15e}")).unwrap_or_default();
    for r in reports {
        w.write_record([
            r.form.clone(),
            r.metric.to_string(),
            r.quantity.to_string(),
            format!("{:.15e}", r.predicted),
            num(r.conjectured),
            num(r.ratio),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::InvalidInput(e.to_string()))
}
