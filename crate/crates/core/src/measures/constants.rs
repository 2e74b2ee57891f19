//! Known and conjectured volumes, hyperareas and separability probabilities.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::MetricKind;
use crate::error::{Error, Result};

/// Bumped whenever an entry changes; recorded in run manifests.
pub const CONSTANTS_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum System {
    /// Complex two-qubit states (15-dimensional).
    #[serde(rename = "2x2")]
    TwoQubit,
    /// Complex qubit-qutrit states (35-dimensional).
    #[serde(rename = "2x3")]
    QubitQutrit,
    /// Real two-qubit states (9-dimensional).
    #[serde(rename = "2x2-real")]
    RealTwoQubit,
}

impl System {
    pub fn name(&self) -> &'static str {
        match self {
            System::TwoQubit => "2x2",
            System::QubitQutrit => "2x3",
            System::RealTwoQubit => "2x2-real",
        }
    }

    /// Matrix dimension.
    pub fn dim(&self) -> usize {
        match self {
            System::TwoQubit | System::RealTwoQubit => 4,
            System::QubitQutrit => 6,
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2x2" => Ok(System::TwoQubit),
            "2x3" => Ok(System::QubitQutrit),
            "2x2-real" => Ok(System::RealTwoQubit),
            other => Err(Error::InvalidInput(format!("unknown system {other}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    SepVolume,
    SepHyperarea,
    SepProbability,
    TotalVolume,
    TotalHyperarea,
}

impl Quantity {
    pub fn name(&self) -> &'static str {
        match self {
            Quantity::SepVolume => "sep-volume",
            Quantity::SepHyperarea => "sep-hyperarea",
            Quantity::SepProbability => "sep-probability",
            Quantity::TotalVolume => "total-volume",
            Quantity::TotalHyperarea => "total-hyperarea",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sep-volume" => Ok(Quantity::SepVolume),
            "sep-hyperarea" => Ok(Quantity::SepHyperarea),
            "sep-probability" => Ok(Quantity::SepProbability),
            "total-volume" => Ok(Quantity::TotalVolume),
            "total-hyperarea" => Ok(Quantity::TotalHyperarea),
            other => Err(Error::InvalidInput(format!("unknown quantity {other}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstantKey {
    pub metric: MetricKind,
    pub system: System,
    pub quantity: Quantity,
}

impl fmt::Display for ConstantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.metric, self.system, self.quantity)
    }
}

/// One table row. `value` is evaluated from `symbolic` in double precision;
/// `quoted` is the decimal as usually printed, where one exists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantEntry {
    pub key: ConstantKey,
    pub symbolic: &'static str,
    pub value: f64,
    pub quoted: Option<f64>,
    /// Whether the value is a hard acceptance target.
    pub hard: bool,
    pub note: &'static str,
}

fn silver() -> f64 {
    2f64.sqrt() - 1.0
}

fn entry(
    metric: MetricKind,
    system: System,
    quantity: Quantity,
    symbolic: &'static str,
    value: f64,
    quoted: Option<f64>,
) -> ConstantEntry {
    ConstantEntry {
        key: ConstantKey { metric, system, quantity },
        symbolic,
        value,
        quoted,
        hard: true,
        note: "",
    }
}

/// The full table.
pub fn constant_table() -> Vec<ConstantEntry> {
    use MetricKind::*;
    use Quantity::*;
    use System::*;
    let s3 = 3f64.sqrt();
    let p2 = 2f64.powi(-15);
    let p1 = 2f64.powi(-14);
    vec![
        entry(Hs, TwoQubit, SepVolume, "(5 sqrt 3)^-7", (5.0 * s3).powi(-7), Some(2.73707e-7)),
        entry(Hs, TwoQubit, SepHyperarea, "(3^2 5^6)^-1", 1.0 / (9.0 * 5f64.powi(6)), Some(7.11111e-6)),
        entry(
            Hs,
            TwoQubit,
            SepProbability,
            "2^2 3 7^2 11 13 sqrt 3 / (5^4 pi^6)",
            4.0 * 3.0 * 49.0 * 11.0 * 13.0 * s3 / (625.0 * PI.powi(6)),
            Some(0.242379),
        ),
        ConstantEntry {
            note: "sep-volume / sep-probability",
            ..entry(Hs, TwoQubit, TotalVolume, "pi^6 / 851350500", PI.powi(6) / 851_350_500.0, None)
        },
        ConstantEntry {
            note: "hyperarea of the rank-deficient boundary",
            ..entry(Hs, TwoQubit, TotalHyperarea, "sqrt 3 pi^6 / 28378350", s3 * PI.powi(6) / 28_378_350.0, None)
        },
        entry(Bures, TwoQubit, SepVolume, "2^-15 (sqrt 2 - 1)/3", p2 * silver() / 3.0, Some(4.2136e-6)),
        entry(
            Bures,
            TwoQubit,
            SepProbability,
            "1680 (sqrt 2 - 1) / pi^8",
            1680.0 * silver() / PI.powi(8),
            Some(0.0733389),
        ),
        ConstantEntry {
            note: "sep-volume / sep-probability",
            ..entry(Bures, TwoQubit, TotalVolume, "pi^8 / (2^15 7!)", PI.powi(8) / (32768.0 * 5040.0), None)
        },
        entry(
            Bures,
            TwoQubit,
            SepHyperarea,
            "2^-14 43 (sqrt 2 - 1)/39",
            p1 * 43.0 * silver() / 39.0,
            Some(0.0000278746),
        ),
        entry(KuboMori, TwoQubit, SepVolume, "2^-15 10 (sqrt 2 - 1)", p2 * 10.0 * silver(), Some(0.000126408)),
        entry(
            AvgMonotone,
            TwoQubit,
            SepVolume,
            "2^-15 29 (sqrt 2 - 1)/9",
            p2 * 29.0 * silver() / 9.0,
            Some(0.0000407314),
        ),
        ConstantEntry {
            note: "commonly printed as 0.000221214, a misplaced zero",
            ..entry(
                WignerYanase,
                TwoQubit,
                SepVolume,
                "2^-15 7 (sqrt 2 - 1)/4",
                p2 * 7.0 * silver() / 4.0,
                Some(0.0000221214),
            )
        },
        ConstantEntry {
            hard: false,
            note: "includes the later factor-8 correction; quoted decimal is on a different scale",
            ..entry(
                AvgMonotone,
                TwoQubit,
                SepHyperarea,
                "8 2^-14 255 (sqrt 2 - 1)/128",
                8.0 * p1 * 255.0 * silver() / 128.0,
                Some(0.825191),
            )
        },
        entry(
            Hs,
            QubitQutrit,
            SepVolume,
            "(2^45 3 5^13 7 sqrt 30)^-1",
            1.0 / (2f64.powi(45) * 3.0 * 5f64.powi(13) * 7.0 * 30f64.sqrt()),
            Some(2.02423e-25),
        ),
        entry(
            Hs,
            QubitQutrit,
            SepHyperarea,
            "(2^46 3 5^12)^-1",
            1.0 / (2f64.powi(46) * 3.0 * 5f64.powi(12)),
            Some(1.94026e-23),
        ),
        ConstantEntry {
            note: "decimal is authoritative; the printed radicand differs between volume and hyperarea",
            ..entry(Bures, QubitQutrit, SepVolume, "1.03447e-19", 1.03447e-19, Some(1.03447e-19))
        },
        ConstantEntry {
            note: "decimal is authoritative; the printed closed form is inconsistent with it",
            ..entry(Bures, QubitQutrit, SepHyperarea, "1.45449e-18", 1.45449e-18, Some(1.45449e-18))
        },
        entry(Hs, RealTwoQubit, TotalVolume, "pi^4 / 60480", PI.powi(4) / 60480.0, Some(0.0016106)),
    ]
}

/// Looks up a single entry.
pub fn constants(metric: MetricKind, system: System, quantity: Quantity) -> Result<ConstantEntry> {
    let key = ConstantKey { metric, system, quantity };
    constant_table()
        .into_iter()
        .find(|e| e.key == key)
        .ok_or_else(|| Error::UnknownConstant(key.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_decimals_agree_with_values() {
        for e in constant_table() {
            if let (Some(q), true) = (e.quoted, e.hard) {
                // quoted decimals carry six significant digits
                assert!(((e.value - q) / q).abs() < 2e-5, "{}: {} vs {}", e.key, e.value, q);
            }
        }
    }

    #[test]
    fn examples() {
        let v = constants(MetricKind::Hs, System::TwoQubit, Quantity::SepVolume).unwrap();
        assert!((v.value / 2.73707e-7 - 1.0).abs() < 1e-5);
        let a = constants(MetricKind::Hs, System::TwoQubit, Quantity::SepHyperarea).unwrap();
        assert!((a.value / 7.11111e-6 - 1.0).abs() < 1e-6);
        let q = constants(MetricKind::Hs, System::QubitQutrit, Quantity::SepVolume).unwrap();
        assert!((q.value / 2.02423e-25 - 1.0).abs() < 1e-5);
    }

    #[test]
    fn totals_are_ratios_of_separable_pairs() {
        for m in [MetricKind::Hs, MetricKind::Bures] {
            let v = constants(m, System::TwoQubit, Quantity::SepVolume).unwrap().value;
            let p = constants(m, System::TwoQubit, Quantity::SepProbability).unwrap().value;
            let t = constants(m, System::TwoQubit, Quantity::TotalVolume).unwrap().value;
            assert!((v / p / t - 1.0).abs() < 1e-12, "{m}");
        }
    }

    #[test]
    fn unknown_key() {
        assert!(matches!(
            constants(MetricKind::KuboMori, System::TwoQubit, Quantity::SepHyperarea),
            Err(Error::UnknownConstant(_))
        ));
    }

    #[test]
    fn keys_are_unique() {
        let t = constant_table();
        for (i, a) in t.iter().enumerate() {
            for b in &t[i + 1..] {
                assert_ne!(a.key, b.key);
            }
        }
    }
}
