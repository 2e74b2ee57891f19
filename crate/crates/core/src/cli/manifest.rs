//! Run manifests: everything needed to repeat a command and check its output.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::measures::constants::CONSTANTS_VERSION;

/// Version of the manifest layout.
pub const MANIFEST_SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema: u32,
    pub tool_version: String,
    /// Arguments after the program name.
    pub command_line: Vec<String>,
    pub command: String,
    pub seeds: Vec<u64>,
    pub samples: Vec<u64>,
    pub tolerances: BTreeMap<String, f64>,
    pub constants_version: String,
    pub threads: usize,
    pub wall_time_s: f64,
    pub payload: Value,
}

impl RunManifest {
    pub fn new(command_line: Vec<String>, command: &str) -> Self {
        Self {
            schema: MANIFEST_SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command_line,
            command: command.to_string(),
            seeds: Vec::new(),
            samples: Vec::new(),
            tolerances: BTreeMap::new(),
            constants_version: CONSTANTS_VERSION.to_string(),
            threads: rayon::current_num_threads(),
            wall_time_s: 0.0,
            payload: Value::Null,
        }
    }

    pub fn read(path: &Path) -> io::Result<Self> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    /// Writes `<path>` atomically.
    pub fn write(&self, path: &Path) -> io::Result<()> {
        write_atomic(path, self.to_json().as_bytes())
    }
}

fn tmp_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(format!(".tmp{}", std::process::id()));
    path.with_file_name(name)
}

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let tmp = tmp_path(path);
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

/// Rounds to 15 significant digits, the precision used in all outputs.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

/// Applies [`sig15`] to every number in a JSON value.
pub fn round_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if !n.is_i64() && !n.is_u64() => serde_json::Number::from_f64(sig15(x)).map_or(Value::Null, Value::Number),
            _ => Value::Number(n),
        },
        Value::Array(a) => Value::Array(a.into_iter().map(round_numbers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_numbers(v))).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(sig15(0.1 + 0.2), 0.3);
        assert_eq!(sig15(1.0 / 3.0), 0.333333333333333);
        assert_eq!(sig15(0.0), 0.0);
        let v = round_numbers(serde_json::json!({"a": [1.0 / 3.0, 7], "b": "x"}));
        assert_eq!(v, serde_json::json!({"a": [0.333333333333333, 7], "b": "x"}));
    }

    #[test]
    fn atomic_round_trip() {
        let dir = std::env::temp_dir().join(format!("sepvol-manifest-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("m.json");
        let mut m = RunManifest::new(vec!["verify".into()], "verify");
        m.payload = serde_json::json!({"x": 1.5});
        m.write(&path).unwrap();
        assert_eq!(RunManifest::read(&path).unwrap(), m);
        assert!(!tmp_path(&path).exists());
        fs::remove_dir_all(&dir).unwrap();
    }
}
