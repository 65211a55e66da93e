use serde::{Deserialize, Serialize};
use serde_json::Value;

use linial_core::ehrhart::QuasiPoly;
use linial_core::verify::ComplexRootSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<ErrorInfo>,
    pub schema_version: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub name: String,
    pub message: String,
}

#[derive(Serialize)]
pub struct EhrhartWithSeries<'a> {
    #[serde(flatten)]
    pub quasi: &'a QuasiPoly,
    pub series: Vec<String>,
}

#[derive(Serialize)]
pub struct LimitRoots {
    pub max_real_part: f64,
    #[serde(flatten)]
    pub set: ComplexRootSet,
}

#[derive(Serialize)]
pub struct ModqCount {
    pub count: u64,
    pub char_quasi: String,
    pub agrees: bool,
}

/// Pretty JSON with object keys sorted, so that parsing and re-printing is
/// the identity.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable output");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable output");
    s.push('\n');
    s
}

pub fn to_compact_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable output");
    serde_json::to_string(&v).expect("serializable output") + "\n"
}
