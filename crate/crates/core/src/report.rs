use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1.0";

/// Wrapper written around every command's JSON payload.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportEnvelope<T: Serialize> {
    pub schema_version: &'static str,
    pub command: String,
    pub config: Value,
    pub started_at: String,
    pub finished_at: String,
    pub payload: T,
}

impl<T: Serialize> ReportEnvelope<T> {
    pub fn new(
        command: impl Into<String>,
        config: Value,
        started_at: String,
        finished_at: String,
        payload: T,
    ) -> Self {
        ReportEnvelope {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            config,
            started_at,
            finished_at,
            payload,
        }
    }
}

/// Rounds to 12 significant digits so floating noise does not leak into
/// serialized output.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let s = format!("{x:.11e}");
    s.parse().unwrap_or(x)
}

/// Applies [`round_sig`] to every float inside a JSON value.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n
                .as_f64()
                .and_then(|x| serde_json::Number::from_f64(round_sig(x)))
            {
                *n = r;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Serializes `payload` to a JSON value with floats rounded.
pub fn to_rounded_value<T: Serialize>(payload: &T) -> serde_json::Result<Value> {
    let mut v = serde_json::to_value(payload)?;
    round_floats(&mut v);
    Ok(v)
}
