//! The single report every invocation prints, in JSON or flattened text.

use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "v1";

/// Exit codes shared by every command.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const DOMAIN: u8 = 2;
    pub const MISMATCH: u8 = 3;
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
    /// Payload still worth printing, e.g. the mismatching verification result.
    pub result: Option<Value>,
}

impl Failure {
    pub fn usage(kind: &'static str, message: impl ToString) -> Self {
        Self::new(exit::USAGE, kind, message)
    }

    pub fn domain(kind: &'static str, message: impl ToString) -> Self {
        Self::new(exit::DOMAIN, kind, message)
    }

    pub fn mismatch(message: impl ToString, result: Value) -> Self {
        Self {
            result: Some(result),
            ..Self::new(exit::MISMATCH, "VerificationMismatch", message)
        }
    }

    fn new(code: u8, kind: &'static str, message: impl ToString) -> Self {
        Self {
            code,
            kind,
            message: message.to_string(),
            result: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outcome: Result<Value, Failure>,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        match &self.outcome {
            Ok(_) => exit::OK,
            Err(f) => f.code,
        }
    }

    pub fn to_json(&self) -> Value {
        let (result, status, error) = match &self.outcome {
            Ok(v) => (v.clone(), "ok", Value::Null),
            Err(f) => (
                f.result.clone().unwrap_or(Value::Null),
                "error",
                json!({ "code": f.code, "kind": f.kind, "message": f.message }),
            ),
        };
        let mut obj = Map::new();
        obj.insert("v".into(), SCHEMA_VERSION.into());
        obj.insert("command".into(), self.command.clone().into());
        obj.insert("inputs".into(), self.inputs.clone());
        obj.insert("result".into(), result);
        obj.insert("status".into(), status.into());
        if !error.is_null() {
            obj.insert("error".into(), error);
        }
        Value::Object(obj)
    }

    pub fn render(&self, format: Format) -> String {
        let value = self.to_json();
        match format {
            Format::Json => format!(
                "{}\n",
                serde_json::to_string_pretty(&value).expect("json value")
            ),
            Format::Text => {
                let mut lines = Vec::new();
                flatten("", &value, &mut lines);
                lines
                    .into_iter()
                    .map(|(k, v)| format!("{k}: {v}\n"))
                    .collect()
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Text form: one `path: value` line per leaf. Arrays of scalars stay on one
/// line, space separated, so numbers read exactly as in the JSON.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&key(k), child, out);
            }
        }
        Value::Array(items) => {
            let scalars: Option<Vec<String>> = items.iter().map(scalar).collect();
            match scalars {
                Some(s) => out.push((prefix.to_string(), s.join(" "))),
                None => {
                    for (i, child) in items.iter().enumerate() {
                        flatten(&format!("{prefix}[{i}]"), child, out);
                    }
                }
            }
        }
        other => out.push((prefix.to_string(), scalar(other).unwrap_or_default())),
    }
}
