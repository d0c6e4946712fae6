use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

const MAX_SAFE: i64 = (1 << 53) - 1;

/// Integers outside the 53-bit safe range become decimal strings.
pub fn num(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if (-MAX_SAFE..=MAX_SAFE).contains(&v) => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn nums(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(num).collect())
}

/// Integral rationals as numbers, the rest as `"p/q"`.
pub fn rational(x: &BigRational) -> Value {
    if x.is_integer() {
        num(&x.to_integer())
    } else {
        Value::String(x.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violation,
    Failed,
    Usage,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Violation => "violation",
            Status::Failed | Status::Usage => "error",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Violation => 2,
            Status::Failed => 1,
            Status::Usage => 64,
        }
    }
}

pub struct Outcome {
    pub status: Status,
    pub payload: Value,
    /// CSV rendering, for tables.
    pub csv: Option<String>,
}

impl Outcome {
    pub fn ok(payload: Value) -> Self {
        Self { status: Status::Ok, payload, csv: None }
    }

    pub fn with_status(status: Status, payload: Value) -> Self {
        Self { status, payload, csv: None }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::with_status(Status::Usage, json!({ "kind": "usage", "message": message.into() }))
    }

    pub fn failed(message: impl Into<String>) -> Self {
        Self::with_status(Status::Failed, json!({ "kind": "check", "message": message.into() }))
    }

    pub fn render(&self, csv: bool) -> String {
        if let (true, Some(text)) = (csv && self.status == Status::Ok, &self.csv) {
            return text.clone();
        }
        let doc = json!({ "status": self.status.as_str(), "payload": self.payload });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }
}

/// A table with string cells, rendered as CSV or as JSON rows.
pub struct Table {
    pub name: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|v| match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn into_outcome(self) -> Outcome {
        let csv = self.to_csv();
        let payload = json!({
            "table": self.name,
            "columns": self.columns,
            "rows": self.rows,
        });
        Outcome { status: Status::Ok, payload, csv: Some(csv) }
    }
}
