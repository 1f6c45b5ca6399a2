//! Stable JSON: sorted keys, nine significant digits.

use serde_json::{Map, Number, Value};
use std::collections::BTreeMap;

/// Rounds to nine significant digits; non-finite values become strings.
pub fn num(v: f64) -> Value {
    if v.is_nan() {
        return Value::String("nan".into());
    }
    if v.is_infinite() {
        return Value::String(if v > 0.0 { "inf" } else { "-inf" }.into());
    }
    let rounded: f64 = format!("{v:.8e}").parse().expect("formatted float parses");
    Value::Number(Number::from_f64(rounded).expect("finite"))
}

/// Angle in degrees on `[0, 180)`, or `"nan"` when undefined.
pub fn angle_deg(angle: Option<f64>) -> Value {
    match angle {
        None => Value::String("nan".into()),
        Some(a) => {
            let d = (a.to_degrees() * 1e9).round() / 1e9;
            num(if d >= 180.0 { d - 180.0 } else { d })
        }
    }
}

#[derive(Debug, Default, Clone)]
pub struct Obj(BTreeMap<String, Value>);

impl Obj {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn f(mut self, key: &str, v: f64) -> Self {
        self.0.insert(key.into(), num(v));
        self
    }
    pub fn v(mut self, key: &str, v: Value) -> Self {
        self.0.insert(key.into(), v);
        self
    }
    pub fn s(mut self, key: &str, v: &str) -> Self {
        self.0.insert(key.into(), Value::String(v.into()));
        self
    }
    pub fn u(mut self, key: &str, v: u64) -> Self {
        self.0.insert(key.into(), Value::Number(v.into()));
        self
    }
    pub fn b(mut self, key: &str, v: bool) -> Self {
        self.0.insert(key.into(), Value::Bool(v));
        self
    }
    pub fn into_value(self) -> Value {
        Value::Object(self.0.into_iter().collect::<Map<String, Value>>())
    }
    pub fn render(self) -> String {
        let mut s = serde_json::to_string(&self.into_value()).expect("json value serializes");
        s.push('\n');
        s
    }
}
