//! Run reports: ordered key-value output, printable as text lines or as a
//! single flat JSON object.
//!
//! Stdout is byte-reproducible for a fixed invocation; timing goes to
//! stderr so reruns with the same seed compare equal.

/// One reported value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    /// Fixed-point float, printed with six decimals.
    Float(f64),
    /// Float printed in scientific notation (for residuals).
    Scientific(f64),
    Int(u64),
    Bool(bool),
    Text(String),
}

/// Ordered collection of named results for one command run.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    entries: Vec<(&'static str, Value)>,
}

impl RunReport {
    pub fn new(command: &'static str) -> Self {
        let mut report = Self::default();
        report.push("command", Value::Text(command.to_string()));
        report
    }

    pub fn push(&mut self, key: &'static str, value: Value) {
        self.entries.push((key, value));
    }

    pub fn float(&mut self, key: &'static str, value: f64) {
        self.push(key, Value::Float(value));
    }

    pub fn int(&mut self, key: &'static str, value: u64) {
        self.push(key, Value::Int(value));
    }

    pub fn bool(&mut self, key: &'static str, value: bool) {
        self.push(key, Value::Bool(value));
    }

    /// Key-value text lines in insertion order.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            let rendered = match value {
                Value::Float(x) => format!("{x:.6}"),
                Value::Scientific(x) => format!("{x:e}"),
                Value::Int(n) => n.to_string(),
                Value::Bool(b) => b.to_string(),
                Value::Text(s) => s.clone(),
            };
            out.push_str(key);
            out.push_str(" = ");
            out.push_str(&rendered);
            out.push('\n');
        }
        out
    }

    /// A single flat JSON object with one field per entry.
    pub fn render_json(&self) -> String {
        let mut map = serde_json::Map::new();
        for (key, value) in &self.entries {
            let json = match value {
                Value::Float(x) | Value::Scientific(x) => serde_json::json!(x),
                Value::Int(n) => serde_json::json!(n),
                Value::Bool(b) => serde_json::json!(b),
                Value::Text(s) => serde_json::json!(s),
            };
            map.insert((*key).to_string(), json);
        }
        let mut rendered = serde_json::Value::Object(map).to_string();
        rendered.push('\n');
        rendered
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering_is_ordered_and_fixed_point() {
        let mut report = RunReport::new("demo");
        report.float("fidelity", 2.0 / 3.0);
        report.int("seed", 42);
        report.bool("non_classical", false);
        assert_eq!(
            report.render_text(),
            "command = demo\nfidelity = 0.666667\nseed = 42\nnon_classical = false\n"
        );
    }

    #[test]
    fn json_rendering_is_flat() {
        let mut report = RunReport::new("demo");
        report.float("x", 0.5);
        report.int("seed", 0);
        let parsed: serde_json::Value = serde_json::from_str(&report.render_json()).unwrap();
        assert_eq!(parsed["command"], "demo");
        assert_eq!(parsed["x"], 0.5);
        assert_eq!(parsed["seed"], 0);
    }
}
