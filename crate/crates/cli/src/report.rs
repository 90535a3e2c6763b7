use std::fmt::Write;

use serde_json::{json, Map, Value};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: Value,
    pub computed: Value,
}

/// Outcome of one pipeline. Keys serialize sorted because `serde_json`
/// maps are ordered.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
    pub metrics: Map<String, Value>,
    /// Extra lines for text output.
    pub lines: Vec<String>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: Map::new(),
            checks: Vec::new(),
            metrics: Map::new(),
            lines: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Value>) {
        self.params.insert(key.to_string(), round_floats(v.into()));
    }

    pub fn metric(&mut self, key: &str, v: impl Into<Value>) {
        self.metrics.insert(key.to_string(), round_floats(v.into()));
    }

    pub fn check(&mut self, name: &str, expected: impl Into<Value>, computed: impl Into<Value>) -> bool {
        let expected = round_floats(expected.into());
        let computed = round_floats(computed.into());
        let passed = expected == computed;
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            expected,
            computed,
        });
        passed
    }

    /// A check whose pass condition is not plain equality.
    pub fn check_with(&mut self, name: &str, passed: bool, expected: impl Into<Value>, computed: impl Into<Value>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            expected: round_floats(expected.into()),
            computed: round_floats(computed.into()),
        });
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", self.command, c.name))
            .collect()
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "passed": c.passed,
                    "expected": c.expected,
                    "computed": c.computed,
                })
            })
            .collect();
        let mut v = json!({
            "command": self.command,
            "params": self.params,
            "checks": checks,
            "metrics": self.metrics,
            "passed": self.passed(),
            "version": env!("CARGO_PKG_VERSION"),
        });
        if timing {
            v["elapsed_ms"] = round_floats(json!(self.elapsed_ms));
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            writeln!(s, "{l}").unwrap();
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(s, "{tag} {} {}", self.command, c.name).unwrap();
        }
        s
    }
}

/// Rounds every float to 12 significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(f64::NAN);
            let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
            json!(r)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_keep_twelve_digits() {
        assert_eq!(round_floats(json!(2.0 / 3.0)), json!(0.666666666667));
        assert_eq!(round_floats(json!([0.1, 2])), json!([0.1, 2]));
    }

    #[test]
    fn keys_are_sorted() {
        let mut r = Report::new("x");
        r.metric("zeta", 1);
        r.metric("alpha", 2);
        let text = serde_json::to_string(&r.to_json(false)).unwrap();
        assert!(text.find("alpha").unwrap() < text.find("zeta").unwrap());
        assert!(!text.contains("elapsed_ms"));
    }
}
