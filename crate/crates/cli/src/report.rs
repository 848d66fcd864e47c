use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// The outcome of one command: what was claimed, the result, and a
/// concrete witness when a containment fails.
pub struct Report {
    pub command: &'static str,
    pub claim: String,
    /// Descriptive label of the statement being exercised.
    pub anchor: &'static str,
    pub parameters: Map<String, Value>,
    pub result: Value,
    pub witness: Option<Value>,
    pub status: Status,
    /// Plain-text rendering, one item per line.
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, anchor: &'static str, claim: impl Into<String>) -> Self {
        Report {
            command,
            claim: claim.into(),
            anchor,
            parameters: Map::new(),
            result: Value::Null,
            witness: None,
            status: Status::Pass,
            lines: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn fail_with(&mut self, witness: impl Into<Value>) {
        self.status = Status::Fail;
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
    }

    pub fn to_json(&self, wall_time_ms: u128) -> Value {
        let mut v = json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "claim": self.claim,
            "paper_anchor": self.anchor,
            "parameters": Value::Object(self.parameters.clone()),
            "result": self.result,
            "status": match self.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
            },
            "wall_time_ms": wall_time_ms as u64,
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        if let Some(w) = &self.witness {
            let w = match w {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("witness: {w}\n"));
        }
        out
    }
}
