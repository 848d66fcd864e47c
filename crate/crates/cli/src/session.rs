//! JSON session files.
//!
//! ```json
//! {
//!   "ring": "x,y,z,w",
//!   "order": "grevlex",
//!   "ideals": { "q": "x*z, x*w, y*z, y*w" },
//!   "families": { "F": { "kind": "symbolic-monomial", "ideal": "q" } },
//!   "command": "verify-theorem-b",
//!   "parameters": { "family": "F", "b": "q", "l": 2, "m-max": 4 }
//! }
//! ```
//!
//! A session is expanded into ordinary command-line arguments. Ideal names
//! are replaced by their definitions wherever an ideal is expected, and a
//! family name brings in the family's own flags.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::commands::Failure;

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Session {
    pub ring: String,
    #[serde(default)]
    pub order: Option<String>,
    #[serde(default)]
    pub ideals: BTreeMap<String, String>,
    #[serde(default)]
    pub families: BTreeMap<String, BTreeMap<String, Value>>,
    pub command: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, Value>,
}

/// Parameters that hold ideal text.
const IDEAL_KEYS: &[&str] = &["ideal", "other", "b"];

fn scalar(key: &str, v: &Value) -> Result<String, Failure> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        Value::Array(items) => items
            .iter()
            .map(|i| scalar(key, i))
            .collect::<Result<Vec<_>, _>>()
            .map(|v| v.join(",")),
        _ => Err(Failure::Usage(format!("unsupported value for `{key}` in session"))),
    }
}

impl Session {
    pub fn load(path: &Path) -> Result<Session, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read session {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid session {}: {e}", path.display())))
    }

    fn resolve_ideal(&self, text: &str) -> String {
        self.ideals
            .get(text.trim())
            .cloned()
            .unwrap_or_else(|| text.to_string())
    }

    fn push(&self, args: &mut Vec<String>, key: &str, value: &Value) -> Result<(), Failure> {
        let key = key.replace('_', "-");
        if let Value::Bool(b) = value {
            if *b {
                args.push(format!("--{key}"));
            }
            return Ok(());
        }
        let mut text = scalar(&key, value)?;
        if IDEAL_KEYS.contains(&key.as_str()) {
            text = self.resolve_ideal(&text);
        }
        args.push(format!("--{key}"));
        args.push(text);
        Ok(())
    }

    /// The equivalent argument list, starting with the subcommand.
    pub fn to_args(&self) -> Result<Vec<String>, Failure> {
        let mut args = vec![self.command.clone()];
        args.push("--ring".into());
        args.push(self.ring.clone());
        // valuation-order takes no order
        if let Some(order) = &self.order {
            if self.command != "valuation-order" {
                args.push("--order".into());
                args.push(order.clone());
            }
        }
        for (key, value) in &self.parameters {
            if key == "family" {
                let name = value
                    .as_str()
                    .ok_or_else(|| Failure::Usage("`family` must name a family of the session".into()))?;
                let family = self
                    .families
                    .get(name)
                    .ok_or_else(|| Failure::Usage(format!("unknown family `{name}`")))?;
                let kind = family
                    .get("kind")
                    .ok_or_else(|| Failure::Usage(format!("family `{name}` has no kind")))?;
                self.push(&mut args, "family", kind)?;
                for (k, v) in family.iter().filter(|(k, _)| k.as_str() != "kind") {
                    self.push(&mut args, k, v)?;
                }
            } else {
                self.push(&mut args, key, value)?;
            }
        }
        Ok(args)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_names() {
        let s: Session = serde_json::from_str(
            r#"{"ring":"x,y,z,w","ideals":{"q":"x*z, x*w, y*z, y*w"},
                "families":{"F":{"kind":"symbolic-monomial","ideal":"q"}},
                "command":"verify-theorem-b","parameters":{"family":"F","b":"q","l":2,"m_max":4}}"#,
        )
        .unwrap();
        let args = s.to_args().unwrap();
        assert_eq!(
            args,
            [
                "verify-theorem-b",
                "--ring",
                "x,y,z,w",
                "--b",
                "x*z, x*w, y*z, y*w",
                "--family",
                "symbolic-monomial",
                "--ideal",
                "x*z, x*w, y*z, y*w",
                "--l",
                "2",
                "--m-max",
                "4"
            ]
        );
    }

    #[test]
    fn unknown_family_is_rejected() {
        let s: Session =
            serde_json::from_str(r#"{"ring":"x,y","command":"family-check","parameters":{"family":"G"}}"#).unwrap();
        assert!(s.to_args().is_err());
    }
}
