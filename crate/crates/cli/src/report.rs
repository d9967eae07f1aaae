//! The structured report written for every command.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// A computation finished; nothing was claimed.
    Ok,
    /// Every checked property held.
    Verified,
    /// Some checked property failed.
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Verified => 0,
            Status::Failed => 1,
        }
    }

    pub fn from_check(passed: bool) -> Self {
        if passed {
            Status::Verified
        } else {
            Status::Failed
        }
    }
}

/// Keys are sorted so equal inputs serialize to equal bytes. Timings stay
/// empty unless requested.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub counts: BTreeMap<String, Value>,
    pub failures: Vec<Value>,
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: BTreeMap::new(),
            status: Status::Ok,
            counts: BTreeMap::new(),
            failures: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.parameters.insert(key.into(), to_value(value));
        self
    }

    pub fn count(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.counts.insert(key.into(), to_value(value));
        self
    }

    pub fn failure(&mut self, value: impl Serialize) -> &mut Self {
        self.failures.push(to_value(value));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}
