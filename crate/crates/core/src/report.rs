use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub pass: bool,
    /// Values that justify the verdict, as decimal strings.
    pub witness: String,
}

/// Named pass/fail conditions; passes iff every condition passes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pass: bool,
    pub conditions: BTreeMap<String, Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { pass: true, conditions: BTreeMap::new() }
    }

    pub fn add(&mut self, name: &str, pass: bool, witness: impl Into<String>) {
        self.pass &= pass;
        self.conditions.insert(name.to_string(), Check { pass, witness: witness.into() });
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.conditions.get(name).map(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.conditions.iter().filter(|(_, c)| !c.pass).map(|(k, _)| k.as_str()).collect()
    }
}
