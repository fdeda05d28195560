//! Reports: a machine form with sorted keys and a human form.

use std::fmt::Display;

use serde::Serialize;
use serde_json::{Map, Value};

use hom_leibniz::report::{CheckItem, CheckReport};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Clone, Debug)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub defect: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn flag(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, witness: None }
    }

    fn from_item<S: Display>(prefix: &str, i: &CheckItem<S>) -> Self {
        Check {
            name: format!("{prefix}{}", i.name),
            passed: i.passed,
            witness: i.witness.as_ref().map(|w| Witness {
                tuple: w.tuple.clone(),
                defect: w.defect.0.iter().map(|c| c.to_string()).collect(),
            }),
        }
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub digest: String,
    pub checks: Vec<Check>,
    pub advisories: Vec<Check>,
    pub numbers: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, digest: String) -> Self {
        Report { command: command.into(), digest, checks: Vec::new(), advisories: Vec::new(), numbers: Map::new() }
    }

    /// Counted items and advisories of `rep`, names prefixed with `prefix/`.
    pub fn absorb<S: Display>(&mut self, prefix: &str, rep: &CheckReport<S>) {
        let p = if prefix.is_empty() { String::new() } else { format!("{prefix}/") };
        self.checks.extend(rep.items.iter().map(|i| Check::from_item(&p, i)));
        self.advisories.extend(rep.advisories.iter().map(|i| Check::from_item(&p, i)));
    }

    /// Items of `rep` as advisories only.
    pub fn advise<S: Display>(&mut self, prefix: &str, rep: &CheckReport<S>) {
        let p = format!("{prefix}/");
        self.advisories.extend(rep.items.iter().chain(&rep.advisories).map(|i| Check::from_item(&p, i)));
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn number(&mut self, key: &str, v: impl Into<Value>) {
        self.numbers.insert(key.into(), v.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Keys come out sorted because `serde_json` maps are ordered.
    pub fn to_json(&self) -> String {
        let doc = serde_json::json!({
            "formatVersion": FORMAT_VERSION,
            "command": self.command,
            "instanceDigest": self.digest,
            "checks": self.checks,
            "advisories": self.advisories,
            "numbers": self.numbers,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} ({})\n", self.command, &self.digest[..12.min(self.digest.len())]);
        let line = |c: &Check, tag: &str| {
            let mut s = format!("{} {}{tag}", if c.passed { "\u{2713}" } else { "\u{2717}" }, c.name);
            if let Some(w) = &c.witness {
                s += &format!(" at {:?}: defect [{}]", w.tuple, w.defect.join(", "));
            }
            s + "\n"
        };
        for c in &self.checks {
            out += &line(c, "");
        }
        for c in &self.advisories {
            out += &line(c, " (advisory)");
        }
        for (k, v) in &self.numbers {
            out += &format!("{k}: {v}\n");
        }
        out += if self.passed() { "PASS\n" } else { "FAIL\n" };
        out
    }
}
