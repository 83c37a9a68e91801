use std::collections::BTreeSet;
use std::fmt;

/// A case of the trichotomy satisfied by every ambiskew Hopf algebra:
/// (i) `ξ = ±1, χ(h) = 0`; (ii) `ξ = ±1, z = 1`;
/// (iii) `ξ != ±1, h = χ(h)(ξ²-1)^-1 (z-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    I,
    II,
    III,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "i",
            Case::II => "ii",
            Case::III => "iii",
        })
    }
}

impl std::str::FromStr for Case {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "i" => Ok(Case::I),
            "ii" => Ok(Case::II),
            "iii" => Ok(Case::III),
            other => Err(format!("unknown case `{other}`")),
        }
    }
}

/// Renders a case set as `{i, ii}`.
pub fn fmt_cases(cases: &BTreeSet<Case>) -> String {
    let parts: Vec<String> = cases.iter().map(Case::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Per-condition verdicts of a check. `passed()` is the conjunction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub conditions: Vec<Condition>,
    pub classification: Option<BTreeSet<Case>>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, name: &str, passed: bool, witness: impl FnOnce() -> String) -> bool {
        let witness = (!passed).then(witness);
        self.conditions.push(Condition {
            name: name.to_string(),
            passed,
            witness,
        });
        passed
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn extend(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.conditions {
            c.name = format!("{prefix}{}", c.name);
            self.conditions.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.passed)
    }

    /// Whether any failing condition's witness mentions `needle`.
    pub fn witness_contains(&self, needle: &str) -> bool {
        self.failures()
            .any(|c| c.witness.as_deref().is_some_and(|w| w.contains(needle)))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.conditions {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            match &c.witness {
                Some(w) => out.push_str(&format!("{verdict:<5}{}: {w}\n", c.name)),
                None => out.push_str(&format!("{verdict:<5}{}\n", c.name)),
            }
        }
        if let Some(cases) = &self.classification {
            out.push_str(&format!("classification: {}\n", fmt_cases(cases)));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "overall\t{}\n",
            if self.passed() { "pass" } else { "fail" }
        ));
        for c in &self.conditions {
            out.push_str(&format!(
                "check.{}\t{}\n",
                c.name,
                if c.passed { "pass" } else { "fail" }
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!(
                    "witness.{}\t{}\n",
                    c.name,
                    w.replace(['\t', '\n'], " ")
                ));
            }
        }
        if let Some(cases) = &self.classification {
            let parts: Vec<String> = cases.iter().map(Case::to_string).collect();
            out.push_str(&format!("classification\t{}\n", parts.join(",")));
        }
        for n in &self.notes {
            out.push_str(&format!("note\t{n}\n"));
        }
        out
    }
}
