//! Verification reports: one entry per checked law, never aborting at the
//! first failure.

use std::fmt::Write as _;

/// What the caller expects of a law. `Fails` marks expected negatives such
/// as the associativity probe on a non-associative algebra; `Observe`
/// records a fact without judging it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    Fails,
    Observe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub holds: bool,
    pub witness: Option<String>,
    pub expect: Expectation,
}

impl Entry {
    pub fn passed(&self) -> bool {
        match self.expect {
            Expectation::Holds => self.holds,
            Expectation::Fails => !self.holds,
            Expectation::Observe => true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, holds: bool, witness: Option<String>, expect: Expectation) {
        self.entries.push(Entry {
            name: name.into(),
            holds,
            witness,
            expect,
        });
    }

    /// A law that must hold.
    pub fn require(&mut self, name: impl Into<String>, holds: bool, witness: Option<String>) {
        self.push(name, holds, witness, Expectation::Holds);
    }

    pub fn expect_failure(&mut self, name: impl Into<String>, holds: bool, witness: Option<String>) {
        self.push(name, holds, witness, Expectation::Fails);
    }

    pub fn observe(&mut self, name: impl Into<String>, holds: bool, witness: Option<String>) {
        self.push(name, holds, witness, Expectation::Observe);
    }

    /// Append another report's entries, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut e in other.entries {
            e.name = format!("{prefix}{}", e.name);
            self.entries.push(e);
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(Entry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Whether the named law held (panics if absent; intended for tests).
    pub fn holds(&self, name: &str) -> bool {
        self.entry(name)
            .unwrap_or_else(|| panic!("no report entry `{name}`"))
            .holds
    }

    /// Plain-text body followed by a `key=value` trailer.
    pub fn render(&self, verbose: bool) -> String {
        let mut out = String::new();
        if !self.title.is_empty() {
            writeln!(out, "== {} ==", self.title).unwrap();
        }
        for e in &self.entries {
            let status = match (e.passed(), e.expect) {
                (false, _) => "FAIL",
                (true, Expectation::Fails) => "xneg",
                (true, Expectation::Observe) => "note",
                (true, Expectation::Holds) => "ok",
            };
            if !verbose && status == "ok" {
                continue;
            }
            write!(out, "[{status:>4}] {}: {}", e.name, if e.holds { "yes" } else { "no" }).unwrap();
            if let Some(w) = &e.witness {
                write!(out, "  witness {w}").unwrap();
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        writeln!(out, "--").unwrap();
        writeln!(out, "entries={}", self.entries.len()).unwrap();
        writeln!(out, "passed={}", self.entries.len() - failed).unwrap();
        writeln!(out, "failed={failed}").unwrap();
        writeln!(out, "status={}", if failed == 0 { "pass" } else { "fail" }).unwrap();
        out
    }
}

/// Format a witness tuple as `(x, y, z)`.
pub fn witness<S: AsRef<str>>(parts: &[S]) -> String {
    let inner: Vec<&str> = parts.iter().map(|s| s.as_ref()).collect();
    format!("({})", inner.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_failures_pass() {
        let mut r = Report::new("t");
        r.require("a", true, None);
        r.expect_failure("b", false, Some(witness(&["x", "y"])));
        r.observe("c", false, None);
        assert!(r.passed());
        r.require("d", false, Some("(z)".into()));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        let text = r.render(true);
        assert!(text.contains("[FAIL] d: no  witness (z)"));
        assert!(text.contains("[xneg] b: no  witness (x, y)"));
        assert!(text.ends_with("status=fail\n"));
    }

    #[test]
    fn quiet_rendering_hides_plain_passes() {
        let mut r = Report::new("");
        r.require("a", true, None);
        assert!(!r.render(false).contains("] a"));
        assert!(r.render(true).contains("[  ok] a: yes"));
    }
}
