use std::collections::BTreeMap;

/// Collects comparisons for one check.
#[derive(Debug, Default)]
pub(crate) struct Judge {
    pub values: BTreeMap<String, f64>,
    pub notes: Vec<String>,
    passed: bool,
    started: bool,
    slack: f64,
    used: f64,
}

/// What a check hands back to the runner.
#[derive(Debug)]
pub(crate) struct Outcome {
    pub values: BTreeMap<String, f64>,
    pub notes: Vec<String>,
    pub passed: bool,
    pub slack: f64,
    pub slack_used: f64,
}

impl Judge {
    pub fn new() -> Self {
        Self {
            passed: true,
            ..Default::default()
        }
    }

    pub fn value(&mut self, key: &str, v: f64) -> &mut Self {
        self.values.insert(key.to_string(), v);
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    fn record(&mut self, violation: f64, slack: f64) {
        let violation = if violation.is_nan() { f64::INFINITY } else { violation.max(0.0) };
        self.started = true;
        self.slack = self.slack.max(slack);
        self.used = self.used.max(violation);
        if violation > slack {
            self.passed = false;
        }
    }

    /// `a ≤ b` within `slack`.
    pub fn le(&mut self, a: f64, b: f64, slack: f64) -> &mut Self {
        self.record(a - b, slack);
        self
    }

    /// `a ≥ b` within `slack`.
    pub fn ge(&mut self, a: f64, b: f64, slack: f64) -> &mut Self {
        self.record(b - a, slack);
        self
    }

    /// `|a − b| ≤ slack`.
    pub fn close(&mut self, a: f64, b: f64, slack: f64) -> &mut Self {
        self.record((a - b).abs(), slack);
        self
    }

    /// A boolean condition with no numeric slack.
    pub fn holds(&mut self, ok: bool) -> &mut Self {
        self.record(if ok { 0.0 } else { f64::INFINITY }, 0.0);
        self
    }

    pub fn finish(self) -> Outcome {
        debug_assert!(self.started, "a check made no comparison");
        Outcome {
            values: self.values,
            notes: self.notes,
            passed: self.passed,
            slack: self.slack,
            slack_used: self.used,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slack_accounting() {
        let mut j = Judge::new();
        j.le(1.0, 1.0 + 1e-3, 1e-9).close(2.0, 2.0 + 1e-7, 1e-6);
        let o = j.finish();
        assert!(o.passed);
        assert!((o.slack_used - 1e-7).abs() < 1e-15);
        assert_eq!(o.slack, 1e-6);

        let mut j = Judge::new();
        j.ge(0.5, 1.0, 1e-3);
        let o = j.finish();
        assert!(!o.passed);
        assert_eq!(o.slack_used, 0.5);
    }

    #[test]
    fn nan_fails() {
        let mut j = Judge::new();
        j.close(f64::NAN, 1.0, 1.0);
        assert!(!j.finish().passed);
    }
}
