//! Shared result types for the property and theorem checks.

use serde::Serialize;

/// One failed clause together with the elements that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: String,
    pub witness: Vec<usize>,
}

/// Outcome of checking a multi-clause statement on one structure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one instance of `clause`; a failed instance keeps its witness.
    pub fn expect(&mut self, ok: bool, clause: &str, witness: &[usize]) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                clause: clause.to_string(),
                witness: witness.to_vec(),
            });
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations of one clause.
    pub fn of_clause<'a>(&'a self, clause: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.clause == clause)
    }
}

/// Two independently computed verdicts that a theorem says must coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub lhs: bool,
    pub rhs: bool,
}

impl Agreement {
    pub fn new(lhs: bool, rhs: bool) -> Self {
        Agreement { lhs, rhs }
    }

    pub fn agree(&self) -> bool {
        self.lhs == self.rhs
    }
}
