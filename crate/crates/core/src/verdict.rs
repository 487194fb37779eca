use serde::Serialize;

/// Pass/fail outcome of an exact identity check, with the zero-based basis
/// indices of the first violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Self {
            pass: true,
            witness: None,
        }
    }

    pub fn fail(witness: Vec<usize>) -> Self {
        Self {
            pass: false,
            witness: Some(witness),
        }
    }

    /// Passes unless `first_violation` yields something.
    pub fn from_search(first_violation: Option<Vec<usize>>) -> Self {
        first_violation.map_or_else(Self::pass, Self::fail)
    }
}
