use serde::Serialize;

/// One named postcondition or invariant and whether it held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Condition {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Self {
            name: name.into(),
            holds,
            detail: None,
        }
    }

    /// Attaches a counterexample or note.
    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

pub fn all_hold(conditions: &[Condition]) -> bool {
    conditions.iter().all(|c| c.holds)
}
