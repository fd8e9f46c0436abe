//! Failure witnesses and resource caps shared by every exhaustive check.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{cardinality, Diagram};

/// Default upper bound on `|P_{n,c}|` for exhaustive loops.
pub const DEFAULT_DIAGRAM_CAP: u64 = 1_000_000;

/// A counterexample found by a verification routine: what went wrong and
/// the diagrams involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub reason: String,
    pub diagrams: Vec<Diagram>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    pub fn new(reason: impl Into<String>, diagrams: Vec<Diagram>) -> Self {
        Witness { reason: reason.into(), diagrams, detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.reason)?;
        for d in &self.diagrams {
            write!(f, "; {d}")?;
        }
        if let Some(detail) = &self.detail {
            write!(f, " ({detail})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("|P_{{{n},{c}}}| = {size} exceeds the cap of {cap} diagrams")]
    CapExceeded { n: usize, c: usize, size: BigUint, cap: u64 },
    #[error("{what} = {size} exceeds the cap of {cap}")]
    SizeCapExceeded { what: &'static str, size: BigUint, cap: u64 },
    #[error("verification failed: {0}")]
    Failed(Witness),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl VerifyError {
    pub fn fail(reason: impl Into<String>, diagrams: Vec<Diagram>) -> Self {
        VerifyError::Failed(Witness::new(reason, diagrams))
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, VerifyError::CapExceeded { .. } | VerifyError::SizeCapExceeded { .. })
    }
}

/// Refuses exhaustive work over `P_{n,c}` when it has more than `cap` elements.
pub fn check_cap(n: usize, c: usize, cap: u64) -> Result<(), VerifyError> {
    let size = cardinality(n, c);
    if size > BigUint::from(cap) {
        return Err(VerifyError::CapExceeded { n, c, size, cap });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_boundaries() {
        assert!(check_cap(2, 1, 6).is_ok());
        let err = check_cap(2, 1, 5).unwrap_err();
        assert!(err.is_cap());
        assert_eq!(err.to_string(), "|P_{2,1}| = 6 exceeds the cap of 5 diagrams");
        assert!(check_cap(12, 4, DEFAULT_DIAGRAM_CAP).is_err());
    }

    #[test]
    fn witness_display() {
        let w = Witness::new("mismatch", vec![Diagram::empty(1, 1)]).with_detail("x");
        assert_eq!(w.to_string(), "mismatch; n=1 c=1 [] (x)");
        assert!(!VerifyError::Failed(w).is_cap());
    }
}
