//! Check results with witnesses.
//!
//! Every verification entry point produces a [`CheckReport`]: one line per
//! identity checked, and on failure a witness naming the basis element (or
//! tuple) together with the two unequal values. Witnesses are the product
//! of this library; reports must be deterministic, so parallel sweeps
//! always surface the first failing basis element in basis order.

use serde::{Deserialize, Serialize};

use crate::linalg::{format_vector, Space};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// The basis element or tuple on which the identity failed.
    pub element: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(
        element: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Witness {
        Witness { element: element.into(), lhs: lhs.into(), rhs: rhs.into() }
    }

    pub fn vectors(
        element: impl Into<String>,
        space: &Space,
        lhs: &[Scalar],
        rhs: &[Scalar],
    ) -> Witness {
        Witness {
            element: element.into(),
            lhs: format_vector(space, lhs),
            rhs: format_vector(space, rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Pass, witness: None, detail: String::new() }
    }

    pub fn pass_with(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Pass, witness: None, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Check {
        Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness),
            detail: String::new(),
        }
    }

    pub fn undecided(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Undecided, witness: None, detail: detail.into() }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Check {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Undecided => "undecided",
            };
            write!(f, "{tag}  {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, "  ({})", c.detail)?;
            }
            if let Some(w) = &c.witness {
                write!(f, "  witness {} : {} != {}", w.element, w.lhs, w.rhs)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
