//! Per-axiom verdicts shared by the algebraic validators and the nerve
//! recogniser.

use serde::Serialize;

use crate::simplicial::LiftingCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Holds by construction of the truncated representation.
    Automatic,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomVerdict {
    pub name: String,
    pub status: Status,
    /// First failing tuple in carrier order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<LiftingCertificate>,
}

impl AxiomVerdict {
    pub fn pass(name: impl Into<String>) -> Self {
        AxiomVerdict {
            name: name.into(),
            status: Status::Pass,
            counterexample: None,
            detail: None,
            certificate: None,
        }
    }

    pub fn fail(name: impl Into<String>, counterexample: Vec<String>) -> Self {
        AxiomVerdict {
            name: name.into(),
            status: Status::Fail,
            counterexample: Some(counterexample),
            detail: None,
            certificate: None,
        }
    }

    pub fn automatic(name: impl Into<String>, detail: impl Into<String>) -> Self {
        AxiomVerdict {
            name: name.into(),
            status: Status::Automatic,
            counterexample: None,
            detail: Some(detail.into()),
            certificate: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    /// What was checked: `rel-monoid`, `frobenius`, `effect-algebra`,
    /// `pseudo-effect-algebra` or `nerve`.
    pub kind: String,
    /// Name of the structure under test.
    pub subject: String,
    pub pass: bool,
    pub axioms: Vec<AxiomVerdict>,
    /// Consequences reported for information; they do not affect `pass`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub derived: Vec<AxiomVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn new(kind: impl Into<String>, subject: impl Into<String>, axioms: Vec<AxiomVerdict>) -> Self {
        let pass = axioms.iter().all(AxiomVerdict::passed);
        ValidationReport {
            kind: kind.into(),
            subject: subject.into(),
            pass,
            axioms,
            derived: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn axiom(&self, name: &str) -> Option<&AxiomVerdict> {
        self.axioms.iter().chain(&self.derived).find(|v| v.name == name)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.axioms.iter().find(|v| !v.passed()).map(|v| v.name.as_str())
    }
}
