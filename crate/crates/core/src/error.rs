use thiserror::Error;

use std::fmt;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{context} failed its axiom check:\n{report}")]
    AxiomFailure { context: String, report: String },
    #[error("the twist is not multiplicative:\n{0}")]
    NotMultiplicative(String),
    #[error("degree {0} is outside the supported range")]
    DegreeOutOfRange(usize),
    #[error("subspace containment failed")]
    NotContained,
    #[error("the map is not an endomorphism of the product")]
    NotEndomorphism,
    #[error("differential rejected: {0}")]
    DifferentialRejected(String),
    #[error("vector is not in the required subspace: {0}")]
    NotInSubspace(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Refusal carrying the rendered failing report.
    pub fn axiom<S: fmt::Display>(context: &str, report: &CheckReport<S>) -> Self {
        Error::AxiomFailure {
            context: context.to_string(),
            report: report.to_string(),
        }
    }
}
