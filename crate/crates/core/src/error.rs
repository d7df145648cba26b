use thiserror::Error;

use crate::params::GwaParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter mismatch: {0} vs {1}")]
    ParamMismatch(GwaParams, GwaParams),

    #[error("invalid root parameter: {0}")]
    InvalidParameter(String),

    #[error("tail violation: {0}")]
    TailViolation(String),

    #[error("alphabet violation: {0}")]
    AlphabetViolation(String),

    #[error("module is not projective")]
    NotProjective,

    #[error("module does not surject onto {0}")]
    NoSurjection(String),

    #[error("{simple} is not a graded simple module when {params}")]
    InvalidSimple { simple: String, params: GwaParams },

    #[error("case mismatch: {0}")]
    CaseMismatch(String),

    #[error("inconsistent factor assignment: {0}")]
    InconsistentAssignment(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("polynomial outside the root-token span: {0}")]
    Unrepresentable(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("empty list of base modules")]
    EmptyBase,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
