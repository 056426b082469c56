use std::fmt;

use brauer_kit::cipher::CipherError;
use brauer_kit::graph::GraphError;
use brauer_kit::score::ScoreError;
use brauer_kit::BrauerError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Bad input or flags; exit 2.
    Validation,
    /// Anything else; exit 1.
    Internal,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn validation(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            kind: Kind::Validation,
            code,
            message: message.into(),
        }
    }

    pub fn internal(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            kind: Kind::Internal,
            code,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind {
            Kind::Validation => 2,
            Kind::Internal => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<CipherError> for CliError {
    fn from(e: CipherError) -> Self {
        Self::validation("cipher", e.to_string())
    }
}

impl From<BrauerError> for CliError {
    fn from(e: BrauerError) -> Self {
        Self::validation("config", e.to_string())
    }
}

impl From<ScoreError> for CliError {
    fn from(e: ScoreError) -> Self {
        Self::validation("score", e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        Self::validation("graph", e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
