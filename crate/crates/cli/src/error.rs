use std::fmt;

use crate::spec::SpecError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_CONSISTENCY: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Spec(SpecError),
    Engine(skelproj_core::Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec(_) | CliError::Usage(_) | CliError::Engine(skelproj_core::Error::Input(_)) => EXIT_INPUT,
            CliError::Engine(skelproj_core::Error::Resource(_)) => EXIT_RESOURCE,
            CliError::Engine(skelproj_core::Error::Consistency(_)) => EXIT_CONSISTENCY,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Spec(e) => e.fmt(f),
            CliError::Engine(e) => e.fmt(f),
            CliError::Usage(msg) => write!(f, "invalid arguments: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        CliError::Spec(e)
    }
}

impl From<skelproj_core::Error> for CliError {
    fn from(e: skelproj_core::Error) -> Self {
        CliError::Engine(e)
    }
}
