//! Spec parsing and claim reports for the `phialg` command-line tool.

pub mod report;
pub mod spec;

use thiserror::Error;

pub use report::{run_command, run_report, Claim, Command, ModuleChoice, Report, ReportOptions, Status};
pub use spec::{parse_spec, parse_subspace, AlgebraSpec, Scalar};

pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("{0}")]
    Domain(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] phialg_core::Error),
}

impl CliError {
    /// 2 for bad input, 3 for refused work, 1 for failures inside a computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Domain(_) | CliError::Io { .. } => 2,
            CliError::ResourceCap(_) => 3,
            CliError::Core(phialg_core::Error::DepthLimit { .. }) => 3,
            CliError::Core(phialg_core::Error::DimensionMismatch { .. }) => 2,
            CliError::Core(_) => 1,
        }
    }
}
