//! File formats, reports and commands behind the `esemig` binary.

pub mod commands;
pub mod format;
pub mod report;
pub mod suite;

use esemig_core::AlgebraError;
use thiserror::Error;

use crate::format::ParseError;
use crate::report::ErrorRecord;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_SIZE_LIMIT: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("cannot read {0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) | CliError::Usage(_) => EXIT_PARSE,
            CliError::Algebra(e) => match e {
                AlgebraError::SizeLimit(_) => EXIT_SIZE_LIMIT,
                AlgebraError::NotAssociative(..)
                | AlgebraError::NoIdentity
                | AlgebraError::NoInverse(_)
                | AlgebraError::OrderMismatch(..)
                | AlgebraError::JoinerNotIdentity { .. }
                | AlgebraError::Precondition(_)
                | AlgebraError::IllDefinedQuotient { .. }
                | AlgebraError::MethodIncompatible(_) => EXIT_PRECONDITION,
                _ => EXIT_PARSE,
            },
        }
    }

    pub fn record(&self) -> ErrorRecord {
        let code = self.exit_code();
        let kind = match code {
            EXIT_SIZE_LIMIT => "size-limit",
            EXIT_PRECONDITION => "precondition",
            _ => "parse",
        };
        let (line, column, message) = match self {
            CliError::Parse(p) => (Some(p.line), Some(p.column), p.message.clone()),
            other => (None, None, other.to_string()),
        };
        ErrorRecord {
            kind,
            message,
            line,
            column,
            exit_code: code,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
