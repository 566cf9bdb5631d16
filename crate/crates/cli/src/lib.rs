//! Library half of the `hecke` command: the expression language and the
//! subcommand bodies, so both can be tested directly.

pub mod commands;
pub mod expr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] expr::ParseError),
    #[error(transparent)]
    Eval(#[from] expr::EvalError),
    #[error(transparent)]
    Core(#[from] hecke_core::Error),
}
