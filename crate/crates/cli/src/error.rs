use std::fmt;

/// Exit codes: 0 optimal or pass, 1 output failure, 2 usage, 3 bad input,
/// 4 time limit reached, 5 verification failure.
pub mod code {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INPUT: i32 = 3;
    pub const TIME_LIMIT: i32 = 4;
    pub const VERIFY: i32 = 5;
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: code::USAGE, message: message.into() }
    }

    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: code::INPUT, message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError { code: code::IO, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<cvc_core::Error> for CliError {
    fn from(e: cvc_core::Error) -> Self {
        CliError::input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
