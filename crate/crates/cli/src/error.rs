use std::fmt;

use weilzeta_core::Error;

/// Process exit codes. `0`–`4` are the stable interface; `5` covers
/// arithmetic failures inside the engine that no input check catches.
pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INVALID_LATTICE: i32 = 3;
    pub const PARITY: i32 = 4;
    pub const INTERNAL: i32 = 5;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: exit::USAGE, message: message.into() }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        CliError { code: exit::MISMATCH, message: message.into() }
    }

    pub fn invalid_lattice(message: impl Into<String>) -> Self {
        CliError { code: exit::INVALID_LATTICE, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InadmissibleWeight { .. } => exit::PARITY,
            Error::NotEven(_) | Error::InvalidGram(_) | Error::SingularMatrix | Error::NotDefinite => {
                exit::INVALID_LATTICE
            }
            Error::UnsupportedWeight(_)
            | Error::InvalidExponent { .. }
            | Error::InvalidArgument(_)
            | Error::NotSquarefree(_)
            | Error::TooLarge(_) => exit::USAGE,
            _ => exit::INTERNAL,
        };
        CliError { code, message: e.to_string() }
    }
}
