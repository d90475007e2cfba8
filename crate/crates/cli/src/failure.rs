use std::fmt;

use binbench::Error;

pub const DECODE: u8 = 2;
pub const PARAMS: u8 = 3;
pub const DIMENSION: u8 = 4;
pub const INSUFFICIENT: u8 = 5;
pub const IO: u8 = 6;

/// An error with its process exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    pub fn decode(message: impl Into<String>) -> Self {
        Self::new(DECODE, message)
    }

    pub fn params(message: impl Into<String>) -> Self {
        Self::new(PARAMS, message)
    }

    /// Prefixes the message, e.g. with the file or entry involved.
    pub fn context(mut self, what: impl fmt::Display) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidParameter(_) | Error::InvalidSpec(_) => PARAMS,
            Error::ShapeMismatch { .. } => DIMENSION,
            Error::InsufficientMethods(_) => INSUFFICIENT,
            Error::Io(_) => IO,
            Error::Decode(_)
            | Error::Json(_)
            | Error::EmptySeed
            | Error::EmptyGroundTruth
            | Error::MissingCell { .. } => DECODE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(IO, e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;
