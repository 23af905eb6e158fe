use std::fmt;

/// Failure of a CLI command, mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Spectrum comparison exceeded the tolerance.
    Verification(String),
    /// Bad flags, chirality or site.
    Invalid(String),
    /// Numerical failure inside the library.
    Numerical(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<nanotube::Error> for CliError {
    fn from(e: nanotube::Error) -> Self {
        use nanotube::Error as E;
        match e {
            E::NoConvergence { .. } | E::InvariantViolation(_) | E::LengthMismatch { .. } => {
                CliError::Numerical(e.to_string())
            }
            E::InconsistentAdjacency { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
