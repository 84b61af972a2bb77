use cubic_lines_core::Error;

/// Exit codes shared by every command.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FAILURE: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const NOT_ON_CUBIC: u8 = 3;
    pub const BUDGET: u8 = 4;
    pub const UNRESOLVED: u8 = 5;
    pub const SINGULAR: u8 = 6;
    pub const COUNTEREXAMPLE: u8 = 7;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => exit::PARSE,
            CliError::Io(_) => exit::FAILURE,
            CliError::Core(e) => match e {
                Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::NotHomogeneousCubic
                | Error::RankDeficient
                | Error::NotDecomposable
                | Error::DimensionMismatch(_)
                | Error::InvalidRing(_) => exit::PARSE,
                Error::LineNotOnCubic => exit::NOT_ON_CUBIC,
                Error::BudgetExceeded { .. } => exit::BUDGET,
                Error::SingularCubic | Error::SingularEvidence(_) => exit::SINGULAR,
                _ => exit::FAILURE,
            },
        }
    }
}
