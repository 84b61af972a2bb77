use alloc::string::String;

/// Errors produced anywhere in the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("Eisenstein norm {norm} exceeds the trial-division range")]
    NormTooLarge { norm: String },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("polynomials live in different variable contexts")]
    ContextMismatch,

    #[error("invalid polynomial ring: {0}")]
    InvalidRing(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("resource budget exceeded: {what} > {limit}")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("ideal is not zero-dimensional (dimension {dimension})")]
    NotZeroDimensional { dimension: i64 },

    #[error("{context}: expected finitely many solutions, found dimension {dimension}")]
    PositiveDimensional { context: String, dimension: i64 },

    #[error("spanning vectors do not have rank 2")]
    RankDeficient,

    #[error("Plücker coordinates violate the Grassmann-Plücker relations")]
    NotDecomposable,

    #[error("polynomial is not a nonzero homogeneous cubic in x0..x4")]
    NotHomogeneousCubic,

    #[error("line is not contained in the cubic")]
    LineNotOnCubic,

    #[error("line is not of the second type")]
    NotSecondType,

    #[error("point lies on the line")]
    PointOnLine,

    #[error("evidence that the cubic is singular: {0}")]
    SingularEvidence(String),

    #[error("cubic is singular; smoothness is required")]
    SingularCubic,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
