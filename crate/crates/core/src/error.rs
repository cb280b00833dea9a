use thiserror::Error;

/// Errors raised while building or analysing groups and braces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("order {order} exceeds the supported maximum {max}")]
    TooLarge { order: usize, max: usize },
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{which} group is invalid: {source}")]
    GroupInvalid {
        which: &'static str,
        #[source]
        source: Box<Error>,
    },
    #[error("additive and multiplicative groups disagree: {0}")]
    MismatchedIdentity(String),
    #[error("brace axiom fails at x={x}, y={y}, z={z}")]
    AxiomFails { x: usize, y: usize, z: usize },
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("term needs {needed} variables but {given} values were supplied")]
    ArityMismatch { needed: usize, given: usize },
    #[error("constant {value} is outside the carrier of size {order}")]
    ConstantOutOfRange { value: usize, order: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("map is not bilinear at ({x}, {y}, {z})")]
    NotBilinear { x: usize, y: usize, z: usize },
    #[error("kernel group is not abelian")]
    KNotAbelian,
    #[error("center is trivial, no central decomposition")]
    TrivialCenter,
    #[error("{which} cocycle identity fails at ({x}, {y}, {z})")]
    CocycleIdentityFails {
        which: &'static str,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error("cocycle compatibility fails at ({x}, {y}, {z})")]
    CompatibilityFails { x: usize, y: usize, z: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl Error {
    /// Process exit status: `3` for a violated internal invariant, `2` for
    /// everything caused by the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InternalInconsistency(_) => 3,
            _ => 2,
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalInconsistency(_))
    }
}
