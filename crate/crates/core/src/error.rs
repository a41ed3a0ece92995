use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
///
/// `InvariantViolation` is reserved for states the colouring proofs rule
/// out; seeing one means a bug in this crate, never bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge} out of range (m = {m})")]
    EdgeOutOfRange { edge: usize, m: usize },

    #[error("loop at vertex {0}: multigraphs must be loop-free")]
    Loop(usize),

    #[error("u and v must differ (both are {0})")]
    SameVertex(usize),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("colour {colour} outside palette of size {k}")]
    ColourOutOfPalette { colour: usize, k: usize },

    #[error("colour {colour} already present at vertex {vertex} (edge {edge})")]
    ColourConflict {
        edge: usize,
        colour: usize,
        vertex: usize,
    },

    #[error("edge {0} is already coloured")]
    AlreadyColoured(usize),

    #[error("vertex {vertex} is not an endpoint of edge {edge}")]
    NotEndpoint { edge: usize, vertex: usize },

    #[error("palette of {k} colours is below the local bound {gamma}")]
    PaletteTooSmall { k: usize, gamma: usize },

    #[error("oracle guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("invalid structure: {0}")]
    Structure(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::PaletteTooSmall { .. } => 1,
            Error::InvariantViolation(_) => 3,
            _ => 2,
        }
    }
}
