use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a digraph needs at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(usize, usize),
    #[error("{what} supports at most {max} vertices, got {got}")]
    TooLarge { what: &'static str, max: usize, got: usize },
    #[error("{what} needs at least {min} vertices, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },

    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("row {row} is not circularly consecutive under the given column order")]
    NotCircularRow { row: usize },
    #[error("row {row} is a zero row")]
    ZeroRow { row: usize },
    #[error("matrix does not have a monotone circular ordering: {0}")]
    NotMonotone(String),

    #[error("circumference mismatch between {0} and {1}")]
    CircumferenceMismatch(String, String),
    #[error("position {value} outside [0, {circumference})")]
    PositionOutOfRange { value: String, circumference: String },
    #[error("point of vertex {0} is not inside its own arc")]
    PointOutsideArc(usize),
    #[error("vertices {0} and {1} share the same point")]
    SharedPoint(usize, usize),
    #[error("representation has {rep} vertices but the digraph has {graph}")]
    SizeMismatch { rep: usize, graph: usize },

    #[error("expected a tournament")]
    NotTournament,
    #[error("expected an oriented digraph")]
    NotOriented,
    #[error("expected a connected digraph")]
    NotConnected,
    #[error("expected a symmetric digraph")]
    NotSymmetric,

    #[error("full-row insertion failed in {case}: {detail}")]
    Insertion { case: &'static str, detail: String },
    #[error("construction step failed: {0}")]
    Construction(String),
    #[error("hamiltonian path construction failed: {0}")]
    HamiltonianPath(String),
    #[error("no vertex of outdegree zero")]
    NoSink,
    #[error("characterizations disagree: {0}")]
    Inconsistent(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
