use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("pair ({0}, {1}) listed more than once")]
    DuplicatePair(usize, usize),
    #[error("pair ({0}, {1}) has multiplicity zero")]
    ZeroMultiplicity(usize, usize),
    #[error("order {0} exceeds the 32-vertex limit")]
    OrderTooLarge(usize),
    #[error("part assignment does not match the vertex count")]
    PartsMismatch,
    #[error("graph has parallel edges")]
    NotSimple,
    #[error("edge ({0}, {1}) lies inside one part")]
    EdgeWithinPart(usize, usize),
    #[error("graph contains an odd cycle")]
    OddCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("vertices {0:?} do not span a triangle")]
    NotATriangle([usize; 3]),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    WrongDegree { vertex: usize, degree: usize },
    #[error("vertex {0} has a repeated neighbour or a parallel edge")]
    ParallelAtVertex(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("graph already has the maximum number of vertices")]
    OrderLimit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("the two deleted vertices must differ (got {0} twice)")]
    SameVertex(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("minor search exceeded its budget of {0} expansions; answer unknown")]
    BudgetExhausted(u64),
    #[error("pattern graph must be connected")]
    PatternDisconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6 cannot encode parallel edges")]
    Multigraph,
    #[error("order {0} needs the long graph6 form, which is unsupported")]
    TooLarge(usize),
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#04x} outside the graph6 range")]
    BadByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    BadPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("{0}: no such file")]
    Missing(std::path::PathBuf),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: stored canonical form {stored} does not match the graph ({computed})")]
    Mismatch {
        line: usize,
        stored: String,
        computed: String,
    },
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("could not build the worker pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
