use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax {
        position: usize,
        expected: &'static str,
    },
    #[error("negative degree at byte {position}")]
    Negative { position: usize },
    #[error("integer too large at byte {position}")]
    Overflow { position: usize },
    #[error("zero degree at byte {position}")]
    ZeroDegreeAt { position: usize },
    #[error("zero degree in sequence")]
    ZeroDegree,
    #[error("zero exponent at byte {position}")]
    ZeroExponent { position: usize },
    #[error("empty sequence")]
    Empty,
    #[error("residual needs at least two entries")]
    ResidualTooShort,
    #[error("cannot delete last entry {last} from a sequence of length {n}")]
    ResidualTooLarge { last: usize, n: usize },
    #[error("residual sequence would contain a zero entry")]
    ResidualZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("empty vertex set")]
    EmptySet,
    #[error("no edge between {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("lift endpoints must differ (got {0} twice)")]
    SameEndpoints(usize),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotThreeVertex { vertex: usize, degree: usize },
    #[error("{neighbor} is not a neighbor of {vertex}")]
    NotNeighbor { vertex: usize, neighbor: usize },
    #[error("wheel rim length {0} is below 3")]
    WheelTooSmall(usize),
    #[error("edge list parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("assignment covers {got} edges, graph has {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("demand does not sum to zero over Z3")]
    NotZeroSum,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("sequence is not graphic")]
    NotGraphic,
    #[error("sequence has {n} entries, above the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("sequence {0} is not one of the exception families")]
    NotException(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("sequence {sequence} does not match the {family} hypothesis: {reason}")]
    Hypothesis {
        family: &'static str,
        sequence: String,
        reason: String,
    },
    #[error("construction for {sequence} produced degree sequence {got}")]
    DegreeMismatch { sequence: String, got: String },
    #[error("construction for {0} produced a non-simple graph")]
    NotSimple(String),
    #[error("search fallback found no Z3-connected realization of {sequence} ({tried} tried)")]
    SearchExhausted { sequence: String, tried: u64 },
    #[error("search fallback is capped at {cap} vertices, {sequence} has {n}")]
    SearchCap {
        sequence: String,
        n: usize,
        cap: usize,
    },
    #[error("construction for {0} is not Z3-connected according to the oracle")]
    NotZ3Connected(String),
    #[error("inverse lifting needs {needed} eligible edges, only {available} found")]
    LiftEdges { needed: usize, available: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}
