use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge {0}-{1} has no subdivision count")]
    MissingEdge(usize, usize),
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("part {0:?} does not induce a connected subgraph")]
    DisconnectedPart(Vec<usize>),
    #[error("vertex {0} appears in more than one part")]
    OverlappingParts(usize),
    #[error("part {part:?} has radius {radius}, more than the allowed {max}")]
    RadiusTooLarge { part: Vec<usize>, radius: usize, max: usize },
    #[error("{what}: size {size} exceeds the cap of {cap} (raise it explicitly)")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("degenerate drawing: {0}")]
    DegenerateDrawing(String),
    #[error("malformed layout: {0}")]
    MalformedLayout(String),
    #[error("colouring is repetitive on path {0:?}")]
    Repetitive(Vec<usize>),
    #[error("search budget of {0} extended path prefixes exceeded")]
    BudgetExceeded(u64),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("construction invariant violated: {0}")]
    Construction(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
