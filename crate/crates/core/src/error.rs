use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed entry {text:?}")]
    Malformed { line: usize, text: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },

    #[error("line {line}: vertex label {label} outside 1..=64")]
    LabelOutOfRange { line: usize, label: u64 },

    #[error("invalid graph6 string: {0}")]
    Graph6(String),

    #[error("vertex {0} is not in the graph")]
    MissingVertex(Vertex),

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(Vertex, Vertex),

    #[error("a loop at vertex {0} is not allowed")]
    Loop(Vertex),

    #[error("graph would exceed 64 vertices")]
    TooManyVertices,

    #[error("vertices {0:?} do not induce a triangle")]
    NotATriangle([Vertex; 3]),

    #[error("vertex {vertex} has degree {degree}, expected 3")]
    DegreeNotThree { vertex: Vertex, degree: usize },

    #[error("maximal planarity needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("maximal planarity is only defined for connected graphs")]
    Disconnected,

    #[error("shared vertex set does not induce a complete graph in {0}")]
    NotAClique(&'static str),

    #[error("summands share vertices outside the declared clique: {0}")]
    LabelCollision(String),

    #[error("removing the separator leaves {0} components, expected 2")]
    NotTwoComponents(usize),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),

    #[error("closure limit exceeded: {what} (members {members}, frontier {frontier})")]
    LimitExceeded {
        what: String,
        members: usize,
        frontier: usize,
    },

    #[error("unknown catalog name {0:?}")]
    UnknownName(String),

    #[error("catalog entry {name} failed its checksum: {detail}")]
    Checksum { name: String, detail: String },

    #[error("bound rules contradict each other: lo {lo} > hi {hi}")]
    Unsound { lo: u32, hi: u32 },

    #[error("graph has no vertices")]
    Empty,
}

pub type Result<T> = std::result::Result<T, Error>;
