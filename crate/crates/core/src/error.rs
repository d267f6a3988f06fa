use thiserror::Error;

use crate::two_color::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown color `{0}`")]
    UnknownColor(String),
    #[error("unknown tree node {0}")]
    UnknownNode(usize),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate color `{0}`")]
    DuplicateColor(String),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("duplicate edge `{0}` -> `{1}`")]
    DuplicateEdge(String, String),
    #[error("vertex id `{0}` occurs in more than one graph")]
    IdCollision(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("empty leaf set")]
    EmptyLeafSet,
    #[error("`{0}` is not a leaf of the tree")]
    NotALeaf(String),
    #[error("({0}, {1}) is not an inner edge")]
    NotInnerEdge(usize, usize),
    #[error("invalid hierarchy: {0}")]
    InvalidHierarchy(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid truncation map: {0}")]
    InvalidTruncation(String),
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("graph is not properly colored")]
    ImproperColoring,
    #[error("graph uses {0} colors, at most 2 are allowed here")]
    TooManyColors(usize),
    #[error("axiom {} violated", .0.axiom)]
    AxiomViolation(Box<AxiomReport>),
    #[error("graph is not a qBMG")]
    NotQbmg,
    #[error("graph is not a 2-qBMG")]
    NotTwoQbmg,
    #[error("invalid color split: {0}")]
    InvalidSplit(String),
    #[error("instance has {size} vertices, the oracle cap is {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("newick syntax error at byte {pos}: {msg}")]
    Newick { pos: usize, msg: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("internal verification failed: {0}")]
    Verification(String),
}
