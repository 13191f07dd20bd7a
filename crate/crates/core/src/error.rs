use thiserror::Error;

/// Errors produced by graph construction, format parsing and the guarded
/// exhaustive routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),
    #[error("graph on {0} vertices exceeds the vertex cap {1}")]
    OverCap(usize, usize),
    #[error("({u},{v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("graph on {n} vertices exceeds the exhaustive-enumeration guard {limit}")]
    TooLargeForEnumeration { n: usize, limit: usize },
    #[error("{op}: parameter out of range: {msg}")]
    ParamOutOfRange { op: &'static str, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("edge list parse error: {0}")]
    EdgeList(String),
    #[error("family spec parse error at byte {pos}: {msg}")]
    FamilySpec { pos: usize, msg: String },
    #[error("report parse error: {0}")]
    Report(String),
    #[error("search target |q| = {q} exceeds 2^nu for nu = {nu}")]
    InvalidSearchTarget { nu: usize, q: String },
}

pub type Result<T> = std::result::Result<T, Error>;
