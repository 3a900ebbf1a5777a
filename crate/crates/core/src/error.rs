use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set is not strictly increasing at position {position}")]
    UnsortedVertexSet { position: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("vertex set is not a clique: {0} and {1} are non-adjacent")]
    NotAClique(usize, usize),
    #[error("vertex set is not a {t}-plex: vertex {vertex} misses {missing} others")]
    NotAPlex {
        t: usize,
        vertex: usize,
        missing: usize,
    },
    #[error("invalid Hoffman graph: {0}")]
    InvalidHoffman(String),
    #[error("vertex {0} is not a fat vertex")]
    NotFat(usize),
    #[error("invalid slim partition: {0}")]
    InvalidPartition(String),
    #[error("sum condition (4) violated: slims {0} and {1} share {2} fat vertices")]
    SumConditionViolated(usize, usize, usize),
    #[error("n = {n} is below (m+1)^2 = {floor}")]
    ThresholdTooSmall { n: usize, floor: usize },
    #[error("clique relation is not transitive on cliques {0}, {1}, {2}")]
    NonTransitive(usize, usize, usize),
    #[error("quasi-clique of class {0} depends on the chosen representative")]
    QuasiCliqueMismatch(usize),
    #[error("graph contains an induced K~_{{2m}} with m = {m}")]
    KTildeFound { m: usize, witness: Vec<usize> },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("partition not found")]
    PartitionNotFound,
    #[error("unsupported Steiner system order v = {0}")]
    UnsupportedSteinerOrder(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
