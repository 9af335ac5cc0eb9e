use thiserror::Error;

/// Witness returned when a partition fails the equitability test: two
/// vertices of the same cell see different neighbour counts in some cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquitabilityWitness {
    /// Cell containing the two disagreeing vertices.
    pub cell: usize,
    /// Cell against which the neighbour counts differ.
    pub against: usize,
    pub vertex_a: usize,
    pub vertex_b: usize,
    pub count_a: usize,
    pub count_b: usize,
}

impl std::fmt::Display for EquitabilityWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "vertices {} and {} of cell {} have {} vs {} neighbours in cell {}",
            self.vertex_a, self.vertex_b, self.cell, self.count_a, self.count_b, self.against
        )
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: expected integer, found {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected an edge \"u v\"")]
    BadEdgeLine { line: usize },
    #[error("invalid graph6 string: {reason}")]
    BadGraph6 { reason: String },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: usize, unreachable: usize },
    #[error("integer overflow in exact matrix arithmetic")]
    IntegerOverflow,
    #[error("integer overflow while accumulating walk counts at length {length}")]
    WalkCountOverflow { length: usize },
    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },
    #[error("partition is not equitable: {0}")]
    NotEquitable(EquitabilityWitness),
    #[error("invalid quotient matrix: {reason}")]
    InvalidQuotient { reason: String },
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },
    #[error("matrix is not symmetric: entries ({i},{j}) and ({j},{i}) differ by {delta:e}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },
    #[error("Jacobi iteration did not converge within the sweep limit")]
    NoConvergence,
    #[error(
        "ambiguous eigenvalue clustering near {value}: cluster width {width:e} exceeds 10x \
         tolerance; rerun with a different tolerance"
    )]
    AmbiguousClustering { value: f64, width: f64 },
    #[error("repeated eigenvalue {value}: interpolation denominator vanishes")]
    RepeatedEigenvalue { value: f64 },
    #[error("not an equitable quotient: scaled matrix is asymmetric by {delta:e} at ({i},{j})")]
    NotSymmetrizable { i: usize, j: usize, delta: f64 },
    #[error("the first cell of the partition must be a singleton (has {size} vertices)")]
    BaseCellNotSingleton { size: usize },
    #[error("quotient eigenvalue {value} is missing from the supplied spectrum")]
    EigenvalueMismatch { value: f64 },
    #[error("eigenvalue {value} is not simple (multiplicity {multiplicity})")]
    NonsimpleEigenvalue { value: f64, multiplicity: usize },
    #[error("left/right eigenvector pair is numerically orthogonal; cannot normalize")]
    DegenerateEigenpair,
    #[error("quotient matrix is not tridiagonal: nonzero entry at ({i},{j})")]
    NotTridiagonal { i: usize, j: usize },
    #[error("graph is not walk-regular: closed walk counts of length {length} differ by vertex")]
    NotWalkRegular { length: usize },
    #[error(
        "multiplicity of eigenvalue {value} rounds to an integer with residual {residual:e} \
         (limit {limit:e})"
    )]
    RoundingResidual { value: f64, residual: f64, limit: f64 },
    #[error("multiplicities sum to {got}, expected {expected}")]
    MultiplicitySum { expected: usize, got: usize },
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
