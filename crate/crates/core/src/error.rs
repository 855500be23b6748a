use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual modules; most carry enough context to be actionable.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("enumeration cap exceeded: {what} has size {size}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} has no placement")]
    MissingPlacement { vertex: usize },

    #[error("normal of line vertex {vertex} is not a unit vector")]
    NonUnitNormal { vertex: usize },

    #[error("position of vertex {vertex} is not on the sphere")]
    OffSphere { vertex: usize },

    #[error("line vertex {vertex} has offset {offset}, expected 0 (lines must be concurrent through the origin)")]
    NonConcurrent { vertex: usize, offset: String },

    #[error("slider vertex {vertex} is not on the line y = 0")]
    SliderOffLine { vertex: usize },

    #[error("matrix contains a non-finite entry at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("I + S is singular; Cayley map undefined for these parameters")]
    SingularCayley,

    #[error("vector is not tangent: {0}")]
    NotTangent(String),

    #[error("matrix is not orthogonal")]
    NotOrthogonal,

    #[error("rotation leaves the image of vertex {vertex} on the equator")]
    EquatorHit { vertex: usize },

    #[error("velocity assignment is not a motion: constraint `{row}` has nonzero residual")]
    NotAMotion { row: String },

    #[error("graph is not bipartite between points and hyperplanes: {0}")]
    NotBipartite(String),

    #[error("line vertices {a} and {b} have equal normals")]
    DuplicateNormals { a: usize, b: usize },

    #[error("loop {loop_index} has no assigned vector")]
    MissingLoopVector { loop_index: usize },

    #[error("no transversal hyperplane found after {attempts} random draws")]
    NoTransversalHyperplane { attempts: usize },

    #[error("count condition fails; realization cannot be row-independent")]
    CountsFail(Box<crate::counts::CountReport>),

    #[error("retry budget of {budget} exhausted in {what}")]
    RetryBudgetExhausted { what: &'static str, budget: usize },

    #[error("edge set is not a spanning tree on the line vertices: {0}")]
    NotATree(String),

    #[error("rotation classes overlap or collide with fixed/fixed-normal lines (vertex {vertex})")]
    OverlappingClasses { vertex: usize },

    #[error("unsupported constraint pattern: {0}")]
    UnsupportedCase(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
