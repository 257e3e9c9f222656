use thiserror::Error;

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("symbolic determinant of size {0} exceeds the limit of {1}")]
    DeterminantTooLarge(usize, usize),
    #[error("unmapped variable {0}")]
    UnmappedVariable(String),
    #[error("dimension vector has length {got}, quiver has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex {0} carries a loop")]
    LoopAtVertex(String),
    #[error("vertex {0} is not a sink")]
    NotSink(String),
    #[error("vertex {0} is not a source")]
    NotSource(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("pathway enumeration exceeded the cap of {0} words")]
    PathwayCap(usize),
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("subdimension vector exceeds the dimension vector at vertex {0}")]
    SubdimensionTooLarge(usize),
    #[error("group element: {0}")]
    GroupElement(String),
    #[error("({i},{j}) is not a unipotent root at vertex {vertex}")]
    NotUnipotentRoot { vertex: usize, i: usize, j: usize },
    #[error("variable {0} does not belong to the representation space")]
    ForeignVariable(String),
    #[error("monomial count {count} exceeds the cap of {cap}")]
    MonomialCap { count: usize, cap: usize },
    #[error("Euler form <alpha,beta> = {0}, expected 0")]
    EulerFormNonzero(i64),
    #[error("quiver has an oriented cycle")]
    Cyclic,
    #[error("unbalanced block sizes: sources {sources}, targets {targets}")]
    Unbalanced { sources: usize, targets: usize },
    #[error("bitableau index out of range: {0}")]
    TableauIndex(String),
    #[error("map is not filtered at level {0}")]
    NotFiltered(usize),
    #[error("diagonal entries are not pairwise distinct")]
    NotRegularSemisimple,
    #[error("division by a non-invertible element")]
    NotInvertible,
    #[error("zero polynomial has no initial term")]
    ZeroPolynomial,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
