use num_bigint::BigInt;
use thiserror::Error;

/// Why a graph6 word was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// Byte outside the printable range 63..=126.
    InvalidByte(u8),
    /// Long-form header (`~`), i.e. more than 62 vertices.
    LongForm,
    /// The zero-vertex graph `?`.
    ZeroVertices,
    Length {
        expected: usize,
        found: usize,
    },
    NonzeroPadding,
}

impl std::fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Graph6ErrorKind::Empty => write!(f, "empty word"),
            Graph6ErrorKind::InvalidByte(b) => write!(f, "invalid byte 0x{b:02x}"),
            Graph6ErrorKind::LongForm => write!(f, "long-form graph6 (n > 62) is not supported"),
            Graph6ErrorKind::ZeroVertices => write!(f, "graphs must have at least one vertex"),
            Graph6ErrorKind::Length { expected, found } => {
                write!(f, "expected {expected} bytes, found {found}")
            }
            Graph6ErrorKind::NonzeroPadding => write!(f, "nonzero padding bits"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {kind}")]
    Graph6 {
        offset: usize,
        kind: Graph6ErrorKind,
    },

    #[error("edge-list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },

    #[error("graphs must have at least one vertex")]
    EmptyGraph,

    #[error("{what}: size {n} exceeds the supported maximum {max}")]
    UnsupportedSize {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimensions must be positive")]
    EmptyMatrix,

    #[error("resultant is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("{0} of zero is undefined")]
    ZeroArgument(&'static str),

    #[error("modulus {0} is not prime")]
    NotPrime(BigInt),

    #[error("both polynomials vanish modulo {0}")]
    BothZeroModP(BigInt),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("tower would have {vertices} vertices, above the cap of {cap}")]
    TowerTooLarge { vertices: usize, cap: usize },

    #[error("determinant identity violated for k = {k} on {graph}: lhs = {lhs}, rhs = {rhs}")]
    IdentityViolation {
        graph: String,
        k: usize,
        lhs: BigInt,
        rhs: BigInt,
    },

    #[error("internal contradiction: {0}")]
    Contradiction(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
