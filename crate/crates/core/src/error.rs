use thiserror::Error;

/// Errors raised by graph construction, matrix arithmetic and the searches.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {{{0}, {1}}} is given both directions")]
    AntiparallelArcs(usize, usize),

    #[error("graph is not bipartite: edge {{{0}, {1}}} closes an odd cycle")]
    NotBipartite(usize, usize),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("expected an oriented complete graph on {expected} vertices")]
    WrongCompleteOrder { expected: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("integer overflow in exact matrix arithmetic")]
    Overflow,

    #[error("matrix is not skew-symmetric (entry ({0}, {1}))")]
    NotSkewSymmetric(usize, usize),

    #[error("matrix is not symmetric (entry ({0}, {1}))")]
    NotSymmetric(usize, usize),

    #[error("matrix has a non-finite entry")]
    NonFinite,

    #[error("Jacobi iteration did not converge, off-diagonal norm {residual:e}")]
    NonConvergence { residual: f64 },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("order mismatch: predicted {predicted}, computed {computed}")]
    OrderMismatch { predicted: usize, computed: usize },

    #[error("maximum-energy certificate failed: {0}")]
    CertificateFailed(String),

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
