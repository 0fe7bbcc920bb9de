use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    Malformed(String),

    #[error("atom {atom}: self-loop at vertex {vertex}")]
    SelfLoop { atom: usize, vertex: usize },

    #[error("atom {atom}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { atom: usize, u: usize, v: usize },

    #[error("atom {atom}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { atom: usize, vertex: usize, n: usize },

    #[error("additive product preconditions fail: {}", .0.join("; "))]
    InvalidAtoms(Vec<String>),

    #[error("{what}: size {size} exceeds budget {limit}")]
    Budget { what: &'static str, size: u128, limit: u128 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial is not real-rooted")]
    NotRealRooted,

    #[error("point {0} is not strictly right of the support")]
    OutsideDomain(f64),

    #[error("value {0} is outside the range of the inverse Cauchy transform")]
    OutOfRange(f64),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("spectrum reconciliation failed: {0}")]
    Reconciliation(String),

    #[error("interlacing violated at greedy step {step}: {detail}")]
    Interlacing { step: usize, detail: String },

    #[error("encoding distribution for N = {0} is not uniform")]
    Uniformity(usize),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("invalid encoding: {0}")]
    Encoding(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
