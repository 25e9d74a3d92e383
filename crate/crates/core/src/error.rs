use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("edge {0}-{1} is not present")]
    EdgeNotPresent(usize, usize),
    #[error("edge {0}-{1} is already present")]
    EdgeAlreadyPresent(usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("embedded graph has {embed} vertices but the host side only has {side}")]
    EmbedTooLarge { embed: usize, side: usize },
    #[error("power iteration did not converge after {iterations} iterations (best residual {residual:e})")]
    NoConvergence { iterations: u64, residual: f64 },
    #[error("zero vector")]
    ZeroVector,
    #[error(
        "partition is not equitable: cell {cell} vertices {u} and {v} differ in cell {target}"
    )]
    NotEquitable {
        cell: usize,
        target: usize,
        u: usize,
        v: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("no real root found")]
    NoRealRootFound,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("resource budget exhausted: {0}")]
    ResourceExhausted(String),
    #[error("order {0} is too large for built-in enumeration (max {max})", max = crate::search::MAX_ENUM_ORDER)]
    OrderTooLargeForEnumeration(usize),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedGraph6(_) => "MalformedGraph6",
            Error::OrderTooLarge(_) => "OrderTooLarge",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotAnEdge(..) => "NotAnEdge",
            Error::EdgeNotPresent(..) => "EdgeNotPresent",
            Error::EdgeAlreadyPresent(..) => "EdgeAlreadyPresent",
            Error::LoopEdge(_) => "LoopEdge",
            Error::BadParams(_) => "BadParams",
            Error::EmbedTooLarge { .. } => "EmbedTooLarge",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::ZeroVector => "ZeroVector",
            Error::NotEquitable { .. } => "NotEquitable",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::Overflow => "Overflow",
            Error::NoRealRootFound => "NoRealRootFound",
            Error::EmptyGraph => "EmptyGraph",
            Error::ResourceExhausted(_) => "ResourceExhausted",
            Error::OrderTooLargeForEnumeration(_) => "OrderTooLargeForEnumeration",
            Error::InvalidWitness(_) => "InvalidWitness",
            Error::UnknownName(_) => "UnknownName",
        }
    }
}
