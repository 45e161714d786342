//! Crate-wide error type. Every fallible operation returns `Result<T, Error>`.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("element `{element}` is not in the carrier of {hyperfield}")]
    NotInCarrier { element: String, hyperfield: String },

    #[error("cannot parse `{text}` as an element of {hyperfield}")]
    BadElement { text: String, hyperfield: String },

    #[error("the zero element has no multiplicative inverse")]
    ZeroInverse,

    #[error("operands belong to different hyperfields")]
    HyperfieldMismatch,

    #[error("invalid hyperfield table: {0}")]
    BadTable(String),

    #[error("table hyperfield fails the axioms: {0}")]
    TableAxiomsFailed(String),

    #[error("{op} requires a finite hyperfield, but {hyperfield} is infinite")]
    InfiniteHyperfield { op: &'static str, hyperfield: String },

    #[error("no canonical homomorphism from {from} to {to}")]
    NoCanonicalHom { from: String, to: String },

    #[error("homomorphism map is not total on the source carrier: missing `{0}`")]
    PartialHom(String),

    #[error("duplicate ground-set label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown ground-set label `{0}`")]
    UnknownLabel(String),

    #[error("rank {rank} exceeds ground-set size {size}")]
    RankTooLarge { rank: usize, size: usize },

    #[error("subset {subset:?} is not a sorted {rank}-subset of the ground set")]
    BadSubset { subset: Vec<String>, rank: usize },

    #[error("duplicate Grassmann-Plucker entry for subset {0:?}")]
    DuplicateSubset(Vec<String>),

    #[error("Grassmann-Plucker function is identically zero")]
    IdenticallyZero,

    #[error("matroids have mismatched shape (hyperfield, ground set, or rank)")]
    ShapeMismatch,

    #[error("ground sets are not disjoint: label `{0}` occurs on both sides")]
    OverlappingGround(String),

    #[error("{op}: enumeration size {needed} exceeds cap {cap} (set HYPERMATROID_MAX_PERP to raise)")]
    CapExceeded { op: &'static str, needed: u128, cap: u128 },

    #[error("ground set has {size} elements, above the isomorphism search cap {cap}")]
    IsoSizeCap { size: usize, cap: usize },

    #[error("registry and argument use different hyperfields")]
    RegistryMismatch,

    #[error("invalid document: {0}")]
    BadDocument(String),

    #[error("JSON syntax error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
