use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("not a bijection: {msg} at position {position}")]
    NotABijection { position: usize, msg: String },

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("enumeration bound {bound} exceeded")]
    EnumerationBound { bound: u64 },

    #[error("coset enumeration exceeded {max_cosets} cosets; raise the bound or check the presentation")]
    CosetBound { max_cosets: usize },

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorIndex { index: usize, count: usize },

    #[error("expected one image per generator: got {got}, presentation has {want}")]
    ArityMismatch { got: usize, want: usize },

    #[error("coset table was not enumerated over the trivial subgroup")]
    NotRegularTable,

    #[error("S not inverse-closed: inverse of representative {rep} lies in no supplied double coset")]
    NotInverseClosed { rep: String },

    #[error("vertex budget {budget} exceeded while building the coset graph")]
    VertexBudget { budget: usize },

    #[error("representative lies in the subgroup Y; S must be disjoint from Y")]
    RepInSubgroup,

    #[error("generator {index} is not an automorphism: edge ({u}, {v}) maps to a non-edge")]
    NotAutomorphism { index: usize, u: usize, v: usize },

    #[error("block is not an orbit of the supplied group")]
    NotAnOrbit,

    #[error("search budget of {budget} nodes exhausted (result inconclusive, not \"none exists\")")]
    BudgetExhausted { budget: u64 },

    #[error("{0}")]
    Invalid(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
