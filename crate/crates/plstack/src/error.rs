use thiserror::Error;

use crate::complex::{Face, Vertex};

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("face {0} is not present in the complex")]
    FaceNotPresent(Face),
    #[error("complex is not pure")]
    NotPure,
    #[error("ridge {0} lies in {1} facets, complex is not a pseudomanifold")]
    NotPseudomanifold(Face, usize),
    #[error("vertex {0} already belongs to the complex")]
    VertexClash(Vertex),
    #[error("face {0} is not on the boundary")]
    FaceNotOnBoundary(Face),
    #[error("refusing to stellarly subdivide at {0}: faces of dimension < 1 are not subdividable")]
    VertexSubdivisionRejected(Face),
    #[error("complex has empty boundary")]
    NoBoundary,
    #[error("complex has nonempty boundary")]
    NoBoundaryExpected,
    #[error("bad vector: {0}")]
    BadVector(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("relator {0} is empty after free reduction")]
    EmptyRelator(usize),
    #[error("homomorphism budget exceeded: budget {budget} relator evaluations, worst case {required}")]
    BudgetExceeded { budget: u64, required: u128 },
    #[error("schedule step {index}: {source}")]
    ScheduleStep { index: usize, source: Box<Error> },
    #[error("invalid face: {0}")]
    InvalidFace(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
