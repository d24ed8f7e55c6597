use thiserror::Error;

use crate::algebra::ModCoord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra (m = {m}, l = {l}): {reason}")]
    InvalidAlgebra {
        m: usize,
        l: usize,
        reason: &'static str,
    },

    #[error("vertex {vertex} is out of range 1..={vertices}")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("operation is undefined on the zero module")]
    ZeroModule,

    #[error("{0} is not an indecomposable module of this algebra")]
    NotAModule(ModCoord),

    #[error("{0} is projective and ends no almost split sequence")]
    ProjectiveRightTerm(ModCoord),

    #[error("n must be at least {min}, got {n}")]
    InvalidOrder { n: usize, min: usize },

    #[error("invalid Kupisch series {series:?}: {reason}")]
    InvalidKupisch { series: Vec<usize>, reason: String },

    #[error("{0} violates the relation bound of the algebra")]
    RelationBound(ModCoord),

    #[error("representation does not satisfy the relations: {0}")]
    RelationViolation(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("search budget of {budget} candidate subsets exceeded")]
    BudgetExceeded { budget: u64 },
}
