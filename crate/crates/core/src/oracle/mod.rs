//! Brute-force verification from explicit matrix representations.
//!
//! Nothing here consults the closed forms of [`crate::algebra`]; tops,
//! radicals, kernels and ranks are all computed from arrow matrices over the
//! rationals.

pub mod ext;
pub mod kupisch;
pub mod linalg;
pub mod representation;
pub mod resolution;
pub mod search;
pub mod sequence;

pub use ext::{ext_dim, ext_dims, ExtTable};
pub use kupisch::KupischAlgebra;
pub use linalg::Matrix;
pub use representation::{decompose, hom_dim, kernel, to_matrices, Morphism, Representation};
pub use resolution::{
    cosyzygy_of, min_resolution, projective_cover, single, syzygy_of, tau_inv_of, tau_n_inv_of,
    tau_n_of, tau_of, ProjectiveCover, Resolution,
};
pub use search::{exhaustive_nct_search, is_nct, NctSearcher, SearchOptions, SearchResult, DEFAULT_BUDGET};
pub use sequence::{check_ar_sequence, SequenceCheck};
