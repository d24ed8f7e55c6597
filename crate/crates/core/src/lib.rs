//! Homological combinatorics of the acyclic Nakayama algebras
//! `Lambda(m,l) = KQ_m / rad^l`: closed forms for syzygies, Auslander-Reiten
//! translations and dimensions, n-cluster tilting subcategories, and an
//! independent oracle computing the same data from explicit matrices.

pub mod algebra;
pub mod ar_quiver;
pub mod cli;
pub mod cluster_tilting;
pub mod error;
pub mod modset;
pub mod oracle;

pub use algebra::{Algebra, ArSequence, ModCoord, ModuleKind};
pub use ar_quiver::QuiverGraph;
pub use cluster_tilting::{
    admits_nct, build_nct, check_conditions_a, check_conditions_b, classify, d_rep_finite,
    left_support, right_support, Classification, Condition, ConditionReport, Witness,
};
pub use error::{Error, Result};
pub use modset::ModSet;
