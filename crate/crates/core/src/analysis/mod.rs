//! The classification pipeline for regular sets.

pub mod cantor;
pub mod cantor_bendixson;
pub mod dimension;
pub mod formula;
pub mod growth;
pub mod scale;
pub mod sparsity;
pub mod verdict;

pub use cantor::{extract_cantor, is_perfect};
pub use cantor_bendixson::{cb_derivative, cb_derivatives, cb_rank, isolated_point};
pub use dimension::{hausdorff_dim, Dimension};
pub use formula::{defining_formula, DefiningFormula};
pub use growth::{growth_oracle, Growth};
pub use scale::{extract_scale, ScaleTrace, ScaleWitness};
pub use sparsity::{classify_sparsity, NonSparseWitness, SparsityVerdict};
pub use verdict::{tameness_verdict, TamenessLabel, TamenessVerdict};
