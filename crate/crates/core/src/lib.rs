//! Analysis of base-`r` Büchi-recognizable subsets of `[0,1]^m`.
//!
//! Sets are given by Büchi automata over digit-tuple alphabets. The crate
//! decides sparsity, extracts normal forms and exact exponential-sum
//! descriptions, computes Hausdorff dimensions and Cantor–Bendixson ranks, and
//! enumerates intersections of sparse sets written in two independent bases.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alphabet;
pub mod analysis;
pub mod automaton;
pub mod decompose;
pub mod error;
pub mod expsum;
pub mod fixtures;
pub mod graph;
pub mod intersection;
pub mod lasso;
pub mod normal_form;
pub mod omega;
pub mod rational;
pub mod real;
pub mod regex;
pub mod sample;

pub use alphabet::{Alphabet, DigitTuple, Letter, Word};
pub use analysis::{
    cb_derivative, cb_rank, classify_sparsity, defining_formula, extract_cantor, extract_scale,
    growth_oracle, hausdorff_dim, tameness_verdict, DefiningFormula, Dimension, Growth,
    NonSparseWitness, ScaleTrace, ScaleWitness, SparsityVerdict, TamenessLabel, TamenessVerdict,
};
pub use automaton::{BuchiAutomaton, State, Transition};
pub use decompose::{vw_decompose, VWComponent, VWDecomposition};
pub use error::{Error, Result};
pub use expsum::{to_exp_sum, ExpChain, ExpSumDescription, Point};
pub use intersection::{
    intersect_sparse, intersection_bound_log, mult_independent, sunit_solutions, BoundValue,
    IntersectionReport, TwoBaseProblem,
};
pub use lasso::LassoWord;
pub use normal_form::{
    normalize_cycle_lengths, sparse_closure, sparse_normal_form, Chain, SparseNormalForm,
};
pub use omega::{parse_omega_regex, regex_to_automaton, OmegaRegex};
pub use rational::Rational;
pub use real::{expansion, member, nu, prefix_interval, PrefixInterval};
pub use regex::Regex;
