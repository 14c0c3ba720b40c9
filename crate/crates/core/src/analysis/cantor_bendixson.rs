//! Cantor–Bendixson derivatives of closed sparse sets, symbolically.
//!
//! For a chain with nonzero trailing coefficient the accumulation points are
//! exactly the points of its proper truncations: a sequence of distinct points
//! has a subsequence whose first unbounded exponent is `n_j`, and its limit is
//! a point of the truncation to depth `j`. The derivative of a finite union is
//! the union of the derivatives, so isolated depth-1 chains vanish unless they
//! coincide with a truncation of some other chain.

use alloc::vec::Vec;

use crate::expsum::{ExpChain, ExpSumDescription, Point};

pub fn cb_derivative(e: &ExpSumDescription) -> ExpSumDescription {
    let chains: Vec<ExpChain> = e
        .chains
        .iter()
        .filter(|c| c.depth() >= 2)
        .flat_map(|c| (1..c.depth()).map(move |j| c.truncate(j)))
        .collect();
    ExpSumDescription::new(e.base, e.arity, chains).expect("same base and arity")
}

/// The successive derivatives `e, e', e'', ...` up to and including the empty
/// set.
pub fn cb_derivatives(e: &ExpSumDescription) -> Vec<ExpSumDescription> {
    let mut out = alloc::vec![e.clone()];
    while !out.last().expect("nonempty").is_empty() {
        let next = cb_derivative(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

/// Least `k` with the `k`-fold derivative empty.
pub fn cb_rank(e: &ExpSumDescription) -> usize {
    let rank = cb_derivatives(e).len() - 1;
    assert!(rank <= e.max_depth(), "rank exceeds the chain depth");
    rank
}

/// A point of `e` that is isolated in `e`, searched among chain points with
/// exponents up to `depth`.
pub fn isolated_point(e: &ExpSumDescription, depth: u64) -> Option<Point> {
    let d = cb_derivative(e);
    e.enumerate_points(depth)
        .into_iter()
        .find(|p| !d.contains(p))
}
