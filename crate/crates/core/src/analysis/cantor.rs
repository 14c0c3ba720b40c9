//! Extraction of a regular Cantor set.
//!
//! The accepting states of a trim automaton split its language into the
//! components `V_q W_q^ω`. A component is uncountable iff the strongly
//! connected component of `q` carries two distinct cycle words of equal
//! length. Keeping only the uncountable components and closing yields a
//! compact set without isolated points; when the closure of the input has
//! dimension below one it has empty interior as well.

use alloc::collections::BTreeSet;

use crate::analysis::dimension::hausdorff_dim;
use crate::analysis::sparsity::non_sparse_witness;
use crate::automaton::{BuchiAutomaton, State};
use crate::error::{Error, Result};

/// Values within this distance of 1 count as full dimension.
pub const DIM_TOLERANCE: f64 = 1e-9;

/// Accepting states on cycles whose strongly connected component is not
/// sparse.
fn uncountable_states(a: &BuchiAutomaton) -> BTreeSet<State> {
    let sccs = a.sccs();
    let mut out = BTreeSet::new();
    for c in 0..sccs.count() {
        if !sccs.cyclic[c] {
            continue;
        }
        let members = &sccs.members[c];
        if !members.iter().any(|&q| a.is_accepting(q)) {
            continue;
        }
        let mut keep = alloc::vec![false; a.state_count()];
        for &q in members {
            keep[q] = true;
        }
        let local = a
            .with_initial(members.iter().copied().collect())
            .restrict(&keep)
            .expect("members are initial");
        if non_sparse_witness(&local).is_some() {
            out.extend(members.iter().copied().filter(|&q| a.is_accepting(q)));
        }
    }
    out
}

/// A closed automaton for the union of the uncountable components of `a`.
///
/// When every component of `a` is countable but its closure has positive
/// dimension (as for `(0|2)*1 0^ω` in base 3), the components of the closure
/// are used instead.
pub fn extract_cantor(a: &BuchiAutomaton) -> Result<BuchiAutomaton> {
    if a.arity() != 1 {
        return Err(Error::Arity(a.arity()));
    }
    let a = a.trim()?;
    let closed = a.close()?;
    let dim = hausdorff_dim(&closed)?;
    if dim.value >= 1.0 - DIM_TOLERANCE {
        return Err(Error::InteriorPresent);
    }
    if dim.value == 0.0 {
        return Err(Error::NoCantor);
    }
    let mut source = a;
    let mut keep = uncountable_states(&source);
    if keep.is_empty() {
        source = closed;
        keep = uncountable_states(&source);
    }
    if keep.is_empty() {
        return Err(Error::NoCantor);
    }
    source.with_accepting(keep).trim()?.close()
}

/// Whether every state of a trim automaton can reach a non-sparse strongly
/// connected component, so that no point of its closure is isolated.
pub fn is_perfect(a: &BuchiAutomaton) -> bool {
    let sccs = a.sccs();
    let n = a.state_count();
    let mut rich = alloc::vec![false; n];
    for c in 0..sccs.count() {
        if !sccs.cyclic[c] {
            continue;
        }
        let mut keep = alloc::vec![false; n];
        for &q in &sccs.members[c] {
            keep[q] = true;
        }
        let local = a
            .with_initial(sccs.members[c].iter().copied().collect())
            .restrict(&keep)
            .expect("members are initial");
        if non_sparse_witness(&local).is_some() {
            for &q in &sccs.members[c] {
                rich[q] = true;
            }
        }
    }
    let rev = crate::graph::reverse(&a.adjacency());
    crate::graph::reachable(&rev, (0..n).filter(|&q| rich[q]))
        .into_iter()
        .all(|b| b)
}
