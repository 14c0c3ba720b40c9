//! Structural sparsity decision.
//!
//! A trim automaton is non-sparse iff some state `q` carries two distinct
//! cycle words of equal length. In the self-product this is a cycle through the
//! diagonal pair `(q, q)` that uses at least one edge whose two labels differ.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::alphabet::{Letter, Word};
use crate::automaton::{BuchiAutomaton, State};
use crate::error::Result;
use crate::graph;
use crate::normal_form::{sparse_normal_form, SparseNormalForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonSparseWitness {
    pub state: State,
    /// Two distinct equal-length cycle words at `state`.
    pub a: Word,
    pub b: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SparsityVerdict {
    Sparse(SparseNormalForm),
    NonSparse(NonSparseWitness),
}

impl SparsityVerdict {
    pub fn is_sparse(&self) -> bool {
        matches!(self, SparsityVerdict::Sparse(_))
    }
}

struct PairGraph {
    n: usize,
    /// `(a, b, target)` per node, where the node id of `(x, y)` is `x * n + y`.
    edges: Vec<Vec<(Letter, Letter, usize)>>,
}

impl PairGraph {
    fn new(a: &BuchiAutomaton) -> PairGraph {
        let n = a.state_count();
        let succ = a.successors();
        let mut edges = vec![Vec::new(); n * n];
        for x in 0..n {
            for y in 0..n {
                for &(la, x2) in &succ[x] {
                    for &(lb, y2) in &succ[y] {
                        edges[x * n + y].push((la, lb, x2 * n + y2));
                    }
                }
            }
        }
        PairGraph { n, edges }
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .map(|es| {
                let mut t: Vec<usize> = es.iter().map(|&(_, _, t)| t).collect();
                t.dedup();
                t
            })
            .collect()
    }
}

/// BFS inside one component, returning per-node `(parent, a, b)` edges.
fn bfs(
    edges: &[Vec<(Letter, Letter, usize)>],
    start: usize,
    keep: impl Fn(usize) -> bool,
    reverse: bool,
) -> Vec<Option<(usize, Letter, Letter)>> {
    let mut parent: Vec<Option<(usize, Letter, Letter)>> = vec![None; edges.len()];
    let mut seen = vec![false; edges.len()];
    seen[start] = true;
    let mut rev: Vec<Vec<(Letter, Letter, usize)>> = Vec::new();
    if reverse {
        rev = vec![Vec::new(); edges.len()];
        for (u, es) in edges.iter().enumerate() {
            for &(a, b, v) in es {
                rev[v].push((a, b, u));
            }
        }
    }
    let adj = if reverse { &rev } else { edges };
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(a, b, v) in &adj[u] {
            if !seen[v] && keep(v) {
                seen[v] = true;
                parent[v] = Some((u, a, b));
                queue.push_back(v);
            }
        }
    }
    parent[start] = Some((start, Letter(0), Letter(0)));
    parent
}

/// Labels along the BFS path from the root to `v` (forward tree) or from `v`
/// to the root (reverse tree).
fn path_labels(
    parent: &[Option<(usize, Letter, Letter)>],
    root: usize,
    mut v: usize,
    reverse: bool,
) -> (Word, Word) {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    while v != root {
        let (p, la, lb) = parent[v].expect("node in tree");
        a.push(la);
        b.push(lb);
        v = p;
    }
    if !reverse {
        a.reverse();
        b.reverse();
    }
    (a, b)
}

/// Smallest state with two distinct equal-length cycle words, with a
/// shortest such pair.
pub fn non_sparse_witness(a: &BuchiAutomaton) -> Option<NonSparseWitness> {
    let g = PairGraph::new(a);
    let n = g.n;
    let sccs = graph::tarjan(&g.adjacency());
    for q in 0..n {
        let d = q * n + q;
        let c = sccs.comp[d];
        if !sccs.cyclic[c] {
            continue;
        }
        let inside = |v: usize| sccs.comp[v] == c;
        let fwd = bfs(&g.edges, d, inside, false);
        let bwd = bfs(&g.edges, d, inside, true);
        let depth = |tree: &[Option<(usize, Letter, Letter)>], mut v: usize| {
            let mut k = 0;
            while v != d {
                v = tree[v].expect("node in tree").0;
                k += 1;
            }
            k
        };
        let mut best: Option<(usize, Word, Word)> = None;
        for u in (0..n * n).filter(|&u| inside(u)) {
            for &(la, lb, v) in &g.edges[u] {
                if la == lb || !inside(v) {
                    continue;
                }
                let len = depth(&fwd, u) + 1 + depth(&bwd, v);
                if best.as_ref().is_some_and(|(l, _, _)| *l < len) {
                    continue;
                }
                let (mut wa, mut wb) = path_labels(&fwd, d, u, false);
                wa.push(la);
                wb.push(lb);
                let (ta, tb) = path_labels(&bwd, d, v, true);
                wa.extend(ta);
                wb.extend(tb);
                if wa > wb {
                    core::mem::swap(&mut wa, &mut wb);
                }
                let candidate = (len, wa, wb);
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
        if let Some((_, wa, wb)) = best {
            return Some(NonSparseWitness {
                state: q,
                a: wa,
                b: wb,
            });
        }
    }
    None
}

pub fn classify_sparsity(a: &BuchiAutomaton) -> Result<SparsityVerdict> {
    let a = a.trim()?;
    match non_sparse_witness(&a) {
        Some(w) => Ok(SparsityVerdict::NonSparse(w)),
        None => Ok(SparsityVerdict::Sparse(sparse_normal_form(&a)?)),
    }
}
