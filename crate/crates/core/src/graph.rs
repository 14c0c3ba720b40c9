//! Small directed-graph utilities shared by the automaton algorithms.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Strongly connected components of a graph given by adjacency lists.
#[derive(Clone, Debug)]
pub struct Sccs {
    /// Component id of every node. Ids are in reverse topological order:
    /// an edge `u -> v` between distinct components has `comp[u] > comp[v]`.
    pub comp: Vec<usize>,
    /// Members of each component, ascending.
    pub members: Vec<Vec<usize>>,
    /// Whether a component contains a cycle (size > 1 or a self-loop).
    pub cyclic: Vec<bool>,
}

impl Sccs {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn is_cyclic_node(&self, v: usize) -> bool {
        self.cyclic[self.comp[v]]
    }

    pub fn same(&self, u: usize, v: usize) -> bool {
        self.comp[u] == self.comp[v]
    }
}

/// Tarjan's algorithm, iterative.
pub fn tarjan(adj: &[Vec<usize>]) -> Sccs {
    let n = adj.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut next = 0usize;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let id = members.len();
                    let mut group = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp[w] = id;
                        group.push(w);
                        if w == v {
                            break;
                        }
                    }
                    group.sort_unstable();
                    members.push(group);
                }
            }
        }
    }

    let cyclic = members
        .iter()
        .map(|g| g.len() > 1 || adj[g[0]].contains(&g[0]))
        .collect();
    Sccs {
        comp,
        members,
        cyclic,
    }
}

/// Nodes reachable from `sources` (inclusive).
pub fn reachable(adj: &[Vec<usize>], sources: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::new();
    for s in sources {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

pub fn reverse(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut rev = vec![Vec::new(); adj.len()];
    for (v, succ) in adj.iter().enumerate() {
        for &w in succ {
            rev[w].push(v);
        }
    }
    rev
}

/// BFS parent pointers from `source`, restricted to nodes accepted by `keep`.
/// Returns `None` for unreached nodes and `Some(parent)` (the source is its
/// own parent) otherwise.
pub fn bfs_tree(
    adj: &[Vec<usize>],
    source: usize,
    keep: impl Fn(usize) -> bool,
) -> Vec<Option<usize>> {
    let mut parent = vec![None; adj.len()];
    parent[source] = Some(source);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if parent[w].is_none() && keep(w) {
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    parent
}
