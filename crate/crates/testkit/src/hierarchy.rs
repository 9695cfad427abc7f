//! Reachability and cycle oracles for broader hierarchies.

use std::collections::{BTreeSet, VecDeque};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

/// Directed `child -> parent` edges over nodes `0..n`.
#[derive(Debug, Clone)]
pub struct Hierarchy {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Hierarchy {
    /// Nodes reachable from `start` in one or more steps.
    pub fn reachable(&self, start: usize) -> BTreeSet<usize> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<usize> = adj[start].iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            if seen.insert(x) {
                queue.extend(adj[x].iter().copied());
            }
        }
        seen
    }

    /// Nodes on a cycle: members of a non-trivial strongly connected
    /// component, or nodes with a self-loop.
    pub fn cyclic_nodes(&self) -> BTreeSet<usize> {
        let mut g = DiGraph::<(), ()>::new();
        let nodes: Vec<_> = (0..self.n).map(|_| g.add_node(())).collect();
        for &(a, b) in &self.edges {
            g.add_edge(nodes[a], nodes[b], ());
        }
        let mut out = BTreeSet::new();
        for comp in tarjan_scc(&g) {
            if comp.len() > 1 {
                out.extend(comp.iter().map(|n| n.index()));
            }
        }
        out.extend(self.edges.iter().filter(|(a, b)| a == b).map(|&(a, _)| a));
        out
    }
}
