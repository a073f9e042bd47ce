use std::collections::BTreeSet;

use crate::error::ReduceError;

/// Simple undirected graph on vertices `1..=n` in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edges are unordered pairs of distinct vertices in `1..=n`, each given
    /// once (in either orientation).
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ReduceError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(ReduceError::InvalidGraph(format!("self-loop at {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(ReduceError::InvalidGraph(format!(
                    "edge {u}-{v} outside 1..={n}"
                )));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(ReduceError::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, edges: set, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }
}

/// Checks that `cycle` lists every vertex once and consecutive vertices
/// (cyclically) are adjacent.
pub fn check_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> Result<(), ReduceError> {
    let n = g.n();
    if cycle.len() != n {
        return Err(ReduceError::NotHamiltonian(format!(
            "expected {n} vertices, got {}",
            cycle.len()
        )));
    }
    let mut seen = vec![false; n + 1];
    for &v in cycle {
        if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
            return Err(ReduceError::NotHamiltonian(format!(
                "vertex {v} invalid or repeated"
            )));
        }
    }
    for (i, &v) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % n];
        if !g.has_edge(v, w) {
            return Err(ReduceError::NotHamiltonian(format!(
                "{v} and {w} are not adjacent"
            )));
        }
    }
    Ok(())
}
