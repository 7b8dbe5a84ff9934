//! Immutable simple undirected graphs on vertices `0..n`.
//!
//! Every graph keeps sorted neighbor lists. Graphs with at most
//! [`BITSET_LIMIT`] vertices also keep one bitset row per vertex (a single
//! `u64` word when `n <= 64`) so adjacency tests are a shift and a mask.

mod dot;
mod graph6;
pub(crate) mod path;

pub use dot::to_dot;
pub use graph6::{parse_graph6, to_graph6};
pub use path::{Cycle, Path};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`Graph::new`].
pub const MAX_VERTICES: usize = 1 << 16;

/// Graphs up to this size carry dense adjacency rows.
pub const BITSET_LIMIT: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Edge pairs are unordered; listing the
    /// same pair twice (in either orientation) is an error.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// `adj` must already be sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let (words, rows) = if n <= BITSET_LIMIT {
            let words = n.div_ceil(64).max(1);
            let mut rows = vec![0u64; n * words];
            for (u, list) in adj.iter().enumerate() {
                for &v in list {
                    rows[u * words + v / 64] |= 1 << (v % 64);
                }
            }
            (words, rows)
        } else {
            (0, Vec::new())
        };
        let g = Graph { n, m, adj, words, rows };
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if self.words == 1 {
            self.rows[u] >> v & 1 == 1
        } else if self.words > 0 {
            self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Checks the symmetry, loop-freeness and edge-count invariants.
    pub fn validate(&self) -> Result<()> {
        let mut total = 0;
        for (u, list) in self.adj.iter().enumerate() {
            total += list.len();
            for (i, &v) in list.iter().enumerate() {
                if v >= self.n {
                    return Err(Error::OutOfRange { vertex: v, n: self.n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if i > 0 && list[i - 1] >= v {
                    return Err(Error::DuplicateEdge(u, v));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::PreconditionViolated(format!(
                        "adjacency not symmetric at {{{u}, {v}}}"
                    )));
                }
            }
        }
        if total != 2 * self.m {
            return Err(Error::PreconditionViolated("edge count mismatch".into()));
        }
        Ok(())
    }

    /// The graph with vertices relabeled so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch { perm: perm.len(), n: self.n });
        }
        let mut adj = vec![Vec::new(); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].push(perm[v]);
            adj[perm[v]].push(perm[u]);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Subgraph induced on `keep` (sorted, distinct), relabeled to `0..keep.len()`
    /// in the order given.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Self::from_sorted_adjacency(adj)
    }

    /// Connected components as a label per vertex, labels numbered in order
    /// of each component's lowest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// Exactly one connected component; graphs with at most one vertex count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().0 == 1
    }

    /// A proper two-coloring, if one exists. Each component is colored by BFS
    /// from its lowest vertex, which lands on side A.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            in_b: side.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn regularity(&self) -> Regularity {
        let min_degree = self.adj.iter().map(Vec::len).min().unwrap_or(0);
        let max_degree = self.adj.iter().map(Vec::len).max().unwrap_or(0);
        Regularity {
            min_degree,
            max_degree,
            regular_degree: (min_degree == max_degree).then_some(min_degree),
        }
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.regularity().min_degree
    }

    pub fn is_complete(&self) -> bool {
        self.n == 0 || self.m == self.n * (self.n - 1) / 2
    }

    /// `K_{1,k}` for some `k >= 0` (so `K_1` and `K_2` are stars).
    pub fn is_star(&self) -> bool {
        match self.n {
            0 => false,
            1 | 2 => self.m == self.n - 1,
            n => self.m == n - 1 && self.adj.iter().any(|l| l.len() == n - 1),
        }
    }
}

/// Two-coloring witness returned by [`Graph::is_bipartite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    in_b: Vec<bool>,
}

impl Bipartition {
    pub fn side_a(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&v| !self.in_b[v]).collect()
    }

    pub fn side_b(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&v| self.in_b[v]).collect()
    }

    pub fn is_side_b(&self, v: usize) -> bool {
        self.in_b[v]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Regularity {
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular_degree: Option<usize>,
}
