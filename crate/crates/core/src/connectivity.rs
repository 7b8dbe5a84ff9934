//! Vertex connectivity.
//!
//! `κ(G)` is the largest `k` with `|V| >= k + 1` such that deleting fewer
//! than `k` vertices never disconnects `G`; so `κ(K_n) = n - 1` and a
//! disconnected graph has `κ = 0`.
//!
//! For a non-complete graph, fix a vertex `s` of minimum degree. Every
//! minimum separator `S` either misses `s`, and then separates `s` from some
//! non-neighbor of `s`, or contains `s`; in the latter case not all of
//! `N(s)` can lie in `S` (since `|S| <= δ`, and `S = N(s) + s` is not
//! minimum), and two neighbors of `s` land on different sides of `G - S`,
//! which makes them non-adjacent. So `κ` is the minimum local connectivity
//! over pairs `(s, w)` with `w` a non-neighbor of `s`, and over
//! non-adjacent pairs of neighbors of `s`. Local connectivity is the number
//! of internally disjoint paths (Menger), computed as a unit-capacity max
//! flow on the vertex-split digraph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// A separating set of size `kappa`; `None` for complete graphs.
    pub witness_cut: Option<Vec<usize>>,
}

pub fn vertex_connectivity(g: &Graph) -> Result<ConnectivityResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(ConnectivityResult { kappa: n - 1, witness_cut: None });
    }
    let s = (0..n).min_by_key(|&v| g.degree(v)).unwrap();
    let mut pairs: Vec<(usize, usize)> =
        (0..n).filter(|&w| w != s && !g.has_edge(s, w)).map(|w| (s, w)).collect();
    let nbrs = g.neighbors(s);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                pairs.push((x, y));
            }
        }
    }
    let mut flow = SplitNetwork::new(g);
    let mut best: Option<Vec<usize>> = None;
    for (a, b) in pairs {
        let limit = best.as_ref().map_or(usize::MAX, Vec::len);
        if let Some(cut) = flow.min_cut(a, b, limit) {
            let better = match &best {
                None => true,
                Some(cur) => cut.len() < cur.len() || (cut.len() == cur.len() && cut < *cur),
            };
            if better {
                best = Some(cut);
            }
        }
    }
    let cut = best.expect("a non-complete graph has a non-adjacent pair");
    Ok(ConnectivityResult { kappa: cut.len(), witness_cut: Some(cut) })
}

/// Residual network over split vertices: `v_in = 2v`, `v_out = 2v + 1`.
/// Internal arcs `v_in -> v_out` have capacity one; arcs `u_out -> w_in`
/// are uncapacitated, so every minimum cut consists of internal arcs.
struct SplitNetwork<'g> {
    g: &'g Graph,
    through: Vec<bool>,
    /// flow on `u_out -> w_in`, keyed by `u * n + w`
    arc: Vec<u32>,
}

impl<'g> SplitNetwork<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        SplitNetwork { g, through: vec![false; n], arc: vec![0; n * n] }
    }

    /// Minimum `a`-`b` vertex separator (`a`, `b` distinct, non-adjacent),
    /// sorted, provided its size is at most `limit`; otherwise `None`.
    fn min_cut(&mut self, a: usize, b: usize, limit: usize) -> Option<Vec<usize>> {
        let n = self.g.n();
        self.through.iter_mut().for_each(|x| *x = false);
        self.arc.iter_mut().for_each(|x| *x = 0);
        let mut value = 0;
        loop {
            let (reached, parent) = self.bfs(a, b);
            if !reached[2 * b] {
                break;
            }
            value += 1;
            if value > limit {
                return None;
            }
            let mut node = 2 * b;
            while node != 2 * a + 1 {
                let prev = parent[node];
                let (pv, nv) = (prev / 2, node / 2);
                match (prev % 2, pv == nv) {
                    (0, true) => self.through[pv] = true,
                    (1, true) => self.through[pv] = false,
                    (1, false) => self.arc[pv * n + nv] += 1,
                    _ => self.arc[nv * n + pv] -= 1,
                }
                node = prev;
            }
        }
        let (reached, _) = self.bfs(a, b);
        let cut: Vec<usize> = (0..n)
            .filter(|&v| reached[2 * v] && !reached[2 * v + 1])
            .collect();
        debug_assert_eq!(cut.len(), value);
        Some(cut)
    }

    /// BFS in the residual network from `a_out`; `a_in` and `b_out` are
    /// never entered.
    fn bfs(&self, a: usize, b: usize) -> (Vec<bool>, Vec<usize>) {
        let n = self.g.n();
        let mut reached = vec![false; 2 * n];
        let mut parent = vec![usize::MAX; 2 * n];
        let start = 2 * a + 1;
        reached[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(node) = queue.pop_front() {
            let v = node / 2;
            let mut visit = |to: usize| {
                if !reached[to] && to != 2 * a && to != 2 * b + 1 {
                    reached[to] = true;
                    parent[to] = node;
                    queue.push_back(to);
                }
            };
            if node % 2 == 0 {
                if !self.through[v] {
                    visit(2 * v + 1);
                }
                for &u in self.g.neighbors(v) {
                    if self.arc[u * n + v] > 0 {
                        visit(2 * u + 1);
                    }
                }
            } else {
                for &w in self.g.neighbors(v) {
                    visit(2 * w);
                }
                if self.through[v] {
                    visit(2 * v);
                }
            }
        }
        (reached, parent)
    }
}

/// Mader–Watkins lower bound for a connected vertex-transitive `d`-regular
/// graph: `κ >= ceil(2(d + 1) / 3)`.
pub fn mader_watkins_bound(d: usize) -> usize {
    (2 * (d + 1)).div_ceil(3)
}

/// Checks `κ(G) >= ceil(2(d+1)/3)`; `G` must be connected and vertex-transitive.
pub fn check_mader_watkins(g: &Graph) -> Result<bool> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::PreconditionViolated("graph must be connected and non-empty".into()));
    }
    if !symmetry::is_vertex_transitive(g)? {
        return Err(Error::PreconditionViolated("graph is not vertex-transitive".into()));
    }
    let d = g.regularity().regular_degree.expect("vertex-transitive graphs are regular");
    Ok(vertex_connectivity(g)?.kappa >= mader_watkins_bound(d))
}

/// Checks `κ(G) = δ(G)`; `G` must be connected and edge-transitive.
pub fn check_watkins_equality(g: &Graph) -> Result<bool> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::PreconditionViolated("graph must be connected and non-empty".into()));
    }
    if !symmetry::is_edge_transitive(g)? {
        return Err(Error::PreconditionViolated("graph is not edge-transitive".into()));
    }
    Ok(vertex_connectivity(g)?.kappa == g.min_degree())
}
