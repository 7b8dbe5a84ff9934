//! Closure of paths to cycles and of induced paths to induced cycles.
//!
//! Plain closure of `P = (v_0, .., v_l)` with `l >= 2` asks for a
//! `v_l`-`v_0` route avoiding the internal vertices of `P`. For a single
//! edge the route must avoid the edge itself; for a single vertex any cycle
//! through it will do.
//!
//! Induced closure with `l >= 2`: an induced cycle through an induced path
//! leaves `P` at `v_l` and returns at `v_0` through vertices that are not on
//! `P` and have no neighbor among the internal vertices. Conversely a
//! shortest `v_l`-`v_0` route through such vertices has no chords (a chord
//! to `v_0`, to `v_l` or between route vertices would shorten it), so the
//! question reduces to reachability in that restricted graph. For `l <= 1`
//! a shortest cycle through the vertex or edge is already induced.
//!
//! Both deciders return a shortest witness cycle; among shortest ones, the
//! return route is the lexicographically smallest (read from `v_l`).

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{path::check_path, Cycle, Graph, Path};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureAnswer {
    pub closes: bool,
    pub cycle: Option<Cycle>,
    pub nodes_explored: u64,
}

pub fn is_path(g: &Graph, seq: &[usize]) -> bool {
    check_path(g, seq).is_ok()
}

pub fn is_induced_path(g: &Graph, seq: &[usize]) -> bool {
    is_path(g, seq)
        && seq
            .iter()
            .enumerate()
            .all(|(i, &u)| seq.iter().skip(i + 2).all(|&w| !g.has_edge(u, w)))
}

/// Optional cap on BFS node expansions; exceeding it yields
/// [`Error::Indeterminate`] instead of an answer.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget(pub Option<u64>);

struct Search<'g> {
    g: &'g Graph,
    budget: Budget,
    explored: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, budget: Budget) -> Self {
        Search { g, budget, explored: 0 }
    }

    /// Lexicographically smallest shortest route `from -> .. -> to` using
    /// only vertices with `allowed[v]` (endpoints included), never
    /// traversing the edge `skip`.
    fn route(
        &mut self,
        from: usize,
        to: usize,
        allowed: &[bool],
        skip: Option<(usize, usize)>,
    ) -> Result<Option<Vec<usize>>> {
        let g = self.g;
        let usable = |a: usize, b: usize| skip != Some((a.min(b), a.max(b)));
        let mut dist = vec![usize::MAX; g.n()];
        dist[to] = 0;
        let mut queue = VecDeque::from([to]);
        while let Some(u) = queue.pop_front() {
            self.explored += 1;
            if let Some(cap) = self.budget.0 {
                if self.explored > cap {
                    return Err(Error::Indeterminate(cap));
                }
            }
            if u == from {
                break;
            }
            for &w in g.neighbors(u) {
                if allowed[w] && dist[w] == usize::MAX && usable(u, w) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if dist[from] == usize::MAX {
            return Ok(None);
        }
        let mut route = vec![from];
        let mut at = from;
        while at != to {
            at = *g
                .neighbors(at)
                .iter()
                .find(|&&w| dist[w] != usize::MAX && dist[w] + 1 == dist[at] && usable(at, w))
                .expect("BFS layers are consistent");
            route.push(at);
        }
        Ok(Some(route))
    }

    /// Shortest cycle through the edge `{u, v}`, listed from `u` then `v`.
    fn cycle_through_edge(&mut self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        let allowed = vec![true; self.g.n()];
        let route = self.route(v, u, &allowed, Some((u.min(v), u.max(v))))?;
        Ok(route.map(|r| {
            let mut verts = vec![u];
            verts.extend_from_slice(&r[..r.len() - 1]);
            verts
        }))
    }

    /// Shortest cycle through `v`; ties go to the smallest canonical cycle.
    fn cycle_through_vertex(&mut self, v: usize) -> Result<Option<Cycle>> {
        let mut best: Option<Cycle> = None;
        for &w in self.g.neighbors(v) {
            if let Some(verts) = self.cycle_through_edge(v, w)? {
                let c = Cycle::canonicalize(verts);
                let better = best
                    .as_ref()
                    .is_none_or(|b| (c.len(), c.verts()) < (b.len(), b.verts()));
                if better {
                    best = Some(c);
                }
            }
        }
        Ok(best)
    }

    fn answer(self, cycle: Option<Cycle>) -> ClosureAnswer {
        ClosureAnswer { closes: cycle.is_some(), cycle, nodes_explored: self.explored }
    }
}

pub fn closes_to_cycle(g: &Graph, p: &Path) -> Result<ClosureAnswer> {
    closes_to_cycle_budgeted(g, p, Budget::default())
}

pub fn closes_to_cycle_budgeted(g: &Graph, p: &Path, budget: Budget) -> Result<ClosureAnswer> {
    check_path(g, p.verts())?;
    let mut search = Search::new(g, budget);
    let verts = p.verts();
    let cycle = match p.len() {
        0 => search.cycle_through_vertex(verts[0])?,
        1 => search.cycle_through_edge(verts[0], verts[1])?.map(Cycle::canonicalize),
        _ => close_through(&mut search, verts, plain_allowed(g, verts))?,
    };
    Ok(search.answer(cycle))
}

pub fn closes_to_induced_cycle(g: &Graph, p: &Path) -> Result<ClosureAnswer> {
    closes_to_induced_cycle_budgeted(g, p, Budget::default())
}

pub fn closes_to_induced_cycle_budgeted(
    g: &Graph,
    p: &Path,
    budget: Budget,
) -> Result<ClosureAnswer> {
    check_path(g, p.verts()).map_err(|e| Error::NotInducedPath(e.to_string()))?;
    if !is_induced_path(g, p.verts()) {
        return Err(Error::NotInducedPath(format!("{:?} has a chord", p.verts())));
    }
    let mut search = Search::new(g, budget);
    let verts = p.verts();
    let cycle = match p.len() {
        0 => search.cycle_through_vertex(verts[0])?,
        1 => search.cycle_through_edge(verts[0], verts[1])?.map(Cycle::canonicalize),
        _ => {
            let mut allowed = plain_allowed(g, verts);
            for &x in &verts[1..verts.len() - 1] {
                for &w in g.neighbors(x) {
                    allowed[w] = false;
                }
            }
            allowed[verts[0]] = true;
            allowed[verts[verts.len() - 1]] = true;
            close_through(&mut search, verts, allowed)?
        }
    };
    debug_assert!(cycle.as_ref().is_none_or(|c| c.is_induced(g)));
    Ok(search.answer(cycle))
}

/// Everything except the internal vertices of the path.
fn plain_allowed(g: &Graph, verts: &[usize]) -> Vec<bool> {
    let mut allowed = vec![true; g.n()];
    for &x in &verts[1..verts.len() - 1] {
        allowed[x] = false;
    }
    allowed
}

fn close_through(search: &mut Search<'_>, verts: &[usize], allowed: Vec<bool>) -> Result<Option<Cycle>> {
    let (first, last) = (verts[0], verts[verts.len() - 1]);
    if search.g.has_edge(first, last) {
        return Ok(Some(Cycle::canonicalize(verts.to_vec())));
    }
    let route = search.route(last, first, &allowed, None)?;
    Ok(route.map(|r| {
        let mut cyc = verts.to_vec();
        cyc.extend_from_slice(&r[1..r.len() - 1]);
        Cycle::canonicalize(cyc)
    }))
}

/// True when the first vertex `x` of `P` has all its neighbors on `P` and
/// the last vertex is not adjacent to `x`: then `P` lies on no cycle.
pub fn blocking_certificate(g: &Graph, p: &Path) -> Result<bool> {
    check_path(g, p.verts())?;
    let x = p.first();
    let on_path = |v: &usize| p.verts().contains(v);
    Ok(g.neighbors(x).iter().all(on_path) && !g.has_edge(x, p.last()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathMode {
    All,
    Induced,
}

/// Every path with exactly `len` edges, once each, in canonical orientation
/// (first vertex below last), in lexicographic order.
pub fn enumerate_paths(g: &Graph, len: usize, mode: PathMode) -> Paths<'_> {
    Paths {
        g,
        len,
        induced: mode == PathMode::Induced,
        next_start: 0,
        path: Vec::with_capacity(len + 1),
        cursor: Vec::with_capacity(len + 1),
        on_path: vec![false; g.n()],
    }
}

pub struct Paths<'g> {
    g: &'g Graph,
    len: usize,
    induced: bool,
    next_start: usize,
    path: Vec<usize>,
    cursor: Vec<usize>,
    on_path: Vec<bool>,
}

impl Paths<'_> {
    fn pop(&mut self) {
        if let Some(v) = self.path.pop() {
            self.on_path[v] = false;
            self.cursor.pop();
        }
    }

    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.cursor.push(0);
        self.on_path[v] = true;
    }

    fn extends(&self, w: usize) -> bool {
        if self.on_path[w] {
            return false;
        }
        !self.induced
            || self.path[..self.path.len() - 1].iter().all(|&u| !self.g.has_edge(u, w))
    }
}

impl Iterator for Paths<'_> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        loop {
            if self.path.is_empty() {
                if self.next_start >= self.g.n() {
                    return None;
                }
                let s = self.next_start;
                self.next_start += 1;
                self.push(s);
            }
            if self.path.len() == self.len + 1 {
                let emit = self.len == 0 || self.path[0] < self.path[self.len];
                let out = emit.then(|| Path::new_unchecked(self.path.clone()));
                self.pop();
                if out.is_some() {
                    return out;
                }
                continue;
            }
            let top = *self.path.last().unwrap();
            let nbrs = self.g.neighbors(top);
            let mut i = *self.cursor.last().unwrap();
            while i < nbrs.len() && !self.extends(nbrs[i]) {
                i += 1;
            }
            if i < nbrs.len() {
                *self.cursor.last_mut().unwrap() = i + 1;
                self.push(nbrs[i]);
            } else {
                self.pop();
            }
        }
    }
}

/// Every induced (chordless) cycle of `g` with at least `min_len` vertices,
/// canonical and sorted. Each cycle is grown from its minimum vertex as an
/// induced path whose vertices may touch that start vertex only at the end.
pub fn induced_cycles(g: &Graph, min_len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 0..g.n() {
        path.push(s);
        grow_induced(g, &mut path, min_len.max(3), &mut out);
        path.pop();
    }
    out.sort();
    out
}

fn grow_induced(g: &Graph, path: &mut Vec<usize>, min_len: usize, out: &mut Vec<Cycle>) {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        if path.len() >= 2 {
            if path[1..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            if g.has_edge(s, w) {
                if path[1] < w && path.len() + 1 >= min_len {
                    let mut verts = path.clone();
                    verts.push(w);
                    out.push(Cycle::canonicalize(verts));
                }
                continue;
            }
        }
        path.push(w);
        grow_induced(g, path, min_len, out);
        path.pop();
    }
}
