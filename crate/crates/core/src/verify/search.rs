//! Search for edge-transitive non-star graphs with a path of a given length
//! that does not close.
//!
//! Each hit is re-certified by a method independent of the closure search:
//! plain paths by a component check on `G` minus the path's interior (or a
//! bridge check for lengths 0 and 1), induced paths by an exhaustive
//! depth-first search for a chordless closing route.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cycles::{closes_to_cycle, closes_to_induced_cycle, enumerate_paths, PathMode};
use crate::error::{Error, Result};
use crate::families::{make_family, FamilySpec};
use crate::graph::{to_graph6, Graph, Path};
use crate::symmetry;

/// Largest circulant order the search enumerates (connection sets are
/// subsets of `1..=n/2`).
pub const CIRCULANT_SEARCH_MAX_N: usize = 40;

#[derive(Debug, Clone)]
pub enum Template {
    /// Every connected circulant on `n` vertices, one per multiplier class.
    Circulant,
    /// The given graphs with exactly `n` vertices.
    Ingest(Vec<Graph>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub family: Option<String>,
    pub graph6: String,
    pub path: Vec<usize>,
    pub induced: bool,
    /// The path was independently confirmed not to close.
    pub certified: bool,
}

/// Connected circulants on `m` vertices, one per class of connection sets
/// under multiplication by units mod `m` (which includes negation), sorted.
pub fn circulant_classes(m: usize) -> Vec<FamilySpec> {
    if m < 3 {
        return Vec::new();
    }
    let half = m / 2;
    let units: Vec<usize> = (1..m).filter(|&u| gcd(u, m) == 1).collect();
    let fold = |t: usize| t.min(m - t);
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << half) {
        let jumps: Vec<usize> = (1..=half).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
        if jumps.iter().fold(m, |acc, &s| gcd(acc, s)) != 1 {
            continue;
        }
        let is_min = units.iter().all(|&u| {
            let image = jumps.iter().fold(0u64, |acc, &s| acc | 1 << (fold(u * s % m) - 1));
            image >= mask
        });
        if is_min {
            out.push(FamilySpec::circulant(m, &jumps).expect("jumps lie in 1..=m/2"));
        }
    }
    out.sort();
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn search_counterexample(n: usize, template: &Template, len: usize, induced: bool) -> Result<Vec<SearchHit>> {
    if n > symmetry::DEFAULT_VERTEX_CAP {
        return Err(Error::TooLarge { n, cap: symmetry::DEFAULT_VERTEX_CAP });
    }
    let candidates: Vec<(Option<String>, Graph)> = match template {
        Template::Circulant => {
            if n > CIRCULANT_SEARCH_MAX_N {
                return Err(Error::TooLarge { n, cap: CIRCULANT_SEARCH_MAX_N });
            }
            circulant_classes(n)
                .into_iter()
                .map(|spec| {
                    let g = make_family(&spec).expect("valid circulant").graph;
                    (Some(spec.to_string()), g)
                })
                .collect()
        }
        Template::Ingest(graphs) => graphs.iter().filter(|g| g.n() == n).map(|g| (None, g.clone())).collect(),
    };
    search_candidates(candidates, len, induced)
}

/// Runs the search over an arbitrary graph list, of any order up to the
/// symmetry cap.
pub fn search_graphs(graphs: &[Graph], len: usize, induced: bool) -> Result<Vec<SearchHit>> {
    if let Some(g) = graphs.iter().find(|g| g.n() > symmetry::DEFAULT_VERTEX_CAP) {
        return Err(Error::TooLarge { n: g.n(), cap: symmetry::DEFAULT_VERTEX_CAP });
    }
    search_candidates(graphs.iter().map(|g| (None, g.clone())).collect(), len, induced)
}

fn search_candidates(candidates: Vec<(Option<String>, Graph)>, len: usize, induced: bool) -> Result<Vec<SearchHit>> {
    let hits: Vec<Option<SearchHit>> = candidates
        .into_par_iter()
        .map(|(family, g)| search_one(family, &g, len, induced))
        .collect::<Result<_>>()?;
    Ok(hits.into_iter().flatten().collect())
}

fn search_one(family: Option<String>, g: &Graph, len: usize, induced: bool) -> Result<Option<SearchHit>> {
    if !g.is_connected() || g.is_star() || len >= g.n() || !symmetry::is_edge_transitive(g)? {
        return Ok(None);
    }
    let mode = if induced { PathMode::Induced } else { PathMode::All };
    for p in enumerate_paths(g, len, mode) {
        let closes = if induced { closes_to_induced_cycle(g, &p)? } else { closes_to_cycle(g, &p)? }.closes;
        if !closes {
            return Ok(Some(SearchHit {
                family,
                graph6: to_graph6(g),
                certified: certify_open(g, &p, induced),
                path: p.verts().to_vec(),
                induced,
            }));
        }
    }
    Ok(None)
}

/// True when `p` provably lies on no cycle (no induced cycle when
/// `induced`).
pub fn certify_open(g: &Graph, p: &Path, induced: bool) -> bool {
    let v = p.verts();
    match v.len() {
        1 => g.neighbors(v[0]).iter().all(|&w| is_bridge(g, v[0], w)),
        2 => is_bridge(g, v[0], v[1]),
        _ if induced => !chordless_route_exists(g, v),
        _ => {
            let keep: Vec<usize> = (0..g.n()).filter(|x| !v[1..v.len() - 1].contains(x)).collect();
            let rest = g.induced_subgraph(&keep);
            let (_, comp) = rest.components();
            let at = |x: usize| keep.binary_search(&x).expect("endpoint kept");
            comp[at(v[0])] != comp[at(v[v.len() - 1])]
        }
    }
}

fn is_bridge(g: &Graph, u: usize, w: usize) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().filter(|&e| e != (u.min(w), u.max(w))).collect();
    let h = Graph::new(g.n(), &edges).expect("subgraph of a simple graph");
    let (_, comp) = h.components();
    comp[u] != comp[w]
}

/// Depth-first search for a route from the last vertex of `v` back to the
/// first whose union with `v` is an induced cycle.
fn chordless_route_exists(g: &Graph, v: &[usize]) -> bool {
    let (first, last) = (v[0], v[v.len() - 1]);
    let interior = &v[1..v.len() - 1];
    let mut blocked = vec![false; g.n()];
    for &x in v {
        blocked[x] = true;
    }
    for &x in interior {
        for &w in g.neighbors(x) {
            blocked[w] = true;
        }
    }
    let mut route = vec![last];
    extend(g, first, &blocked, &mut route)
}

fn extend(g: &Graph, first: usize, blocked: &[bool], route: &mut Vec<usize>) -> bool {
    let tip = *route.last().unwrap();
    if g.has_edge(tip, first) {
        // a chord to `first` from anywhere but the tip was excluded below
        return true;
    }
    for &w in g.neighbors(tip) {
        if blocked[w] || route.contains(&w) {
            continue;
        }
        // `w` may touch the route only at the tip
        if route[..route.len() - 1].iter().any(|&x| g.has_edge(x, w)) {
            continue;
        }
        route.push(w);
        if extend(g, first, blocked, route) {
            return true;
        }
        route.pop();
    }
    false
}
