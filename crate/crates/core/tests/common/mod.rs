//! Brute-force oracles. These deliberately avoid the library's search
//! routines: adjacency is read into a plain matrix and everything else is
//! exhaustive enumeration.

#![allow(dead_code)]

use std::collections::HashSet;

use cyclosure::Graph;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Every cycle, as a vertex sequence starting at its minimum vertex with
/// the smaller of the two neighbors second.
pub fn all_cycles(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    for s in 0..n {
        let mut path = vec![s];
        dfs_cycles(adj, s, &mut path, &mut out);
    }
    out
}

fn dfs_cycles(adj: &[Vec<bool>], s: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    for w in 0..adj.len() {
        if !adj[last][w] {
            continue;
        }
        if w == s && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if w > s && !path.contains(&w) {
            path.push(w);
            dfs_cycles(adj, s, path, out);
            path.pop();
        }
    }
}

pub fn is_chordless(adj: &[Vec<bool>], cyc: &[usize]) -> bool {
    let k = cyc.len();
    (0..k).all(|i| (i + 2..k).all(|j| (i == 0 && j == k - 1) || !adj[cyc[i]][cyc[j]]))
}

/// Every contiguous sub-path with at most `max_len` edges of the given
/// cycles, in both orientations.
pub fn closing_paths(cycles: &[Vec<usize>], max_len: usize) -> HashSet<Vec<usize>> {
    let mut set = HashSet::new();
    for c in cycles {
        let k = c.len();
        for start in 0..k {
            for len in 0..=max_len.min(k - 1) {
                let fwd: Vec<usize> = (0..=len).map(|i| c[(start + i) % k]).collect();
                let mut back = fwd.clone();
                back.reverse();
                set.insert(fwd);
                set.insert(back);
            }
        }
    }
    set
}

/// All simple paths with exactly `len` edges, in both orientations.
pub fn all_paths(adj: &[Vec<bool>], len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..adj.len() {
        let mut path = vec![s];
        extend_paths(adj, len, &mut path, &mut out);
    }
    out
}

fn extend_paths(adj: &[Vec<bool>], len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if path.len() == len + 1 {
        out.push(path.clone());
        return;
    }
    let last = *path.last().unwrap();
    for w in 0..adj.len() {
        if adj[last][w] && !path.contains(&w) {
            path.push(w);
            extend_paths(adj, len, path, out);
            path.pop();
        }
    }
}

pub fn is_induced(adj: &[Vec<bool>], path: &[usize]) -> bool {
    (0..path.len()).all(|i| (i + 2..path.len()).all(|j| !adj[path[i]][path[j]]))
}

fn connected_without(adj: &[Vec<bool>], removed: u32) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| removed >> v & 1 == 0) else {
        return true;
    };
    let mut seen = removed | 1 << start;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if adj[u][w] && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Vertex connectivity by trying every vertex subset in order of size.
pub fn kappa_by_subsets(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    for k in 0..n.saturating_sub(1) {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k && !connected_without(adj, mask) {
                return k;
            }
        }
    }
    n.saturating_sub(1)
}

/// All automorphisms, by trying every permutation.
pub fn automorphisms(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        if (0..n).all(|u| (0..n).all(|v| adj[u][v] == adj[p[u]][p[v]])) {
            out.push(p.to_vec());
        }
    });
    out
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Orbits as sorted lists, sorted by first element.
pub fn orbits_under(items: usize, images: impl Fn(usize) -> Vec<usize>) -> Vec<Vec<usize>> {
    let mut seen = vec![false; items];
    let mut out = Vec::new();
    for x in 0..items {
        if seen[x] {
            continue;
        }
        let mut orbit = images(x);
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
        }
        out.push(orbit);
    }
    out
}
