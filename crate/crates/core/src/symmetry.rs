//! Automorphism groups by backtracking, and the orbit partitions behind the
//! vertex- and edge-transitivity tests.
//!
//! The search follows a base `b_1, b_2, ..` chosen by color refinement:
//! after individualizing the earlier base points and refining, `b_k` is the
//! lowest vertex of the first non-singleton color class. Levels are then
//! processed deepest first. At level `k` every vertex `t` in `b_k`'s class
//! that is not already in the orbit of `b_k` (under the generators found so
//! far, all of which fix `b_1..b_{k-1}`) is tried as an image of `b_k`; a hit
//! becomes a new generator. This yields a generating set of `Aut(G)` and the
//! group order as the product of the level orbit lengths.
//!
//! Individual candidate maps are found by joint refinement of two colorings
//! plus branching on the first non-singleton class, pruning whenever the two
//! colorings disagree on a class size.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for the automorphism search.
pub const DEFAULT_VERTEX_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryConfig {
    pub max_vertices: usize,
}

impl Default for SymmetryConfig {
    fn default() -> Self {
        SymmetryConfig { max_vertices: DEFAULT_VERTEX_CAP }
    }
}

/// A bijection on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || seen[x] {
                return Err(Error::PreconditionViolated(format!(
                    "{image:?} is not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self` after `other`: `v -> self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&v| self.image[v]).collect() }
    }
}

/// Whether `p` maps edges to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.n() {
        return Err(Error::SizeMismatch { perm: p.len(), n: g.n() });
    }
    // p is a bijection, so mapping every edge onto an edge is enough.
    Ok(g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

/// Assignment of elements to orbits. Orbit ids are numbered in order of
/// each orbit's smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    orbit_of: Vec<usize>,
    orbit_count: usize,
}

impl OrbitPartition {
    fn from_union_find(mut uf: UnionFind) -> Self {
        let n = uf.parent.len();
        let mut id_of_root = vec![usize::MAX; n];
        let mut orbit_of = vec![0; n];
        let mut orbit_count = 0;
        for x in 0..n {
            let r = uf.find(x);
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = orbit_count;
                orbit_count += 1;
            }
            orbit_of[x] = id_of_root[r];
        }
        OrbitPartition { orbit_of, orbit_count }
    }

    pub fn orbit_of(&self, x: usize) -> usize {
        self.orbit_of[x]
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_count
    }

    /// The orbits as sorted element lists, in orbit-id order.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.orbit_count];
        for (x, &o) in self.orbit_of.iter().enumerate() {
            out[o].push(x);
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so representatives are deterministic
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Generators of `Aut(G)` together with the derived orbit data.
#[derive(Debug, Clone)]
pub struct Symmetry {
    pub generators: Vec<Permutation>,
    /// `|Aut(G)|`, or `None` if it does not fit in a `u128`.
    pub group_order: Option<u128>,
    pub vertex_orbits: OrbitPartition,
    pub edge_orbits: OrbitPartition,
}

impl Symmetry {
    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_orbits.orbit_count() <= 1
    }

    pub fn is_edge_transitive(&self) -> bool {
        self.edge_orbits.orbit_count() <= 1
    }
}

pub fn analyze(g: &Graph) -> Result<Symmetry> {
    analyze_with(g, SymmetryConfig::default())
}

pub fn analyze_with(g: &Graph, config: SymmetryConfig) -> Result<Symmetry> {
    let (generators, group_order) = search_group(g, config)?;
    let vertex_orbits = orbits_from(g.n(), &generators);
    let edge_orbits = edge_orbits_from(g, &generators);
    Ok(Symmetry { generators, group_order, vertex_orbits, edge_orbits })
}

pub fn automorphism_generators(g: &Graph) -> Result<Vec<Permutation>> {
    Ok(search_group(g, SymmetryConfig::default())?.0)
}

pub fn vertex_orbits(g: &Graph) -> Result<OrbitPartition> {
    Ok(orbits_from(g.n(), &automorphism_generators(g)?))
}

pub fn edge_orbits(g: &Graph) -> Result<OrbitPartition> {
    Ok(edge_orbits_from(g, &automorphism_generators(g)?))
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    Ok(vertex_orbits(g)?.orbit_count() <= 1)
}

/// Edge-transitivity; the edgeless graph is edge-transitive.
pub fn is_edge_transitive(g: &Graph) -> Result<bool> {
    Ok(edge_orbits(g)?.orbit_count() <= 1)
}

/// Orbits of `0..n` under the group generated by `generators`.
pub fn orbits_from(n: usize, generators: &[Permutation]) -> OrbitPartition {
    let mut uf = UnionFind::new(n);
    for p in generators {
        for v in 0..n {
            uf.union(v, p.apply(v));
        }
    }
    OrbitPartition::from_union_find(uf)
}

/// Orbits of the edges of `g` (indexed in [`Graph::edges`] order) under the
/// induced action `{x, y} -> {p(x), p(y)}`.
pub fn edge_orbits_from(g: &Graph, generators: &[Permutation]) -> OrbitPartition {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut uf = UnionFind::new(edges.len());
    for p in generators {
        for (k, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = (p.apply(u), p.apply(v));
            let image = edges
                .binary_search(&(a.min(b), a.max(b)))
                .expect("generators are automorphisms");
            uf.union(k, image);
        }
    }
    OrbitPartition::from_union_find(uf)
}

type Colors = Vec<u32>;

fn color_count(c: &Colors) -> usize {
    c.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Refines the colorings jointly until stable. New colors are ranks of
/// `(old color, sorted neighbor colors)`, so equivariant colorings stay
/// comparable. Returns false as soon as two colorings disagree on how many
/// vertices carry some signature.
fn refine(g: &Graph, colorings: &mut [Colors]) -> bool {
    let n = g.n();
    let mut count = color_count(&colorings[0]);
    loop {
        let mut sigs: Vec<Vec<(u32, Vec<u32>)>> = Vec::with_capacity(colorings.len());
        for c in colorings.iter() {
            sigs.push(
                (0..n)
                    .map(|v| {
                        let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| c[w]).collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect(),
            );
        }
        let mut hist: BTreeMap<&(u32, Vec<u32>), Vec<usize>> = BTreeMap::new();
        let k = colorings.len();
        for (i, s) in sigs.iter().enumerate() {
            for sig in s {
                hist.entry(sig).or_insert_with(|| vec![0; k])[i] += 1;
            }
        }
        if hist.values().any(|h| h.iter().any(|&x| x != h[0])) {
            return false;
        }
        let rank: BTreeMap<&(u32, Vec<u32>), u32> =
            hist.keys().enumerate().map(|(r, &s)| (s, r as u32)).collect();
        for (c, s) in colorings.iter_mut().zip(&sigs) {
            for v in 0..n {
                c[v] = rank[&s[v]];
            }
        }
        let new_count = hist.len();
        if new_count == count {
            return true;
        }
        count = new_count;
    }
}

/// First color (lowest id) with more than one vertex, and that class.
fn first_nontrivial_cell(c: &Colors) -> Option<(u32, Vec<usize>)> {
    let k = color_count(c);
    let mut size = vec![0usize; k];
    for &x in c {
        size[x as usize] += 1;
    }
    let color = (0..k).find(|&x| size[x] > 1)? as u32;
    Some((color, (0..c.len()).filter(|&v| c[v] == color).collect()))
}

fn individualize(c: &mut Colors, v: usize) {
    c[v] = color_count(c) as u32;
}

/// Some automorphism mapping the `left` coloring onto the `right` one.
fn find_map(g: &Graph, left: Colors, right: Colors) -> Option<Permutation> {
    match first_nontrivial_cell(&left) {
        None => {
            let mut at = vec![0; left.len()];
            for (w, &c) in right.iter().enumerate() {
                at[c as usize] = w;
            }
            let p = Permutation { image: left.iter().map(|&c| at[c as usize]).collect() };
            is_automorphism(g, &p).unwrap_or(false).then_some(p)
        }
        Some((color, cell)) => {
            let x = cell[0];
            for y in (0..right.len()).filter(|&y| right[y] == color) {
                let mut pair = [left.clone(), right.clone()];
                individualize(&mut pair[0], x);
                individualize(&mut pair[1], y);
                if refine(g, &mut pair) {
                    let [l, r] = pair;
                    if let Some(p) = find_map(g, l, r) {
                        return Some(p);
                    }
                }
            }
            None
        }
    }
}

fn search_group(g: &Graph, config: SymmetryConfig) -> Result<(Vec<Permutation>, Option<u128>)> {
    let n = g.n();
    if n > config.max_vertices {
        return Err(Error::TooLarge { n, cap: config.max_vertices });
    }
    // Base and per-level colorings.
    let mut levels: Vec<(Colors, usize, Vec<usize>)> = Vec::new();
    let mut current = vec![vec![0u32; n]];
    refine(g, &mut current);
    let mut current = current.pop().unwrap();
    while let Some((_, cell)) = first_nontrivial_cell(&current) {
        let b = cell[0];
        levels.push((current.clone(), b, cell));
        individualize(&mut current, b);
        let mut one = [current];
        refine(g, &mut one);
        let [c] = one;
        current = c;
    }

    let mut generators: Vec<Permutation> = Vec::new();
    let mut order: Option<u128> = Some(1);
    for (coloring, b, cell) in levels.iter().rev() {
        let mut orbit = closure(*b, n, &generators);
        for &t in cell {
            if orbit[t] {
                continue;
            }
            let mut pair = [coloring.clone(), coloring.clone()];
            individualize(&mut pair[0], *b);
            individualize(&mut pair[1], t);
            if !refine(g, &mut pair) {
                continue;
            }
            let [l, r] = pair;
            if let Some(p) = find_map(g, l, r) {
                generators.push(p);
                orbit = closure(*b, n, &generators);
            }
        }
        let len = orbit.iter().filter(|&&x| x).count() as u128;
        order = order.and_then(|o| o.checked_mul(len));
    }
    generators.sort();
    Ok((generators, order))
}

fn closure(start: usize, n: usize, generators: &[Permutation]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for p in generators {
            let w = p.apply(v);
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap().graph
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_order(g: &Graph) -> u128 {
        all_perms(g.n())
            .into_iter()
            .filter(|p| is_automorphism(g, &Permutation { image: p.clone() }).unwrap())
            .count() as u128
    }

    #[test]
    fn automorphism_checks() {
        let c4 = fam("cycle:4");
        assert!(is_automorphism(&c4, &Permutation::new(vec![1, 2, 3, 0]).unwrap()).unwrap());
        assert!(is_automorphism(&c4, &Permutation::identity(4)).unwrap());
        let star = fam("star:3");
        assert!(!is_automorphism(&star, &Permutation::new(vec![1, 0, 2, 3]).unwrap()).unwrap());
        assert_eq!(
            is_automorphism(&star, &Permutation::identity(3)),
            Err(Error::SizeMismatch { perm: 3, n: 4 })
        );
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(analyze(&fam("complete:3")).unwrap().group_order, Some(6));
        assert_eq!(analyze(&fam("cycle:5")).unwrap().group_order, Some(10));
        assert_eq!(analyze(&fam("hypercube:3")).unwrap().group_order, Some(48));
        assert_eq!(analyze(&fam("complete:7")).unwrap().group_order, Some(5040));
        assert_eq!(analyze(&fam("bipartite:3:3")).unwrap().group_order, Some(72));
    }

    #[test]
    fn diamond_3_group() {
        let lg = make_family(&FamilySpec::DiamondComplete(3)).unwrap();
        let g = &lg.graph;
        let sym = analyze(g).unwrap();
        let order = sym.group_order.unwrap();
        assert_eq!(order % 48, 0);
        assert_eq!(order, brute_order(g));
        assert_eq!(order, 48);
        for p in &sym.generators {
            assert!(is_automorphism(g, p).unwrap());
        }
        // every (v_ij, v_ji) transposition is an automorphism
        for (a, b) in [("v12", "v21"), ("v13", "v31"), ("v23", "v32")] {
            let mut image: Vec<usize> = (0..g.n()).collect();
            image.swap(lg.id_of(a).unwrap(), lg.id_of(b).unwrap());
            assert!(is_automorphism(g, &Permutation::new(image).unwrap()).unwrap());
        }
        let orbits = sym.vertex_orbits.orbits();
        assert_eq!(orbits.len(), 2);
        assert_eq!(lg.labels_of(&orbits[0]), ["v1", "v2", "v3"]);
        assert_eq!(orbits[1].len(), 6);
    }

    #[test]
    fn orbit_examples() {
        let v = vertex_orbits(&fam("star:3")).unwrap();
        assert_eq!(v.orbits(), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(edge_orbits(&fam("cycle:5")).unwrap().orbit_count(), 1);
        assert!(is_edge_transitive(&Graph::empty(3).unwrap()).unwrap());
        assert!(is_vertex_transitive(&Graph::empty(0).unwrap()).unwrap());
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_vertex_transitive(&fam("circulant:14:1,2")).unwrap());
        let d4 = fam("diamond:4");
        assert!(is_edge_transitive(&d4).unwrap());
        assert!(!is_vertex_transitive(&d4).unwrap());
        let lq3 = fam("line:hypercube:3");
        assert!(is_vertex_transitive(&lq3).unwrap());
        assert!(is_edge_transitive(&lq3).unwrap());
        // the prism is vertex- but not edge-transitive
        let prism = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_vertex_transitive(&prism).unwrap());
        assert!(!is_edge_transitive(&prism).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = fam("cycle:65");
        assert_eq!(automorphism_generators(&g), Err(Error::TooLarge { n: 65, cap: 64 }));
        let sym = analyze_with(&g, SymmetryConfig { max_vertices: 128 }).unwrap();
        assert_eq!(sym.group_order, Some(130));
    }

    #[test]
    fn petersen_order() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let g = Graph::new(10, &edges).unwrap();
        let sym = analyze(&g).unwrap();
        assert_eq!(sym.group_order, Some(120));
        assert!(sym.is_vertex_transitive() && sym.is_edge_transitive());
    }
}
