//! Isomorphism classes of small graphs.
//!
//! Graphs on `n` vertices arise from graphs on `n - 1` vertices by adding a
//! vertex with an arbitrary neighborhood, so the classes on `n` vertices are
//! the canonical forms of those extensions. The canonical form is the
//! smallest upper-triangle bit string (graph6 bit order) over all labelings
//! that list vertices by non-decreasing degree; restricting to
//! degree-sorted labelings keeps the form an isomorphism invariant while
//! skipping most of the `n!` permutations.

use std::collections::HashSet;
use std::path::Path as FsPath;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// Largest vertex count the built-in census enumerates.
pub const CENSUS_MAX_N: usize = 7;

/// Canonical code and the labeling (`perm[v]` = new label of `v`) achieving it.
pub fn canonical_form(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > 11 {
        return Err(Error::TooLarge { n, cap: 11 });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    // contiguous blocks of equal degree within `order`
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && g.degree(order[j]) == g.degree(order[i]) {
            j += 1;
        }
        blocks.push((i, j));
        i = j;
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut slot = order.clone();
    permute_blocks(&blocks, 0, &mut slot, &mut |slot| {
        // slot[k] = vertex placed at position k
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = code << 1 | g.has_edge(slot[i], slot[j]) as u64;
            }
        }
        if best.as_ref().is_none_or(|(c, _)| code < *c) {
            let mut perm = vec![0; n];
            for (k, &v) in slot.iter().enumerate() {
                perm[v] = k;
            }
            best = Some((code, perm));
        }
    });
    Ok(best.unwrap_or((0, Vec::new())))
}

fn permute_blocks(
    blocks: &[(usize, usize)],
    b: usize,
    slot: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if b == blocks.len() {
        visit(slot);
        return;
    }
    let (lo, hi) = blocks[b];
    heap_permute(slot, lo, hi, hi - lo, &mut |slot| permute_blocks(blocks, b + 1, slot, visit));
}

/// Heap's algorithm over `slot[lo..lo + k]` (with `hi` the block end).
fn heap_permute(
    slot: &mut Vec<usize>,
    lo: usize,
    hi: usize,
    k: usize,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if k <= 1 {
        visit(slot);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(slot, lo, hi, k - 1, visit);
        if k % 2 == 0 {
            slot.swap(lo + i, lo + k - 1);
        } else {
            slot.swap(lo, lo + k - 1);
        }
    }
    heap_permute(slot, lo, hi, k - 1, visit);
}

/// One graph per isomorphism class on exactly `n` vertices (connected or
/// not), in canonical labeling, sorted by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<&'static [Graph]> {
    if n > CENSUS_MAX_N {
        return Err(Error::TooLarge { n, cap: CENSUS_MAX_N });
    }
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    let levels = LEVELS.get_or_init(|| {
        let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0).unwrap()]];
        for k in 1..=CENSUS_MAX_N {
            let prev = &levels[k - 1];
            let mut seen = HashSet::new();
            let mut classes = Vec::new();
            for h in prev {
                for mask in 0u32..(1 << (k - 1)) {
                    let mut edges: Vec<(usize, usize)> = h.edges().collect();
                    edges.extend((0..k - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k - 1)));
                    let g = Graph::new(k, &edges).expect("extension is simple");
                    let (code, perm) = canonical_form(&g).expect("k <= 7");
                    if seen.insert(code) {
                        classes.push((code, g.relabel(&perm).expect("perm has length k")));
                    }
                }
            }
            classes.sort_by_key(|(code, _)| *code);
            levels.push(classes.into_iter().map(|(_, g)| g).collect());
        }
        levels
    });
    Ok(&levels[n])
}

/// One representative per isomorphism class of connected graphs on
/// `1..=max_n` vertices, ordered by vertex count then canonical code.
pub fn enumerate_connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > CENSUS_MAX_N {
        return Err(Error::TooLarge { n: max_n, cap: CENSUS_MAX_N });
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n)?.iter().filter(|g| g.is_connected()).cloned());
    }
    Ok(out)
}

/// Graphs from a graph6 file, one per non-empty line.
pub fn read_graph6_file(path: &FsPath) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadParams(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}
