use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// A path: pairwise distinct vertices, consecutive ones adjacent.
///
/// The stored orientation is the one given at construction; use
/// [`Path::canonical`] to compare paths up to reversal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    verts: Vec<usize>,
}

impl Path {
    /// Validates `verts` against `g`.
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self> {
        check_path(g, &verts)?;
        Ok(Path { verts })
    }

    pub(crate) fn new_unchecked(verts: Vec<usize>) -> Self {
        Path { verts }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.verts.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.verts[0]
    }

    pub fn last(&self) -> usize {
        self.verts[self.verts.len() - 1]
    }

    pub fn reversed(&self) -> Path {
        let mut verts = self.verts.clone();
        verts.reverse();
        Path { verts }
    }

    /// The lexicographically smaller of the path and its reversal.
    pub fn canonical(&self) -> Path {
        let rev = self.reversed();
        if rev.verts < self.verts {
            rev
        } else {
            self.clone()
        }
    }

    /// Consecutive vertex pairs, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.verts.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

pub(crate) fn check_path(g: &Graph, verts: &[usize]) -> Result<()> {
    if verts.is_empty() {
        return Err(Error::NotAPath("empty vertex sequence".into()));
    }
    let mut seen = vec![false; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        if v >= g.n() {
            return Err(Error::NotAPath(format!("vertex {v} out of range")));
        }
        if seen[v] {
            return Err(Error::NotAPath(format!("vertex {v} repeated")));
        }
        seen[v] = true;
        if i > 0 && !g.has_edge(verts[i - 1], v) {
            return Err(Error::NotAPath(format!("{} and {v} not adjacent", verts[i - 1])));
        }
    }
    Ok(())
}

/// A cycle of length at least three, stored in canonical form: it starts at
/// its minimum vertex and continues toward the smaller of that vertex's two
/// cyclic neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Cycle {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self> {
        if verts.len() < 3 {
            return Err(Error::PreconditionViolated(format!(
                "cycle needs at least 3 vertices, got {}",
                verts.len()
            )));
        }
        check_path(g, &verts).map_err(|e| Error::PreconditionViolated(e.to_string()))?;
        if !g.has_edge(verts[0], verts[verts.len() - 1]) {
            return Err(Error::PreconditionViolated("cycle is not closed".into()));
        }
        Ok(Self::canonicalize(verts))
    }

    pub(crate) fn canonicalize(mut verts: Vec<usize>) -> Self {
        let k = verts.len();
        let start = (0..k).min_by_key(|&i| verts[i]).unwrap_or(0);
        verts.rotate_left(start);
        if k >= 3 && verts[k - 1] < verts[1] {
            verts[1..].reverse();
        }
        Cycle { verts }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges (equal to the number of vertices).
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// No edge of `g` joins two vertices that are not cyclically consecutive.
    pub fn is_induced(&self, g: &Graph) -> bool {
        let k = self.verts.len();
        let edges_inside = self
            .verts
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| self.verts[i + 1..].iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| g.has_edge(u, v))
            .count();
        edges_inside == k
    }

    /// Whether `path` occurs as a run of consecutive cycle vertices, in either direction.
    pub fn contains_path(&self, path: &[usize]) -> bool {
        let k = self.verts.len();
        if path.is_empty() || path.len() > k {
            return false;
        }
        let Some(start) = self.verts.iter().position(|&v| v == path[0]) else {
            return false;
        };
        let forward = (0..path.len()).all(|i| self.verts[(start + i) % k] == path[i]);
        let backward = (0..path.len()).all(|i| self.verts[(start + k - i) % k] == path[i]);
        forward || backward
    }
}
