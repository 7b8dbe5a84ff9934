//! Graph families and the witness paths that do not close to cycles.
//!
//! Labeling conventions (stable, relied on by the CLI and the tests):
//!
//! * `circulant:m:s1,s2,..`: vertex `k` is residue `k`, label `"k"`.
//! * `hypercube:d`: vertex id is the integer value of its binary string,
//!   written most significant bit first; coordinate `i` (1-based) is the
//!   `i`-th character, so `e_1` of `Q_3` is `"100"`, id 4.
//! * `diamond:n`: branch vertices `v_1..v_n` are ids `0..n`; then for every
//!   pair `i < j` in lexicographic order come `v_ij` and `v_ji`. `v_ij` sits
//!   on the 4-cycle `v_i v_ij v_j v_ji`.
//! * `line:<spec>`: vertex `k` is the `k`-th edge of the inner graph in
//!   lexicographic `(u, v)` order, labeled `"{a,b}"` with the inner labels.
//! * `complete:n`, `cycle:n` use `0..n` in the obvious order, `star:k` has
//!   center 0, and `bipartite:a:b` has parts `0..a` and `a..a+b`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// Circulant on `m` vertices; `connections` is the full connection set,
    /// sorted and closed under negation.
    Circulant { m: usize, connections: Vec<usize> },
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Cycle(usize),
    Hypercube(usize),
    /// `K_n` with every edge replaced by a 4-cycle through two new vertices.
    DiamondComplete(usize),
    LineGraphOf(Box<FamilySpec>),
}

impl FamilySpec {
    /// Circulant with connection set `±jumps`.
    pub fn circulant(m: usize, jumps: &[usize]) -> Result<Self> {
        if m < 3 {
            return Err(Error::BadSpec(format!("circulant needs m >= 3, got {m}")));
        }
        let mut connections = Vec::new();
        for &s in jumps {
            if s % m == 0 {
                return Err(Error::BadSpec(format!("jump {s} is 0 mod {m}")));
            }
            connections.push(s % m);
            connections.push(m - s % m);
        }
        connections.sort_unstable();
        connections.dedup();
        let spec = FamilySpec::Circulant { m, connections };
        spec.check()?;
        Ok(spec)
    }

    pub fn line_of(inner: FamilySpec) -> Self {
        FamilySpec::LineGraphOf(Box::new(inner))
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadSpec(msg));
        match self {
            FamilySpec::Circulant { m, connections } => {
                if *m < 3 {
                    return bad(format!("circulant needs m >= 3, got {m}"));
                }
                for &s in connections {
                    if s == 0 || s >= *m {
                        return bad(format!("connection {s} outside 1..{m}"));
                    }
                    if connections.binary_search(&(m - s)).is_err() {
                        return bad(format!("connection set not closed under negation: {s}"));
                    }
                }
                if connections.windows(2).any(|w| w[0] >= w[1]) {
                    return bad("connection set must be sorted without repeats".into());
                }
                Ok(())
            }
            FamilySpec::Complete(n) if *n == 0 => bad("complete graph needs n >= 1".into()),
            FamilySpec::Cycle(n) if *n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Hypercube(d) if *d == 0 => bad("hypercube needs dim >= 1".into()),
            FamilySpec::Hypercube(d) if *d > 16 => bad(format!("hypercube dim {d} too large")),
            FamilySpec::DiamondComplete(n) if *n < 3 => {
                bad(format!("diamond_complete needs n >= 3, got {n}"))
            }
            FamilySpec::CompleteBipartite(a, b) if a + b == 0 => {
                bad("complete bipartite graph needs a vertex".into())
            }
            FamilySpec::LineGraphOf(inner) => inner.check(),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Circulant { m, connections } => {
                let jumps: Vec<String> = connections
                    .iter()
                    .filter(|&&s| 2 * s <= *m)
                    .map(|s| s.to_string())
                    .collect();
                write!(f, "circulant:{m}:{}", jumps.join(","))
            }
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "bipartite:{a}:{b}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::DiamondComplete(n) => write!(f, "diamond:{n}"),
            FamilySpec::LineGraphOf(inner) => write!(f, "line:{inner}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| -> Result<usize> {
            t.trim()
                .parse()
                .map_err(|_| Error::BadSpec(format!("expected a number, got {t:?} in {s:?}")))
        };
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let parts: Vec<&str> = if rest.is_empty() { Vec::new() } else { rest.split(':').collect() };
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k {
                Ok(())
            } else {
                Err(Error::BadSpec(format!("{kind} takes {k} parameter(s): {s:?}")))
            }
        };
        let spec = match kind {
            "line" => {
                if rest.is_empty() {
                    return Err(Error::BadSpec("line needs an inner family".into()));
                }
                FamilySpec::line_of(rest.parse()?)
            }
            "circulant" => {
                arity(2)?;
                let jumps = parts[1]
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(num)
                    .collect::<Result<Vec<_>>>()?;
                return FamilySpec::circulant(num(parts[0])?, &jumps);
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(num(parts[0])?)
            }
            "bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite(num(parts[0])?, num(parts[1])?)
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star(num(parts[0])?)
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(num(parts[0])?)
            }
            "hypercube" => {
                arity(1)?;
                FamilySpec::Hypercube(num(parts[0])?)
            }
            "diamond" => {
                arity(1)?;
                FamilySpec::DiamondComplete(num(parts[0])?)
            }
            other => return Err(Error::BadSpec(format!("unknown family {other:?}"))),
        };
        spec.check()?;
        Ok(spec)
    }
}

/// A graph together with human-readable vertex names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Vertex ids for a sequence of labels.
    pub fn ids_of(&self, labels: &[&str]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.id_of(l)
                    .ok_or_else(|| Error::BadParams(format!("no vertex labeled {l:?}")))
            })
            .collect()
    }

    pub fn labels_of(&self, verts: &[usize]) -> Vec<String> {
        verts.iter().map(|&v| self.labels[v].clone()).collect()
    }
}

pub fn make_family(spec: &FamilySpec) -> Result<LabeledGraph> {
    spec.check()?;
    let numbered = |n: usize| (0..n).map(|v| v.to_string()).collect::<Vec<_>>();
    let (graph, labels) = match spec {
        FamilySpec::Circulant { m, connections } => {
            let mut edges = Vec::new();
            for u in 0..*m {
                for &s in connections {
                    let v = (u + s) % m;
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            (Graph::new(*m, &edges)?, numbered(*m))
        }
        FamilySpec::Complete(n) => {
            let edges: Vec<_> = (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))).collect();
            (Graph::new(*n, &edges)?, numbered(*n))
        }
        FamilySpec::CompleteBipartite(a, b) => {
            let edges: Vec<_> = (0..*a).flat_map(|u| (*a..a + b).map(move |v| (u, v))).collect();
            (Graph::new(a + b, &edges)?, numbered(a + b))
        }
        FamilySpec::Star(k) => {
            let edges: Vec<_> = (1..=*k).map(|v| (0, v)).collect();
            (Graph::new(k + 1, &edges)?, numbered(k + 1))
        }
        FamilySpec::Cycle(n) => {
            let edges: Vec<_> = (0..*n).map(|v| (v, (v + 1) % n)).collect();
            (Graph::new(*n, &edges)?, numbered(*n))
        }
        FamilySpec::Hypercube(d) => {
            let n = 1usize << d;
            let edges: Vec<_> = (0..n)
                .flat_map(|x| (0..*d).map(move |b| (x, x ^ (1 << b))))
                .filter(|&(x, y)| x < y)
                .collect();
            let labels = (0..n).map(|x| format!("{x:0width$b}", width = *d)).collect();
            (Graph::new(n, &edges)?, labels)
        }
        FamilySpec::DiamondComplete(n) => {
            let d = Diamond(*n);
            let mut edges = Vec::new();
            let mut labels: Vec<String> = (1..=*n).map(|i| format!("v{i}")).collect();
            for i in 1..=*n {
                for j in i + 1..=*n {
                    let (vij, vji) = (d.corner(i, j), d.corner(j, i));
                    edges.extend([
                        (d.branch(i), vij),
                        (vij, d.branch(j)),
                        (d.branch(j), vji),
                        (vji, d.branch(i)),
                    ]);
                    labels.push(d.corner_label(i, j));
                    labels.push(d.corner_label(j, i));
                }
            }
            (Graph::new(d.order(), &edges)?, labels)
        }
        FamilySpec::LineGraphOf(inner) => {
            let base = make_family(inner)?;
            let (graph, edge_of) = line_graph(&base.graph);
            let labels = edge_of
                .iter()
                .map(|&(u, v)| format!("{{{},{}}}", base.labels[u], base.labels[v]))
                .collect();
            (graph, labels)
        }
    };
    Ok(LabeledGraph { graph, labels })
}

/// Vertex numbering for `K_n^◇` (1-based branch indices).
#[derive(Debug, Clone, Copy)]
struct Diamond(usize);

impl Diamond {
    fn order(self) -> usize {
        self.0 + self.0 * (self.0 - 1)
    }

    fn branch(self, i: usize) -> usize {
        i - 1
    }

    /// `v_ij` for distinct `i, j`.
    fn corner(self, i: usize, j: usize) -> usize {
        let n = self.0;
        let (a, b) = (i.min(j), i.max(j));
        // pairs (a', b') with a' < a, plus those (a, b') with a < b' < b
        let before = (a - 1) * n - (a - 1) * a / 2 + (b - a - 1);
        n + 2 * before + usize::from(i > j)
    }

    fn corner_label(self, i: usize, j: usize) -> String {
        if self.0 <= 9 {
            format!("v{i}{j}")
        } else {
            format!("v{i}_{j}")
        }
    }
}

/// Line graph of `g`, with the underlying edge of each line-graph vertex.
/// Line-graph vertices follow the lexicographic order of `g`'s edges.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edge_of: Vec<(usize, usize)> = g.edges().collect();
    let mut incident = vec![Vec::new(); g.n()];
    for (k, &(u, v)) in edge_of.iter().enumerate() {
        incident[u].push(k);
        incident[v].push(k);
    }
    let mut adj = vec![Vec::new(); edge_of.len()];
    for list in &incident {
        for (a, &e) in list.iter().enumerate() {
            for &f in &list[a + 1..] {
                adj[e].push(f);
                adj[f].push(e);
            }
        }
    }
    // simple graphs: two distinct edges share at most one endpoint
    for list in &mut adj {
        list.sort_unstable();
    }
    (Graph::from_sorted_adjacency(adj), edge_of)
}

/// Line-graph vertices traversed by the edges of `path`, in path order.
pub fn edge_sequence(edge_of: &[(usize, usize)], path: &[usize]) -> Result<Vec<usize>> {
    path.windows(2)
        .map(|w| {
            let key = (w[0].min(w[1]), w[0].max(w[1]));
            edge_of
                .binary_search(&key)
                .map_err(|_| Error::NotAPath(format!("{{{}, {}}} is not an edge", key.0, key.1)))
        })
        .collect()
}

/// The path of length `len` in `make_family(spec)` that does not close to a
/// cycle (or, for line graphs, whose image does not close to an induced
/// cycle).
///
/// * circulant `±{1,2}` on `m` vertices: `(0, m-2, m-1, 1, 2, .., len-2)`,
///   for `len >= 5` and `m >= len + 4`.
/// * `diamond:n`: `(v12, v1, v21, v2, v23, v3, v34, v4, ..)`; from branch
///   vertex `v_i` the walk takes the corner `v_ij` toward the lowest unused
///   branch `v_j`, and once every branch is used it may finish on the lowest
///   fresh corner `v_ij`. Supported for `4 <= len <= 2n`.
/// * `hypercube:d` (`d >= 3`): `(0, e1, e1+e2, e2, .., en, en+e1)` of length
///   `2d`, plus the edge to `e1+e2+en` for length `2d + 1`.
/// * `line:<spec>`: the edge sequence of `witness(spec, len + 1)`.
pub fn witness(spec: &FamilySpec, len: usize) -> Result<Path> {
    let unsupported = |why: String| Err(Error::UnsupportedWitness(format!("{spec} len {len}: {why}")));
    let verts = match spec {
        FamilySpec::Circulant { m, connections } => {
            if connections != &[1, 2, m - 2, m - 1] || *m < 5 {
                return unsupported("only the ±{1,2} circulant has a witness".into());
            }
            if len < 5 {
                return unsupported("circulant witnesses start at length 5".into());
            }
            if *m < len + 4 {
                return unsupported(format!("needs m >= {}", len + 4));
            }
            let mut v = vec![0, m - 2, m - 1];
            v.extend(1..=len - 2);
            v
        }
        FamilySpec::DiamondComplete(n) => {
            if len < 4 {
                return unsupported("diamond witnesses start at length 4".into());
            }
            if len > 2 * n {
                return unsupported(format!("needs n >= {}", len.div_ceil(2)));
            }
            diamond_walk(Diamond(*n), len)
        }
        FamilySpec::Hypercube(d) => {
            if *d < 3 {
                return unsupported("hypercube witnesses need dim >= 3".into());
            }
            if len != 2 * d && len != 2 * d + 1 {
                return unsupported(format!("supported lengths are {} and {}", 2 * d, 2 * d + 1));
            }
            let e = |i: usize| 1usize << (d - i);
            let mut v = vec![0, e(1)];
            for i in 1..*d {
                v.push(e(i) | e(i + 1));
                v.push(e(i + 1));
            }
            v.push(e(*d) | e(1));
            if len == 2 * d + 1 {
                v.push(e(1) | e(2) | e(*d));
            }
            v
        }
        FamilySpec::LineGraphOf(inner) => {
            let base = witness(inner, len + 1)?;
            let g = make_family(inner)?.graph;
            let (_, edge_of) = line_graph(&g);
            edge_sequence(&edge_of, base.verts())?
        }
        _ => return unsupported("no witness for this family".into()),
    };
    let g = make_family(spec)?.graph;
    Path::new(&g, verts).map_err(|e| Error::UnsupportedWitness(format!("{spec} len {len}: {e}")))
}

fn diamond_walk(d: Diamond, len: usize) -> Vec<usize> {
    let n = d.0;
    let mut verts = vec![d.corner(1, 2), d.branch(1), d.corner(2, 1), d.branch(2)];
    let mut used_branch = vec![false; n + 1];
    used_branch[1] = true;
    used_branch[2] = true;
    let mut at = 2;
    while verts.len() < len + 1 {
        match (1..=n).find(|&j| !used_branch[j]) {
            Some(j) => {
                verts.push(d.corner(at, j));
                if verts.len() < len + 1 {
                    verts.push(d.branch(j));
                }
                used_branch[j] = true;
                at = j;
            }
            None => {
                // every branch visited: end on a fresh corner next to v_at
                let j = (1..=n)
                    .find(|&j| j != at && !verts.contains(&d.corner(at, j)))
                    .expect("len <= 2n leaves a fresh corner");
                verts.push(d.corner(at, j));
            }
        }
    }
    verts
}
