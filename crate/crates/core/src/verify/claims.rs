//! The claim catalog: which instances each claim sweeps and how a single
//! instance is checked.

use std::collections::BTreeMap;

use super::census::enumerate_connected_graphs;
use super::search::circulant_classes;
use super::{ClaimId, ClaimParams, Counterexample, Facts, Item, Outcome};
use crate::connectivity::mader_watkins_bound;
use crate::cycles::{
    blocking_certificate, closes_to_cycle, closes_to_induced_cycle, enumerate_paths, induced_cycles,
    is_induced_path, PathMode,
};
use crate::error::{Error, Result};
use crate::families::{edge_sequence, line_graph, make_family, witness, FamilySpec};
use crate::graph::{parse_graph6, Cycle, Graph, Path};
use crate::symmetry::{analyze_with, SymmetryConfig};

pub(crate) type Check = fn(&Item, &Facts<'_>, &ClaimParams) -> Result<Outcome>;

/// Line graphs with more vertices than this skip the induced-cycle
/// enumeration of the line-graph lemma.
const LINE_CYCLE_CAP: usize = 24;
const CIRCULANT_WITNESS_MAX_M: usize = 20;

/// Generated family instances used by the theorem claims, before the
/// vertex-count filter.
pub fn family_sweep() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((1..=8).map(FamilySpec::Complete));
    for a in 1..=6 {
        specs.extend((a..=6).map(|b| FamilySpec::CompleteBipartite(a, b)));
    }
    specs.extend((2..=8).map(FamilySpec::Star));
    specs.extend((3..=16).map(FamilySpec::Cycle));
    specs.extend((1..=5).map(FamilySpec::Hypercube));
    specs.extend((3..=6).map(FamilySpec::DiamondComplete));
    specs.extend((5..=40).map(|m| FamilySpec::circulant(m, &[1, 2]).expect("valid circulant")));
    for m in 5..=9 {
        specs.extend(circulant_classes(m).into_iter().filter(|s| !is_complete_circulant(s)));
    }
    specs.extend((3..=5).map(|n| FamilySpec::line_of(FamilySpec::DiamondComplete(n))));
    specs.extend((3..=4).map(|d| FamilySpec::line_of(FamilySpec::Hypercube(d))));
    specs
}

fn is_complete_circulant(spec: &FamilySpec) -> bool {
    matches!(spec, FamilySpec::Circulant { m, connections } if connections.len() + 1 == *m)
}

fn census(params: &ClaimParams, max_n: usize) -> Result<Vec<Item>> {
    Ok(match &params.census {
        Some(file) => file
            .graphs
            .iter()
            .filter(|g| g.n() <= max_n)
            .map(|g| Item::new(format!("census:{}", file.source), g.clone(), None, None))
            .collect(),
        None => enumerate_connected_graphs(params.max_n.min(max_n))?
            .into_iter()
            .map(|g| Item::new("census".into(), g, None, None))
            .collect(),
    })
}

fn family_items(params: &ClaimParams, specs: impl IntoIterator<Item = FamilySpec>) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for spec in specs {
        let g = make_family(&spec)?.graph;
        if g.n() <= params.family_max_vertices {
            out.push(Item::new(spec.to_string(), g, Some(spec), None));
        }
    }
    Ok(out)
}

fn census_and_families(params: &ClaimParams) -> Result<Vec<Item>> {
    let mut items = census(params, usize::MAX)?;
    items.extend(family_items(params, family_sweep())?);
    Ok(items)
}

/// One item per (family member, path length) with a witness sweep.
fn witness_items(
    params: &ClaimParams,
    specs: impl IntoIterator<Item = FamilySpec>,
    lens: impl Fn(&FamilySpec) -> Vec<usize>,
) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for item in family_items(params, specs)? {
        let spec = item.spec.clone().expect("family item");
        for len in lens(&spec) {
            out.push(Item { len: Some(len), ..item.clone() });
        }
    }
    Ok(out)
}

pub(crate) fn plan(claim: ClaimId, params: &ClaimParams) -> Result<(Vec<Item>, Check)> {
    use ClaimId::*;
    let range = |default| {
        let (a, b) = params.lens(default);
        (a..=b).collect::<Vec<usize>>()
    };
    let items = match claim {
        VtPtoc | VtIndPtoc | EtPtoc3 | EtIndPtoc3 | EtNostarPtoc | EtNostarInd | KappaTrick | RegPtoc
        | WatkinsEq | MaderWatkins | StarLemma | EtVtOrBipartite => census_and_families(params)?,
        LineGraphLemma => {
            let mut items = census(params, 6)?;
            let specs = (3..=6)
                .map(FamilySpec::DiamondComplete)
                .chain((1..=5).map(FamilySpec::Hypercube));
            items.extend(family_items(params, specs)?);
            items
        }
        DiracThomassen => census(params, usize::MAX)?,
        CwCirculant => {
            let lens = range((5, 8));
            let min_m = lens.first().map_or(usize::MAX, |l| l + 4).max(5);
            let specs = (min_m..=CIRCULANT_WITNESS_MAX_M)
                .map(|m| FamilySpec::circulant(m, &[1, 2]).expect("valid circulant"));
            witness_items(params, specs, |spec| match spec {
                FamilySpec::Circulant { m, .. } => lens.iter().copied().filter(|l| l + 4 <= *m).collect(),
                _ => Vec::new(),
            })?
        }
        CwStars => family_items(params, (2..=8).map(FamilySpec::Star))?,
        CwDiamond => {
            let lens = range((4, 8));
            witness_items(params, (3..=6).map(FamilySpec::DiamondComplete), |_| lens.clone())?
        }
        CwLineDiamond => {
            let lens = range((3, 7));
            let specs = (3..=5).map(|n| FamilySpec::line_of(FamilySpec::DiamondComplete(n)));
            witness_items(params, specs, |_| lens.clone())?
        }
        CwHypercubeLine => {
            let specs = (3..=4).map(|d| FamilySpec::line_of(FamilySpec::Hypercube(d)));
            witness_items(params, specs, |spec| match spec {
                FamilySpec::LineGraphOf(inner) => match **inner {
                    FamilySpec::Hypercube(d) => vec![2 * d - 1, 2 * d],
                    _ => Vec::new(),
                },
                _ => Vec::new(),
            })?
        }
    };
    Ok((items, check_for(claim)))
}

pub(crate) fn describe_params(claim: ClaimId, params: &ClaimParams) -> BTreeMap<String, String> {
    use ClaimId::*;
    let mut map = BTreeMap::new();
    let census = match &params.census {
        Some(file) => format!("file:{} ({} graphs)", file.source, file.graphs.len()),
        None => format!("builtin connected, n <= {}", params.max_n),
    };
    let lens = |default: (usize, usize)| {
        let (a, b) = params.lens(default);
        format!("{a}..{b}")
    };
    let (sweep, len_range) = match claim {
        VtPtoc | RegPtoc => ("census + families".to_string(), lens((0, 4))),
        VtIndPtoc => ("census + families".to_string(), lens((0, 2))),
        EtPtoc3 | EtIndPtoc3 => ("census + families".to_string(), lens((3, 3))),
        EtNostarPtoc | EtNostarInd => ("census + families".to_string(), lens((0, 3))),
        KappaTrick => ("census + families".to_string(), match params.len_range {
            Some((a, b)) => format!("{a}..min({b}, kappa)"),
            None => "0..kappa".to_string(),
        }),
        WatkinsEq | MaderWatkins | StarLemma | EtVtOrBipartite => ("census + families".to_string(), "-".into()),
        LineGraphLemma => (
            format!("census n <= 6, diamond:3..6, hypercube:1..5; induced cycles when |L(G)| <= {LINE_CYCLE_CAP}"),
            lens((1, 6)),
        ),
        DiracThomassen => ("census, n >= 3".to_string(), "0..n-1".into()),
        CwCirculant => (format!("circulant:m:1,2 for m in l+4..{CIRCULANT_WITNESS_MAX_M}"), lens((5, 8))),
        CwStars => ("star:2..8".to_string(), "0..2".into()),
        CwDiamond => ("diamond:3..6".to_string(), lens((4, 8))),
        CwLineDiamond => ("line:diamond:3..5".to_string(), lens((3, 7))),
        CwHypercubeLine => ("line:hypercube:3..4".to_string(), "2d-1..2d".into()),
    };
    if !matches!(claim, CwCirculant | CwStars | CwDiamond | CwLineDiamond | CwHypercubeLine) {
        map.insert("census".into(), census);
    }
    map.insert("sweep".into(), sweep);
    map.insert("len_range".into(), len_range);
    map.insert("family_max_vertices".into(), params.family_max_vertices.to_string());
    map.insert("symmetry_cap".into(), params.symmetry_cap.to_string());
    map
}

/// Re-runs the single check that produced `cx`; true when the violation is
/// reproduced.
pub fn replay(claim: ClaimId, cx: &Counterexample, params: &ClaimParams) -> Result<bool> {
    let graph = parse_graph6(&cx.graph6)?;
    let spec = cx.family.as_deref().map(str::parse::<FamilySpec>).transpose()?;
    if let Some(spec) = &spec {
        if make_family(spec)?.graph != graph {
            return Err(Error::BadParams(format!("{spec} does not match {}", cx.graph6)));
        }
    }
    let label = spec.as_ref().map_or_else(|| "replay".to_string(), ToString::to_string);
    let item = Item::new(label, graph, spec, cx.len);
    let check = check_for(claim);
    let facts = Facts::new(&item.graph, params.symmetry_cap);
    Ok(matches!(check(&item, &facts, params)?, Outcome::Violation(_)))
}

fn check_for(claim: ClaimId) -> Check {
    use ClaimId::*;
    match claim {
        VtPtoc => check_vt_ptoc,
        VtIndPtoc => check_vt_ind_ptoc,
        EtPtoc3 => check_et_ptoc_3,
        EtIndPtoc3 => check_et_ind_ptoc_3,
        EtNostarPtoc => check_et_nostar_ptoc,
        EtNostarInd => check_et_nostar_ind,
        KappaTrick => check_kappa_trick,
        RegPtoc => check_reg_ptoc,
        WatkinsEq => check_watkins_eq,
        MaderWatkins => check_mader_watkins,
        StarLemma => check_star_lemma,
        EtVtOrBipartite => check_et_vt_or_bipartite,
        LineGraphLemma => check_line_graph_lemma,
        DiracThomassen => check_dirac_thomassen,
        CwCirculant => check_cw_circulant,
        CwStars => check_cw_stars,
        CwDiamond => check_cw_diamond,
        CwLineDiamond | CwHypercubeLine => check_cw_line,
    }
}

// ---- shared pieces ----

/// First path (by length, then lexicographically) that does not close.
fn first_open(g: &Graph, lens: (usize, usize), mode: PathMode) -> Result<Option<Path>> {
    for len in lens.0..=lens.1 {
        if len >= g.n() {
            break;
        }
        for p in enumerate_paths(g, len, mode) {
            let ans = match mode {
                PathMode::All => closes_to_cycle(g, &p)?,
                PathMode::Induced => closes_to_induced_cycle(g, &p)?,
            };
            if !ans.closes {
                return Ok(Some(p));
            }
        }
    }
    Ok(None)
}

fn path_outcome(item: &Item, open: Option<Path>, what: &str) -> Outcome {
    match open {
        None => Outcome::Checked,
        Some(p) => item.counterexample(Some(p.verts().to_vec()), format!("{what} does not close")),
    }
}

fn require_vt(facts: &Facts<'_>) -> Result<Option<Outcome>> {
    if facts.g.n() < 3 {
        return Ok(Some(Outcome::Excluded("fewer than 3 vertices")));
    }
    if !facts.vertex_transitive()? {
        return Ok(Some(Outcome::Excluded("not vertex-transitive")));
    }
    Ok(None)
}

fn require_et(facts: &Facts<'_>, nostar: bool) -> Result<Option<Outcome>> {
    if !facts.edge_transitive()? {
        return Ok(Some(Outcome::Excluded("not edge-transitive")));
    }
    if nostar && facts.g.is_star() {
        return Ok(Some(Outcome::Excluded("star")));
    }
    Ok(None)
}

// ---- theorem claims ----

fn check_vt_ptoc(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_vt(facts)? {
        return Ok(out);
    }
    let open = first_open(facts.g, params.lens((0, 4)), PathMode::All)?;
    Ok(path_outcome(item, open, "path"))
}

/// Also checks, on every instance, that the shortest cycle through each
/// vertex and each edge is induced.
fn check_vt_ind_ptoc(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    let g = facts.g;
    for len in 0..=1 {
        for p in enumerate_paths(g, len, PathMode::All) {
            if let Some(c) = closes_to_cycle(g, &p)?.cycle {
                if !c.is_induced(g) {
                    return Ok(item.counterexample(
                        Some(p.verts().to_vec()),
                        format!("shortest cycle {:?} has a chord", c.verts()),
                    ));
                }
            }
        }
    }
    if let Some(out) = require_vt(facts)? {
        return Ok(out);
    }
    let open = first_open(g, params.lens((0, 2)), PathMode::Induced)?;
    Ok(path_outcome(item, open, "induced path"))
}

fn check_et_ptoc_3(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_et(facts, false)? {
        return Ok(out);
    }
    let open = first_open(facts.g, params.lens((3, 3)), PathMode::All)?;
    Ok(path_outcome(item, open, "path"))
}

fn check_et_ind_ptoc_3(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_et(facts, false)? {
        return Ok(out);
    }
    let open = first_open(facts.g, params.lens((3, 3)), PathMode::Induced)?;
    Ok(path_outcome(item, open, "induced path"))
}

fn check_et_nostar_ptoc(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_et(facts, true)? {
        return Ok(out);
    }
    let open = first_open(facts.g, params.lens((0, 3)), PathMode::All)?;
    Ok(path_outcome(item, open, "path"))
}

/// On bipartite instances, also checks the step used for induced 2-paths
/// `(x, y, z)`: `x` has a neighbor `x'` off the path, and each such `x'`
/// either closes an induced 4-cycle `(x', x, y, z)` or extends the path to
/// an induced 3-path.
fn check_et_nostar_ind(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_et(facts, true)? {
        return Ok(out);
    }
    let g = facts.g;
    if g.is_bipartite().is_some() {
        for p in enumerate_paths(g, 2, PathMode::Induced) {
            let v = p.verts();
            for (x, y, z) in [(v[0], v[1], v[2]), (v[2], v[1], v[0])] {
                let outside: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| w != y).collect();
                if outside.is_empty() {
                    return Ok(item.counterexample(Some(vec![x, y, z]), "endpoint has no neighbor off the path"));
                }
                for xp in outside {
                    let ok = if g.has_edge(xp, z) {
                        Cycle::new(g, vec![xp, x, y, z]).is_ok_and(|c| c.is_induced(g))
                    } else {
                        is_induced_path(g, &[xp, x, y, z])
                    };
                    if !ok {
                        return Ok(item.counterexample(
                            Some(vec![x, y, z]),
                            format!("neighbor {xp} gives neither an induced 4-cycle nor an induced 3-path"),
                        ));
                    }
                }
            }
        }
    }
    let open = first_open(g, params.lens((0, 3)), PathMode::Induced)?;
    Ok(path_outcome(item, open, "induced path"))
}

/// Requires `kappa >= 2` on top of `min degree >= 2`: with a cut vertex, a
/// bridge is a 1-edge path on no cycle (two triangles joined by an edge).
fn check_kappa_trick(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    if facts.g.min_degree() < 2 {
        return Ok(Outcome::Excluded("min degree below 2"));
    }
    let kappa = facts.kappa()?;
    if kappa < 2 {
        return Ok(Outcome::Excluded("connectivity below 2"));
    }
    let (a, b) = params.lens((0, kappa));
    if a > b.min(kappa) {
        return Ok(Outcome::Checked);
    }
    let open = first_open(facts.g, (a, b.min(kappa)), PathMode::All)?;
    Ok(path_outcome(item, open, &format!("path of length at most kappa = {kappa}")))
}

fn check_reg_ptoc(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    let Some(d) = facts.g.regularity().regular_degree else {
        return Ok(Outcome::Excluded("not regular"));
    };
    let kappa = facts.kappa()?;
    if !(kappa >= 4 || (kappa == 3 && d == 3)) {
        return Ok(Outcome::Excluded("connectivity hypothesis fails"));
    }
    let open = first_open(facts.g, params.lens((0, 4)), PathMode::All)?;
    Ok(path_outcome(item, open, "path"))
}

fn check_watkins_eq(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_et(facts, false)? {
        return Ok(out);
    }
    let (kappa, delta) = (facts.kappa()?, facts.g.min_degree());
    Ok(if kappa == delta {
        Outcome::Checked
    } else {
        item.counterexample(None, format!("kappa {kappa} != min degree {delta}"))
    })
}

/// Applies the `|V| >= 3` filter: `K_1` and `K_2` fall below the bound.
fn check_mader_watkins(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_vt(facts)? {
        return Ok(out);
    }
    let d = facts.g.regularity().regular_degree.expect("vertex-transitive graphs are regular");
    let kappa = facts.kappa()?;
    Ok(if kappa >= mader_watkins_bound(d) {
        Outcome::Checked
    } else {
        item.counterexample(None, format!("kappa {kappa} below bound {} for degree {d}", mader_watkins_bound(d)))
    })
}

fn check_star_lemma(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_et(facts, false)? {
        return Ok(out);
    }
    if facts.g.min_degree() > 1 {
        return Ok(Outcome::Excluded("min degree at least 2"));
    }
    Ok(if facts.g.is_star() {
        Outcome::Checked
    } else {
        item.counterexample(None, "edge-transitive with min degree <= 1 but not a star")
    })
}

fn check_et_vt_or_bipartite(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    if let Some(out) = require_et(facts, false)? {
        return Ok(out);
    }
    if facts.g.min_degree() < 2 {
        return Ok(Outcome::Excluded("min degree below 2"));
    }
    Ok(if facts.vertex_transitive()? || facts.g.is_bipartite().is_some() {
        Outcome::Checked
    } else {
        item.counterexample(None, "neither vertex-transitive nor bipartite")
    })
}

/// Part (a) on every path, part (b) on every induced cycle of length at
/// least 4 in small line graphs, and the corollary on the witness paths of
/// diamond and hypercube instances.
fn check_line_graph_lemma(item: &Item, facts: &Facts<'_>, params: &ClaimParams) -> Result<Outcome> {
    let g = facts.g;
    let (lg, edge_of) = line_graph(g);
    let (a, b) = params.lens((1, 6));
    for len in a.max(1)..=b {
        for p in enumerate_paths(g, len, PathMode::All) {
            let image = edge_sequence(&edge_of, p.verts())?;
            if image.len() != len || !is_induced_path(&lg, &image) {
                return Ok(item.counterexample(
                    Some(p.verts().to_vec()),
                    format!("edge sequence {image:?} is not an induced path of length {}", len - 1),
                ));
            }
        }
    }
    if lg.n() <= LINE_CYCLE_CAP {
        for c in induced_cycles(&lg, 4) {
            if let Err(detail) = lift_cycle(g, &edge_of, c.verts()) {
                return Ok(item.counterexample(None, format!("line-graph cycle {:?}: {detail}", c.verts())));
            }
        }
    }
    let Some(spec) = &item.spec else {
        return Ok(Outcome::Checked);
    };
    if lg.n() > params.family_max_vertices {
        return Ok(Outcome::Checked);
    }
    let lens: Vec<usize> = match spec {
        FamilySpec::DiamondComplete(n) => (4..=2 * n).collect(),
        FamilySpec::Hypercube(d) if *d >= 3 => vec![2 * d, 2 * d + 1],
        _ => Vec::new(),
    };
    if lens.is_empty() {
        return Ok(Outcome::Checked);
    }
    let sym = analyze_with(&lg, SymmetryConfig { max_vertices: params.symmetry_cap })?;
    if !sym.is_vertex_transitive() {
        return Ok(item.counterexample(None, "line graph of an edge-transitive graph is not vertex-transitive"));
    }
    for len in lens {
        let p = witness(spec, len)?;
        if closes_to_cycle(g, &p)?.closes {
            return Ok(item.counterexample(Some(p.verts().to_vec()), "witness closes to a cycle"));
        }
        let image = Path::new(&lg, edge_sequence(&edge_of, p.verts())?)?;
        if image.len() + 1 != len || !is_induced_path(&lg, image.verts()) {
            return Ok(item.counterexample(Some(p.verts().to_vec()), "image is not an induced path"));
        }
        if closes_to_induced_cycle(&lg, &image)?.closes {
            return Ok(item.counterexample(Some(p.verts().to_vec()), "image closes to an induced cycle"));
        }
    }
    Ok(Outcome::Checked)
}

/// Maps a cycle of line-graph vertices back to the cycle of `g` they trace.
fn lift_cycle(g: &Graph, edge_of: &[(usize, usize)], cyc: &[usize]) -> std::result::Result<Cycle, String> {
    let k = cyc.len();
    let mut verts = Vec::with_capacity(k);
    for i in 0..k {
        let (e, f) = (edge_of[cyc[i]], edge_of[cyc[(i + 1) % k]]);
        let shared = [e.0, e.1].into_iter().find(|&x| x == f.0 || x == f.1);
        verts.push(shared.ok_or_else(|| format!("edges {e:?} and {f:?} share no vertex"))?);
    }
    let c = Cycle::new(g, verts.clone()).map_err(|e| format!("shared vertices {verts:?}: {e}"))?;
    for i in 0..k {
        let (x, y) = (verts[i], verts[(i + 1) % k]);
        if edge_of[cyc[(i + 1) % k]] != (x.min(y), x.max(y)) {
            return Err(format!("edge {:?} is not traversed", edge_of[cyc[(i + 1) % k]]));
        }
    }
    Ok(c)
}

fn check_dirac_thomassen(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    let g = facts.g;
    let n = g.n();
    if n < 3 {
        return Ok(Outcome::Excluded("fewer than 3 vertices"));
    }
    let open = first_open(g, (0, n - 1), PathMode::All)?;
    let cycle_graph = g.regularity().regular_degree == Some(2) && g.is_connected();
    let balanced_bipartite = g.is_bipartite().is_some_and(|bp| {
        let (a, b) = (bp.side_a().len(), bp.side_b().len());
        a == b && g.m() == a * b
    });
    let structural = g.is_complete() || cycle_graph || balanced_bipartite;
    Ok(match (open, structural) {
        (None, true) | (Some(_), false) => Outcome::Checked,
        (Some(p), true) => item.counterexample(Some(p.verts().to_vec()), "listed graph has a path that does not close"),
        (None, false) => item.counterexample(None, "every path closes but the graph is not listed"),
    })
}

// ---- witness claims ----

fn spec_of(item: &Item) -> Result<&FamilySpec> {
    item.spec.as_ref().ok_or_else(|| Error::BadParams(format!("{} needs a family spec", item.label)))
}

fn len_of(item: &Item) -> Result<usize> {
    item.len.ok_or_else(|| Error::BadParams(format!("{} needs a path length", item.label)))
}

/// Witness paths must carry a blocking certificate and be reported
/// non-closing by the search.
fn blocked_witness(item: &Item, g: &Graph, p: &Path) -> Result<Option<Outcome>> {
    if !blocking_certificate(g, p)? {
        return Ok(Some(item.counterexample(Some(p.verts().to_vec()), "witness lacks a blocking certificate")));
    }
    if closes_to_cycle(g, p)?.closes {
        return Ok(Some(item.counterexample(Some(p.verts().to_vec()), "witness closes to a cycle")));
    }
    Ok(None)
}

fn check_cw_circulant(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    let p = witness(spec_of(item)?, len_of(item)?)?;
    if !facts.vertex_transitive()? {
        return Ok(item.counterexample(None, "circulant is not vertex-transitive"));
    }
    Ok(blocked_witness(item, facts.g, &p)?.unwrap_or(Outcome::Checked))
}

fn check_cw_stars(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    if !facts.edge_transitive()? {
        return Ok(item.counterexample(None, "star is not edge-transitive"));
    }
    for len in 0..=2 {
        for p in enumerate_paths(facts.g, len, PathMode::All) {
            if closes_to_cycle(facts.g, &p)?.closes || closes_to_induced_cycle(facts.g, &p)?.closes {
                return Ok(item.counterexample(Some(p.verts().to_vec()), "path in a star closes"));
            }
        }
    }
    Ok(Outcome::Checked)
}

fn check_cw_diamond(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    let p = match witness(spec_of(item)?, len_of(item)?) {
        Ok(p) => p,
        Err(Error::UnsupportedWitness(_)) => return Ok(Outcome::Excluded("no witness at this length")),
        Err(e) => return Err(e),
    };
    if !facts.edge_transitive()? || facts.vertex_transitive()? {
        return Ok(item.counterexample(None, "diamond graph should be edge- but not vertex-transitive"));
    }
    Ok(blocked_witness(item, facts.g, &p)?.unwrap_or(Outcome::Checked))
}

/// Line-graph witnesses: the base path in `G` is blocked, its image in
/// `L(G)` is induced and does not close to an induced cycle, and `L(G)` is
/// vertex-transitive (and edge-transitive for hypercubes).
fn check_cw_line(item: &Item, facts: &Facts<'_>, _: &ClaimParams) -> Result<Outcome> {
    let spec = spec_of(item)?;
    let len = len_of(item)?;
    let FamilySpec::LineGraphOf(inner) = spec else {
        return Err(Error::BadParams(format!("{spec} is not a line graph")));
    };
    let image = match witness(spec, len) {
        Ok(p) => p,
        Err(Error::UnsupportedWitness(_)) => return Ok(Outcome::Excluded("no witness at this length")),
        Err(e) => return Err(e),
    };
    let base_graph = make_family(inner)?.graph;
    let base = witness(inner, len + 1)?;
    if let Some(out) = blocked_witness(item, &base_graph, &base)? {
        return Ok(match out {
            Outcome::Violation(cx) => Outcome::Violation(Counterexample {
                detail: format!("preimage in {inner}: {}", cx.detail),
                ..cx
            }),
            other => other,
        });
    }
    let lg = facts.g;
    if image.len() != len || !is_induced_path(lg, image.verts()) {
        return Ok(item.counterexample(Some(image.verts().to_vec()), "image is not an induced path"));
    }
    if closes_to_induced_cycle(lg, &image)?.closes {
        return Ok(item.counterexample(Some(image.verts().to_vec()), "image closes to an induced cycle"));
    }
    if !facts.vertex_transitive()? {
        return Ok(item.counterexample(None, "line graph is not vertex-transitive"));
    }
    if matches!(**inner, FamilySpec::Hypercube(_)) && !facts.edge_transitive()? {
        return Ok(item.counterexample(None, "line graph of a hypercube is not edge-transitive"));
    }
    Ok(Outcome::Checked)
}
