//! Claim registry, instance sweeps and reports.
//!
//! A claim runs over a deterministic list of instances (census graphs,
//! generated family members, or witness paths). Instances are checked in
//! parallel on the current rayon pool and merged in graph6 order, so the
//! report does not depend on the schedule.

pub mod census;
mod claims;
pub mod search;

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use census::{canonical_form, enumerate_connected_graphs, enumerate_graphs, read_graph6_file, CENSUS_MAX_N};
pub use claims::{family_sweep, replay};
pub use search::{search_counterexample, search_graphs, SearchHit, Template};

use crate::connectivity::{vertex_connectivity, ConnectivityResult};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{to_graph6, Graph};
use crate::symmetry::{analyze_with, Symmetry, SymmetryConfig, DEFAULT_VERTEX_CAP};

macro_rules! claim_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// One executable statement from the claim catalog.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum ClaimId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name,)*
                }
            }
        }

        impl FromStr for ClaimId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(ClaimId::$variant),)*
                    other => Err(Error::UnknownClaim(other.to_string())),
                }
            }
        }
    };
}

claim_ids! {
    VtPtoc => "VT_PTOC",
    VtIndPtoc => "VT_IND_PTOC",
    EtPtoc3 => "ET_PTOC_3",
    EtIndPtoc3 => "ET_IND_PTOC_3",
    EtNostarPtoc => "ET_NOSTAR_PTOC",
    EtNostarInd => "ET_NOSTAR_IND",
    KappaTrick => "KAPPA_TRICK",
    RegPtoc => "REG_PTOC",
    WatkinsEq => "WATKINS_EQ",
    MaderWatkins => "MADER_WATKINS",
    StarLemma => "STAR_LEMMA",
    EtVtOrBipartite => "ET_VT_OR_BIPARTITE",
    LineGraphLemma => "LINE_GRAPH_LEMMA",
    DiracThomassen => "DIRAC_THOMASSEN",
    CwCirculant => "CW_CIRCULANT",
    CwStars => "CW_STARS",
    CwDiamond => "CW_DIAMOND",
    CwLineDiamond => "CW_LINE_DIAMOND",
    CwHypercubeLine => "CW_HYPERCUBE_LINE",
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

/// A replayable violation: the graph, and the offending path when the claim
/// is about paths. Witness claims also record the family and path length
/// the instance was generated from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub path: Option<Vec<usize>>,
    pub family: Option<String>,
    pub len: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub params: BTreeMap<String, String>,
    pub instances_checked: usize,
    /// Instances skipped per hypothesis filter.
    pub exclusions: BTreeMap<String, usize>,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
}

impl ClaimReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// The JSON line with the timing field zeroed, for comparing runs.
    pub fn to_json_line_untimed(&self) -> String {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        r.to_json_line()
    }
}

/// Graphs supplied from a graph6 file instead of the built-in census.
#[derive(Debug, Clone)]
pub struct CensusFile {
    pub source: String,
    pub graphs: Vec<Graph>,
}

#[derive(Debug, Clone)]
pub struct ClaimParams {
    /// Built-in census bound (ignored when `census` is set).
    pub max_n: usize,
    /// Inclusive override of the path-length range a claim sweeps.
    pub len_range: Option<(usize, usize)>,
    pub census: Option<CensusFile>,
    pub family_max_vertices: usize,
    pub symmetry_cap: usize,
}

impl Default for ClaimParams {
    fn default() -> Self {
        ClaimParams {
            max_n: CENSUS_MAX_N,
            len_range: None,
            census: None,
            family_max_vertices: 40,
            symmetry_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl ClaimParams {
    fn validate(&self) -> Result<()> {
        if self.census.is_none() && self.max_n > CENSUS_MAX_N {
            return Err(Error::BadParams(format!(
                "built-in census stops at n = {CENSUS_MAX_N}; supply a graph6 census for n = {}",
                self.max_n
            )));
        }
        if let Some((a, b)) = self.len_range {
            if a > b {
                return Err(Error::BadParams(format!("empty length range {a}..{b}")));
            }
        }
        if self.family_max_vertices > self.symmetry_cap {
            return Err(Error::BadParams(format!(
                "family_max_vertices {} exceeds the symmetry cap {}",
                self.family_max_vertices, self.symmetry_cap
            )));
        }
        Ok(())
    }

    fn lens(&self, default: (usize, usize)) -> (usize, usize) {
        self.len_range.unwrap_or(default)
    }
}

/// Parses `a..b` (inclusive on both ends, as in `0..4`).
pub fn parse_len_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::BadParams(format!("length range must look like a..b, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn verify_claim(claim: ClaimId, params: &ClaimParams) -> Result<ClaimReport> {
    params.validate()?;
    let start = Instant::now();
    let (items, check) = claims::plan(claim, params)?;
    let mut outcomes: Vec<(&Item, Outcome)> = items
        .par_iter()
        .map(|item| {
            let facts = Facts::new(&item.graph, params.symmetry_cap);
            let outcome = check(item, &facts, params).unwrap_or_else(|e| Outcome::Unknown(e.to_string()));
            (item, outcome)
        })
        .collect();
    outcomes.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));

    let mut report = ClaimReport {
        claim,
        params: claims::describe_params(claim, params),
        instances_checked: 0,
        exclusions: BTreeMap::new(),
        verdict: Verdict::Pass,
        counterexample: None,
        elapsed_ms: 0,
    };
    let mut unknown = false;
    for (_, outcome) in outcomes {
        match outcome {
            Outcome::Checked => report.instances_checked += 1,
            Outcome::Excluded(reason) => *report.exclusions.entry(reason.to_string()).or_default() += 1,
            Outcome::Violation(cx) => {
                report.instances_checked += 1;
                if report.counterexample.is_none() {
                    report.counterexample = Some(cx);
                }
            }
            Outcome::Unknown(why) => {
                unknown = true;
                *report.exclusions.entry(format!("indeterminate: {why}")).or_default() += 1;
            }
        }
    }
    report.verdict = if report.counterexample.is_some() {
        Verdict::Fail
    } else if unknown {
        Verdict::Indeterminate
    } else {
        Verdict::Pass
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// One unit of work for a claim.
#[derive(Debug, Clone)]
pub(crate) struct Item {
    pub graph6: String,
    pub label: String,
    pub graph: Graph,
    pub spec: Option<FamilySpec>,
    pub len: Option<usize>,
}

impl Item {
    fn new(label: String, graph: Graph, spec: Option<FamilySpec>, len: Option<usize>) -> Self {
        Item { graph6: to_graph6(&graph), label, graph, spec, len }
    }

    fn sort_key(&self) -> (&str, &str, Option<usize>) {
        (&self.graph6, &self.label, self.len)
    }

    pub(crate) fn counterexample(&self, path: Option<Vec<usize>>, detail: impl Into<String>) -> Outcome {
        Outcome::Violation(Counterexample {
            graph6: self.graph6.clone(),
            path,
            family: self.spec.as_ref().map(ToString::to_string),
            len: self.len,
            detail: detail.into(),
        })
    }
}

pub(crate) enum Outcome {
    Checked,
    Excluded(&'static str),
    Violation(Counterexample),
    Unknown(String),
}

/// Lazily computed invariants of one instance graph.
pub(crate) struct Facts<'g> {
    pub g: &'g Graph,
    cap: usize,
    sym: OnceCell<Result<Symmetry>>,
    kappa: OnceCell<Result<ConnectivityResult>>,
}

impl<'g> Facts<'g> {
    fn new(g: &'g Graph, cap: usize) -> Self {
        Facts { g, cap, sym: OnceCell::new(), kappa: OnceCell::new() }
    }

    pub fn symmetry(&self) -> Result<&Symmetry> {
        self.sym
            .get_or_init(|| analyze_with(self.g, SymmetryConfig { max_vertices: self.cap }))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn vertex_transitive(&self) -> Result<bool> {
        Ok(self.symmetry()?.is_vertex_transitive())
    }

    pub fn edge_transitive(&self) -> Result<bool> {
        Ok(self.symmetry()?.is_edge_transitive())
    }

    pub fn kappa(&self) -> Result<usize> {
        self.kappa
            .get_or_init(|| vertex_connectivity(self.g))
            .as_ref()
            .map(|r| r.kappa)
            .map_err(Clone::clone)
    }
}
