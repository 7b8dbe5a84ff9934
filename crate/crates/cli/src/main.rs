use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use cyclosure::connectivity::vertex_connectivity;
use cyclosure::cycles::{blocking_certificate, closes_to_cycle, closes_to_induced_cycle};
use cyclosure::families::{make_family, witness, FamilySpec};
use cyclosure::graph::{parse_graph6, to_dot, to_graph6};
use cyclosure::symmetry::{analyze_with, SymmetryConfig, DEFAULT_VERTEX_CAP};
use cyclosure::verify::{
    parse_len_range, read_graph6_file, search_counterexample, verify_claim, CensusFile, ClaimId, ClaimParams,
    Template, Verdict,
};
use cyclosure::{Graph, Path};

const EXIT_UNEXPECTED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "cyclosure", version, about = "Path-to-cycle closure in symmetric graphs")]
struct Cli {
    /// JSON config file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family graph.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        g6: bool,
    },
    /// Decide whether a path closes to a cycle.
    Check {
        /// graph6 string, or a file whose first line is one
        #[arg(long)]
        g6: String,
        /// comma-separated vertex ids
        #[arg(long)]
        path: String,
        #[arg(long)]
        induced: bool,
    },
    /// Emit the non-closing witness path of a family.
    Witness {
        #[arg(long)]
        family: String,
        #[arg(long)]
        len: usize,
        /// Re-check the witness with the blocking certificate and the search.
        #[arg(long)]
        certify: bool,
    },
    /// Degrees, bipartiteness, connectivity and symmetry of a graph.
    Classify {
        #[arg(long)]
        g6: String,
    },
    /// Run a claim (or `all`) and print one JSON report per line.
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// inclusive path-length range, e.g. `0..4`
        #[arg(long)]
        len_range: Option<String>,
        /// graph6 census file replacing the built-in census
        #[arg(long)]
        census: Option<PathBuf>,
        #[arg(long)]
        family_max_vertices: Option<usize>,
    },
    /// Search for edge-transitive graphs with a non-closing path.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        template: TemplateArg,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        induced: bool,
        /// graph6 list for `--template ingest`
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TemplateArg {
    Circulant,
    Ingest,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    threads: Option<usize>,
    max_n: Option<usize>,
    family_max_vertices: Option<usize>,
    symmetry_cap: Option<usize>,
}

fn load_config(path: Option<&FsPath>) -> Result<Config> {
    let Some(path) = path else {
        return Ok(Config::default());
    };
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn thread_count(config: &Config) -> Result<Option<usize>> {
    match std::env::var("CYCLOSURE_THREADS") {
        Ok(v) => {
            let n: usize = v.trim().parse().with_context(|| format!("CYCLOSURE_THREADS={v:?}"))?;
            Ok(Some(n))
        }
        Err(_) => Ok(config.threads),
    }
}

fn read_g6_arg(arg: &str) -> Result<Graph> {
    let p = FsPath::new(arg);
    let text = if p.is_file() {
        let body = std::fs::read_to_string(p).with_context(|| format!("reading {arg}"))?;
        body.lines().map(str::trim).find(|l| !l.is_empty()).map(str::to_string).unwrap_or_default()
    } else {
        arg.to_string()
    };
    Ok(parse_graph6(&text)?)
}

fn parse_vertices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad vertex {t:?} in --path")))
        .collect()
}

fn print_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = load_config(cli.config.as_deref())?;
    if let Some(n) = thread_count(&config)? {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen { family, dot, g6 } => {
            let spec: FamilySpec = family.parse()?;
            let lg = make_family(&spec)?;
            if g6 || !dot {
                writeln!(out, "{}", to_graph6(&lg.graph))?;
            }
            if dot {
                write!(out, "{}", to_dot(&lg.graph, None, Some(&lg.labels))?)?;
            }
        }
        Command::Check { g6, path, induced } => {
            let g = read_g6_arg(&g6)?;
            let p = Path::new(&g, parse_vertices(&path)?)?;
            let answer = if induced { closes_to_induced_cycle(&g, &p)? } else { closes_to_cycle(&g, &p)? };
            print_json(&mut out, &answer)?;
        }
        Command::Witness { family, len, certify } => {
            let spec: FamilySpec = family.parse()?;
            let lg = make_family(&spec)?;
            let p = witness(&spec, len)?;
            let mut report = serde_json::json!({
                "family": spec.to_string(),
                "len": p.len(),
                "path": p.verts(),
                "labels": lg.labels_of(p.verts()),
            });
            if certify {
                let certified = if let FamilySpec::LineGraphOf(_) = spec {
                    serde_json::json!({ "closes_to_induced_cycle": closes_to_induced_cycle(&lg.graph, &p)?.closes })
                } else {
                    serde_json::json!({
                        "blocking_certificate": blocking_certificate(&lg.graph, &p)?,
                        "closes_to_cycle": closes_to_cycle(&lg.graph, &p)?.closes,
                    })
                };
                report["certified"] = certified;
            }
            print_json(&mut out, &report)?;
        }
        Command::Classify { g6 } => {
            let g = read_g6_arg(&g6)?;
            let cap = config.symmetry_cap.unwrap_or(DEFAULT_VERTEX_CAP);
            print_json(&mut out, &classify(&g, cap)?)?;
        }
        Command::Verify { claim, max_n, len_range, census, family_max_vertices } => {
            let defaults = ClaimParams::default();
            let census = match census {
                Some(path) => Some(CensusFile { source: path.display().to_string(), graphs: read_graph6_file(&path)? }),
                None => None,
            };
            let params = ClaimParams {
                max_n: max_n.or(config.max_n).unwrap_or(defaults.max_n),
                len_range: len_range.as_deref().map(parse_len_range).transpose()?,
                census,
                family_max_vertices: family_max_vertices
                    .or(config.family_max_vertices)
                    .unwrap_or(defaults.family_max_vertices),
                symmetry_cap: config.symmetry_cap.unwrap_or(defaults.symmetry_cap),
            };
            let claims: Vec<ClaimId> =
                if claim == "all" { ClaimId::ALL.to_vec() } else { vec![claim.parse()?] };
            let mut worst = 0u8;
            for id in claims {
                let report = verify_claim(id, &params)?;
                writeln!(out, "{}", report.to_json_line())?;
                out.flush()?;
                let code = match report.verdict {
                    Verdict::Pass => 0,
                    Verdict::Fail => EXIT_UNEXPECTED,
                    Verdict::Indeterminate => EXIT_USAGE,
                };
                worst = worst.max(code);
            }
            return Ok(ExitCode::from(worst));
        }
        Command::Search { n, template, len, induced, input } => {
            let template = match (template, input) {
                (TemplateArg::Circulant, _) => Template::Circulant,
                (TemplateArg::Ingest, Some(path)) => Template::Ingest(read_graph6_file(&path)?),
                (TemplateArg::Ingest, None) => bail!("--template ingest needs --input FILE"),
            };
            for hit in search_counterexample(n, &template, len, induced)? {
                print_json(&mut out, &hit)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct Classification {
    graph6: String,
    n: usize,
    m: usize,
    min_degree: usize,
    max_degree: usize,
    regular_degree: Option<usize>,
    connected: bool,
    bipartite: bool,
    star: bool,
    kappa: Option<usize>,
    vertex_transitive: bool,
    edge_transitive: bool,
    vertex_orbits: usize,
    edge_orbits: usize,
    group_order: Option<String>,
    degree_counts: BTreeMap<usize, usize>,
}

fn classify(g: &Graph, cap: usize) -> Result<Classification> {
    let reg = g.regularity();
    let sym = analyze_with(g, SymmetryConfig { max_vertices: cap })?;
    let mut degree_counts = BTreeMap::new();
    for v in 0..g.n() {
        *degree_counts.entry(g.degree(v)).or_insert(0) += 1;
    }
    Ok(Classification {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        min_degree: reg.min_degree,
        max_degree: reg.max_degree,
        regular_degree: reg.regular_degree,
        connected: g.is_connected(),
        bipartite: g.is_bipartite().is_some(),
        star: g.is_star(),
        kappa: if g.n() == 0 { None } else { Some(vertex_connectivity(g)?.kappa) },
        vertex_transitive: sym.is_vertex_transitive(),
        edge_transitive: sym.is_edge_transitive(),
        vertex_orbits: sym.vertex_orbits.orbit_count(),
        edge_orbits: sym.edge_orbits.orbit_count(),
        // u128 does not fit a JSON number portably
        group_order: sym.group_order.map(|o| o.to_string()),
        degree_counts,
    })
}
