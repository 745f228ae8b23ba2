//! `singvol` command-line tool. Every invocation emits one JSON report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use singvol::catalog;
use singvol::cone::{dcc_scan, dyadic_slopes, PolarizedCone};
use singvol::envelope::volume;
use singvol::graph::ResolutionGraph;
use singvol::lattice::{format_rational, format_vector, parse_rational, Rational};
use singvol::random::run_suite;
use singvol::tower::{invariance_report, ModelTower};
use singvol::{Error, ErrorKind};

#[derive(Parser)]
#[command(name = "singvol", version, about = "Exact local volumes of normal singularities")]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolution graph computations.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Cone singularity computations.
    #[command(subcommand)]
    Cone(ConeCmd),
    /// Built-in graphs and cones.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Local volume via the nef envelope of the log discrepancy divisor.
    Vol { source: String },
    /// Discrepancies b and log discrepancies 1 - b.
    Discrepancies { source: String },
    /// Log canonicity.
    Lc { source: String },
    /// Curves surviving on the log canonical modification.
    Lcmod { source: String },
    /// Invariance report along a blowup tower file.
    Blowup { tower: PathBuf },
    /// Seeded random consistency suite.
    RandomSuite {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ConeCmd {
    /// Upper bound a^n·H^(n-1) on Vol_m from the boundary of slope a.
    Bound {
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Natural valuation of k·D and its limit.
    Valuation {
        source: String,
        /// Comma-separated class coefficients, e.g. "1,0" or "1/2,-3".
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long)]
        k: u64,
    },
    /// E-coefficient of the m-th limiting log discrepancy.
    Limiting {
        #[arg(long, default_value = "catalog:paper-ruled-surface")]
        cone: String,
        #[arg(long)]
        m: u64,
    },
    /// Bounds table, Vol+ verdicts and the lc boundary certificate.
    Counterexample {
        #[arg(long, default_value = "catalog:paper-ruled-surface")]
        cone: String,
        /// Comma-separated strictly decreasing slopes; default 2^-k, k = 0..10.
        #[arg(long)]
        a_seq: Option<String>,
    },
    /// Gorenstein cone volumes over curves.
    DccScan {
        #[arg(long, default_value_t = 20)]
        g_max: u32,
        #[arg(long, default_value_t = 10)]
        a_max: u32,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
}

/// Raw input text (or catalog name) for the digest, and whether it is a catalog entry.
fn read_source(source: &str) -> Result<(String, Option<&str>), Error> {
    match source.strip_prefix("catalog:") {
        Some(name) => Ok((source.to_string(), Some(name))),
        None => std::fs::read_to_string(source)
            .map(|t| (t, None))
            .map_err(|e| Error::MalformedInput(format!("cannot read {source:?}: {e}"))),
    }
}

struct Inputs {
    texts: Vec<String>,
}

impl Inputs {
    fn graph(&mut self, source: &str) -> Result<ResolutionGraph, Error> {
        let (text, name) = read_source(source)?;
        self.texts.push(text.clone());
        match name {
            Some(n) => catalog::graph(n),
            None => ResolutionGraph::from_json(&text),
        }
    }

    fn cone(&mut self, source: &str) -> Result<PolarizedCone, Error> {
        let (text, name) = read_source(source)?;
        self.texts.push(text.clone());
        match name {
            Some(n) => catalog::cone(n),
            None => PolarizedCone::from_json(&text),
        }
    }

    fn digest(&self) -> String {
        let mut h = Sha256::new();
        for t in &self.texts {
            h.update((t.len() as u64).to_le_bytes());
            h.update(t.as_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn labelled(g: &ResolutionGraph, d: &[Rational]) -> Value {
    Value::Object(g.labelled(d).into_iter().map(|(k, v)| (k, Value::String(v))).collect::<Map<_, _>>())
}

fn parse_list(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',').map(parse_rational).collect()
}

fn to_value<T: serde::Serialize>(t: &T) -> Result<Value, Error> {
    serde_json::to_value(t).map_err(|e| Error::Internal(e.to_string()))
}

/// Results, plus whether every embedded check passed.
fn run(cmd: &Command, inputs: &mut Inputs) -> Result<(Value, bool), Error> {
    Ok(match cmd {
        Command::Graph(GraphCmd::Vol { source }) => {
            let g = inputs.graph(source)?;
            let v = volume(&g)?;
            let z = &v.decomposition;
            let value = json!({
                "volume": format_rational(&v.volume),
                "is_lc": v.is_lc,
                "log_discrepancy": labelled(&g, &v.log_discrepancy),
                "P": labelled(&g, &z.p),
                "N": labelled(&g, &z.n),
                "active": g.ids(&z.active),
            });
            (value, true)
        }
        Command::Graph(GraphCmd::Discrepancies { source }) => {
            let g = inputs.graph(source)?;
            let r = g.discrepancy_report()?;
            let value = json!({
                "canonical_intersections": labelled(&g, &g.canonical_intersections()),
                "b": labelled(&g, &r.b),
                "ell": labelled(&g, &r.ell),
                "is_lc": r.is_lc,
                "lc_mod_support": g.ids(&r.lc_mod_support),
            });
            (value, true)
        }
        Command::Graph(GraphCmd::Lc { source }) => {
            let g = inputs.graph(source)?;
            let v = volume(&g)?;
            (json!({ "is_lc": v.is_lc, "volume": format_rational(&v.volume) }), true)
        }
        Command::Graph(GraphCmd::Lcmod { source }) => {
            let g = inputs.graph(source)?;
            let r = g.discrepancy_report()?;
            let value = json!({
                "lc_mod_support": g.ids(&r.lc_mod_support),
                "is_lc": r.is_lc,
                "b": labelled(&g, &r.b),
            });
            (value, true)
        }
        Command::Graph(GraphCmd::Blowup { tower }) => {
            let path = tower.to_string_lossy().into_owned();
            let (text, _) = read_source(&path)?;
            inputs.texts.push(text.clone());
            let tower = ModelTower::from_json(&text)?;
            let report = invariance_report(&tower)?;
            let models: Vec<Value> =
                tower.models().iter().map(|g| to_value(&g.to_doc())).collect::<Result<_, _>>()?;
            let passed = report.passed;
            (json!({ "models": models, "report": to_value(&report)? }), passed)
        }
        Command::Graph(GraphCmd::RandomSuite { count, max_vertices, seed }) => {
            let r = run_suite(*count, *max_vertices, *seed)?;
            let passed = r.passed();
            (to_value(&r)?, passed)
        }
        Command::Cone(ConeCmd::Bound { source, a }) => {
            let c = inputs.cone(source)?;
            let a = parse_rational(a)?;
            let bound = c.vol_upper_bound(&a)?;
            let value = json!({
                "a": format_rational(&a),
                "boundary": to_value(&c.boundary_class(&a))?,
                "log_discrepancy": format_rational(&c.cone_log_discrepancy(&a)?),
                "bound": format_rational(&bound),
                "label": "bound",
            });
            (value, true)
        }
        Command::Cone(ConeCmd::Valuation { source, class, k }) => {
            let c = inputs.cone(source)?;
            let d = parse_list(class)?;
            let v = c.natural_valuation(&d, *k)?;
            let limit = c.valuation_limit(&d)?;
            let value = json!({
                "class": format_vector(&d),
                "k": k,
                "natural_valuation": v,
                "valuation_limit": format_rational(&limit),
            });
            (value, true)
        }
        Command::Cone(ConeCmd::Limiting { cone, m }) => {
            let c = inputs.cone(cone)?;
            let value = json!({
                "m": m,
                "limiting_discrepancy": format_rational(&c.limiting_discrepancy(*m)?),
                "label": "computed",
                "note": "E-coefficient only; positivity of Vol_m is not decided by this trace",
            });
            (value, true)
        }
        Command::Cone(ConeCmd::Counterexample { cone, a_seq }) => {
            let c = inputs.cone(cone)?;
            let seq = match a_seq {
                Some(s) => parse_list(s)?,
                None => dyadic_slopes(10),
            };
            let r = c.vol_plus_table(&seq)?;
            let passed = r.bounds_non_increasing;
            (to_value(&r)?, passed)
        }
        Command::Cone(ConeCmd::DccScan { g_max, a_max }) => {
            let r = dcc_scan(*g_max, *a_max)?;
            let passed = r.all_agree && r.well_ordered;
            (to_value(&r)?, passed)
        }
        Command::Catalog(CatalogCmd::List) => {
            let graphs: Vec<Value> = catalog::graph_entries()
                .into_iter()
                .map(|e| json!({ "name": e.name, "description": e.description, "class": e.class.as_str() }))
                .collect();
            let cones: Vec<Value> = catalog::cone_entries()
                .into_iter()
                .map(|(name, description)| json!({ "name": name, "description": description }))
                .collect();
            let patterns = ["A<n>", "D<n>", "E6", "E7", "E8", "simple-elliptic-<d>", "cusp-<n>", "cone-g<g>-d<d>"];
            (json!({ "graphs": graphs, "graph_patterns": patterns, "cones": cones }), true)
        }
    })
}

fn seed_of(cmd: &Command) -> Option<u64> {
    match cmd {
        Command::Graph(GraphCmd::RandomSuite { seed, .. }) => Some(*seed),
        _ => None,
    }
}

fn emit(report: &Value, out: Option<&PathBuf>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {path:?}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let mut inputs = Inputs { texts: Vec::new() };
    let outcome = run(&cli.command, &mut inputs);
    let mut report = Map::new();
    report.insert("command".into(), json!(echo));
    report.insert("inputs_digest".into(), json!(inputs.digest()));
    if let Some(seed) = seed_of(&cli.command) {
        report.insert("seed".into(), json!(seed));
    }
    let code = match outcome {
        Ok((results, passed)) => {
            report.insert("status".into(), json!(if passed { "ok" } else { "check_failed" }));
            report.insert("results".into(), results);
            if passed {
                0
            } else {
                3
            }
        }
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::Domain => 1,
                ErrorKind::Malformed => 2,
                ErrorKind::Internal => 3,
            };
            report.insert("status".into(), json!("error"));
            report.insert(
                "error".into(),
                json!({ "reason": e.reason(), "message": e.to_string(), "exit_code": code }),
            );
            code
        }
    };
    if let Err(msg) = emit(&Value::Object(report), cli.out.as_ref()) {
        eprintln!("{msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
