//! `tstrd`: compute, validate and sweep total strong Roman domination.
//!
//! Exit codes: 0 on success, 1 when a labeling is invalid or a sweep finds
//! violations, 2 on usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use tstrd_core::constructions::{construct_by_name, CONSTRUCTION_NAMES};
use tstrd_core::families::FamilySpec;
use tstrd_core::io::{emit_graph6, parse_edge_list, parse_graph6, LabelingDocument};
use tstrd_core::solvers::{compute_bundle_with, param};
use tstrd_core::verify::{sweep, Corpus, CorpusKind, Report};
use tstrd_core::{Engine, Error, FunctionClass, Graph, Param, TheoremId};

const WORKERS_VAR: &str = "TSTRD_WORKERS";

#[derive(Parser)]
#[command(name = "tstrd", version, about = "Total strong Roman domination workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the parameter bundle of a graph.
    Solve {
        #[command(flatten)]
        graph: GraphSource,
        /// Print a single parameter (gamma, gamma_t, gamma_r, gamma_tr, gamma_str, gamma_tstr).
        #[arg(long)]
        param: Option<Param>,
        #[arg(long, default_value = "bb")]
        engine: Engine,
    },
    /// Check a labeling document against a graph.
    Validate {
        #[command(flatten)]
        graph: OptionalGraphSource,
        /// JSON file with `order`, `labels` and optionally `graph`.
        #[arg(long)]
        labeling: PathBuf,
        /// rd, trd, strd or tstrd.
        #[arg(long, default_value = "tstrd", value_parser = parse_class)]
        class: FunctionClass,
    },
    /// Realize a family member and print its closed forms.
    Family { spec: FamilySpec },
    /// Run a named upper-bound construction and print the certificate.
    Construct {
        /// One of: matching, mindeg, diam2, diametral-path, girth-cycle, domset, total-domset.
        name: String,
        #[command(flatten)]
        graph: GraphSource,
    },
    /// Check theorems over a corpus and write CSV and JSON reports.
    Sweep {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Output directory for report.csv and report.json.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the Nordhaus-Gaddum bounds over a corpus.
    Nordhaus {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file: `n m` then one `u v` per line.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Family spec such as `path:6`, `dstar:2,2` or `fixed:F3`.
    #[arg(long)]
    family: Option<FamilySpec>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalGraphSource {
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    edges: Option<PathBuf>,
    #[arg(long)]
    family: Option<FamilySpec>,
}

#[derive(Args)]
struct CorpusArgs {
    /// Every connected graph of order 1..=N.
    #[arg(long, value_name = "N")]
    all_connected: Option<usize>,
    /// Every tree of order 1..=N.
    #[arg(long, value_name = "N")]
    all_trees: Option<usize>,
    /// COUNT,N,P[,SEED] random G(n,p) graphs.
    #[arg(long, value_name = "COUNT,N,P,SEED")]
    random: Option<String>,
    /// Seed for --random when the tuple omits one.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_class(s: &str) -> Result<FunctionClass, String> {
    match s {
        "rd" => Ok(FunctionClass::Roman),
        "trd" => Ok(FunctionClass::TotalRoman),
        "strd" => Ok(FunctionClass::StrongRoman),
        "tstrd" => Ok(FunctionClass::TotalStrongRoman),
        other => Err(format!("unknown class `{other}`; expected rd, trd, strd or tstrd")),
    }
}

fn load_graph(graph6: Option<&str>, edges: Option<&Path>, family: Option<&FamilySpec>) -> anyhow::Result<Option<Graph>> {
    Ok(match (graph6, edges, family) {
        (Some(s), _, _) => Some(parse_graph6(s)?),
        (_, Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Some(parse_edge_list(&text)?)
        }
        (_, _, Some(spec)) => Some(spec.realize()?),
        _ => None,
    })
}

impl GraphSource {
    fn load(&self) -> anyhow::Result<Graph> {
        load_graph(self.graph6.as_deref(), self.edges.as_deref(), self.family.as_ref())?
            .ok_or_else(|| anyhow!("one of --graph6, --edges, --family is required"))
    }
}

impl CorpusArgs {
    fn corpus(&self) -> anyhow::Result<Corpus> {
        let chosen = [self.all_connected.is_some(), self.all_trees.is_some(), self.random.is_some()];
        if chosen.iter().filter(|&&c| c).count() > 1 {
            bail!("--all-connected, --all-trees and --random are mutually exclusive");
        }
        let kind = if let Some(n) = self.all_connected {
            CorpusKind::AllConnected(n)
        } else if let Some(n) = self.all_trees {
            CorpusKind::AllTrees(n)
        } else if let Some(spec) = &self.random {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            if !(3..=4).contains(&parts.len()) {
                bail!("--random expects COUNT,N,P[,SEED], got `{spec}`");
            }
            let count = parts[0].parse().with_context(|| format!("bad COUNT `{}`", parts[0]))?;
            let n = parts[1].parse().with_context(|| format!("bad N `{}`", parts[1]))?;
            let p: f64 = parts[2].parse().with_context(|| format!("bad P `{}`", parts[2]))?;
            if !(0.0..=1.0).contains(&p) {
                bail!("P must lie in [0, 1], got {p}");
            }
            let seed = match parts.get(3) {
                Some(s) => s.parse().with_context(|| format!("bad SEED `{s}`"))?,
                None => self.seed,
            };
            CorpusKind::Random { count, n, p, seed }
        } else {
            bail!("one of --all-connected, --all-trees, --random is required");
        };
        Ok(Corpus::new(kind))
    }
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

fn print_summary(report: &Report) {
    println!("{} graphs", report.graphs);
    for s in &report.summary {
        let name = s.theorem.map(|t| t.name()).unwrap_or("?");
        println!(
            "{name:<16} applicable {:>5}  holds {:>5}  equality {:>5}  violations {:>3}",
            s.applicable, s.holds, s.equality, s.violations
        );
    }
}

fn write_reports(report: &Report, out: &Path) -> anyhow::Result<()> {
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    fs::write(out.join("report.csv"), report.to_csv()?)?;
    fs::write(out.join("report.json"), report.to_json())?;
    Ok(())
}

/// Runs a subcommand and returns whether it found a problem worth exit 1.
fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Solve { graph, param: which, engine } => {
            let g = graph.load()?;
            match which {
                Some(p) => print_json(&json!({ "param": p.name(), "value": param(&g, p, engine)? })),
                None => print_json(&compute_bundle_with(&g, engine)),
            }
            Ok(false)
        }
        Command::Validate { graph, labeling, class } => {
            let text = fs::read_to_string(&labeling).with_context(|| format!("reading {}", labeling.display()))?;
            let doc: LabelingDocument = serde_json::from_str(&text).context("parsing labeling document")?;
            let g = match load_graph(graph.graph6.as_deref(), graph.edges.as_deref(), graph.family.as_ref())? {
                Some(g) => g,
                None => {
                    let reference = doc
                        .graph
                        .as_deref()
                        .ok_or_else(|| anyhow!("no graph given and the labeling document names none"))?;
                    match parse_graph6(reference) {
                        Ok(g) => g,
                        Err(_) => {
                            let base = labeling.parent().unwrap_or(Path::new("."));
                            let text = fs::read_to_string(base.join(reference))
                                .with_context(|| format!("`{reference}` is neither graph6 nor a readable file"))?;
                            parse_edge_list(&text)?
                        }
                    }
                }
            };
            let f = doc.to_labeling()?;
            let verdict = class.validate(&g, &f)?;
            print_json(&verdict);
            Ok(!verdict.valid)
        }
        Command::Family { spec } => {
            let g = spec.realize()?;
            let mut forms = serde_json::Map::new();
            for p in Param::ALL {
                let value = match spec.closed_form(p) {
                    Ok(v) => json!(v),
                    Err(Error::NoClosedForm(_)) => serde_json::Value::Null,
                    Err(e) => return Err(e.into()),
                };
                forms.insert(p.name().to_string(), value);
            }
            print_json(&json!({
                "spec": spec.to_string(),
                "graph6": emit_graph6(&g)?,
                "order": g.order(),
                "size": g.size(),
                "closed_forms": forms,
            }));
            Ok(false)
        }
        Command::Construct { name, graph } => {
            if !CONSTRUCTION_NAMES.contains(&name.as_str()) {
                bail!("unknown construction `{name}`; expected one of {}", CONSTRUCTION_NAMES.join(", "));
            }
            let g = graph.load()?;
            match construct_by_name(&name, &g) {
                Ok(cert) => {
                    print_json(&cert);
                    Ok(false)
                }
                Err(e @ Error::CertificateFailed { .. }) => {
                    eprintln!("error: {e}");
                    Ok(true)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Sweep { corpus, theorems, out } => {
            let theorems = TheoremId::parse_list(&theorems)?;
            let report = sweep(&corpus.corpus()?, &theorems)?;
            write_reports(&report, &out)?;
            print_summary(&report);
            Ok(report.violation_count() > 0)
        }
        Command::Nordhaus { corpus, out } => {
            let report = sweep(&corpus.corpus()?, &[TheoremId::PropNg])?;
            if let Some(out) = out {
                write_reports(&report, &out)?;
            }
            let equality: Vec<&str> = report
                .records
                .iter()
                .filter(|r| r.outcomes[0].equality == Some(true))
                .map(|r| r.graph6.as_str())
                .collect();
            print_json(&json!({
                "graphs": report.graphs,
                "summary": report.summary,
                "equality_graphs": equality,
                "violations": report.violations,
            }));
            Ok(report.violation_count() > 0)
        }
    }
}

fn worker_count() -> anyhow::Result<usize> {
    match std::env::var(WORKERS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => bail!("{WORKERS_VAR} must be a positive integer, got `{v}`"),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = worker_count().and_then(|workers| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build()?;
        pool.install(|| run(cli.command))
    });
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
