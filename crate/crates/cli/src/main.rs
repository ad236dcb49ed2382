use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbowk_core::bounds::{evaluate_rc_bounds, evaluate_rvc_bounds};
use rainbowk_core::domset::{build_strong, build_two_step, check_trace, upgrade_two_way, verify_domination};
use rainbowk_core::extremal::{gen_example1, gen_example2, gen_kstar};
use rainbowk_core::rainbow_vertex::RvcRegime;
use rainbowk_core::report::to_canonical_json;
use rainbowk_core::verify::{is_rainbow_edge_path, is_rainbow_vertex_path};
use rainbowk_core::*;
use serde_json::{json, Value};

mod bench;

type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(name = "rainbowk", version, about = "Rainbow connection colorings bounded by degree sums of independent sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DomFlavor {
    TwoStep,
    TwoWay,
    Strong,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Regime {
    Half,
    NineteenTenths,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Rc,
    Rvc,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum degree sum of an independent k-set, with a witness.
    Sigma {
        #[arg(short = 'k')]
        k: usize,
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and check a connected dominating set.
    Dominate {
        #[arg(short = 'k')]
        k: usize,
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "two-way")]
        flavor: DomFlavor,
        /// Strength target for `--flavor strong`; chosen from sigma_k when omitted.
        #[arg(long, value_enum)]
        regime: Option<Regime>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rainbow edge coloring within the sigma_k budget.
    ColorRc {
        #[arg(short = 'k')]
        k: usize,
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the coloring itself.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Rainbow vertex coloring within the sigma_k bound.
    ColorRvc {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        seed: u64,
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Exact rc and rvc on small graphs.
    Exact {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        which: Which,
        #[arg(long, value_parser = parse_limits, default_value = "n=8,m=14")]
        limits: Limits,
        /// Time cap per candidate palette size.
        #[arg(long)]
        budget_ms: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an extremal family member as an edge list.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Edge-minimal spanning subgraph with the same sigma_k.
    Sparsify {
        #[arg(short = 'k')]
        k: usize,
        graph: PathBuf,
        /// Edge list of the sparsified graph.
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON report; printed to stdout when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Re-check a graph or a stored coloring.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        diam: bool,
        #[arg(long, conflicts_with = "vertex_coloring")]
        edge_coloring: Option<PathBuf>,
        #[arg(long)]
        vertex_coloring: Option<PathBuf>,
        /// Search time per source vertex.
        #[arg(long)]
        budget_ms: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a corpus and tabulate every bound against the pipelines.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
struct GenOut {
    /// Edge list path; the family spec goes next to it with a `.json` extension.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    Kstar {
        #[arg(short = 'a')]
        a: usize,
        #[arg(short = 'b')]
        b: usize,
        #[command(flatten)]
        out: GenOut,
    },
    Example1 {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
    Example2 {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        sigma: usize,
        #[arg(short = 't')]
        t: usize,
        #[command(flatten)]
        out: GenOut,
    },
}

pub fn parse_limits(s: &str) -> std::result::Result<Limits, String> {
    let mut limits = Limits::default();
    for part in s.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let value: usize = value.trim().parse().map_err(|e| format!("{key}: {e}"))?;
        match key.trim() {
            "n" => limits.max_n = value,
            "m" => limits.max_m = value,
            other => return Err(format!("unknown limit `{other}`")),
        }
    }
    Ok(limits)
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(load_graph(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

/// Writes `text` to `out`, or to stdout.
pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", text.trim_end()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
                _ => {}
            }
        }
    }
    Ok(())
}

fn emit_json(out: Option<&Path>, report: &Value) -> Result<()> {
    emit(out, &(to_canonical_json(report) + "\n"))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Sigma { k, graph, out } => {
            let g = read_graph(&graph)?;
            let r = sigma_k(&g, k)?;
            let degrees: Vec<usize> = r.witness.iter().map(|&v| g.degree(v)).collect();
            emit_json(out.as_deref(), &json!({ "sigma": r, "witness_degrees": degrees, "n": g.n(), "m": g.m() }))?;
            Ok(true)
        }
        Command::Dominate { k, graph, flavor, regime, out } => {
            let g = read_graph(&graph)?;
            let sigma = sigma_k(&g, k)?;
            let result = match flavor {
                DomFlavor::TwoStep => build_two_step(&g, k, &sigma)?,
                DomFlavor::TwoWay => upgrade_two_way(&g, k, &sigma, &build_two_step(&g, k, &sigma)?)?,
                DomFlavor::Strong => {
                    let regime = match regime {
                        Some(Regime::Half) => StrongRegime::HalfK,
                        Some(Regime::NineteenTenths) => StrongRegime::NineteenTenthsK,
                        None => RvcRegime::select(k, sigma.value)
                            .strong()
                            .ok_or_else(|| format!("strong sets need sigma_k > 7k (sigma_k = {}, k = {k})", sigma.value))?,
                    };
                    build_strong(&g, k, &sigma, regime)?
                }
            };
            let verdict = verify_domination(&g, &result);
            let trace = check_trace(&g, &result);
            let passed = verdict.passed() && trace.is_ok();
            emit_json(
                out.as_deref(),
                &json!({
                    "result": result,
                    "n1": result.n1(),
                    "n2": result.n2(),
                    "checks": verdict.checks,
                    "trace_check": trace.err(),
                    "passed": passed,
                }),
            )?;
            Ok(passed)
        }
        Command::ColorRc { k, graph, out, coloring, format } => {
            let g = read_graph(&graph)?;
            let cert = rc_pipeline(&g, k)?;
            let verified = cert
                .witnesses
                .iter()
                .all(|w| is_rainbow_edge_path(&g, &cert.coloring, &PathWitness::new(w.path.clone())));
            if let Some(path) = coloring {
                let text = match format {
                    Format::Json => to_canonical_json(&cert.coloring.to_json_value(&g)) + "\n",
                    Format::Csv => cert.coloring.to_csv(&g),
                };
                emit(Some(&path), &text)?;
            }
            let bounds = evaluate_rc_bounds(g.n(), g.min_degree(), k, cert.sigma.value);
            let passed = verified && cert.within_bound();
            emit_json(
                out.as_deref(),
                &json!({ "certificate": cert, "bounds": bounds, "verified": verified, "passed": passed }),
            )?;
            Ok(passed)
        }
        Command::ColorRvc { k, seed, graph, out, coloring } => {
            let g = read_graph(&graph)?;
            let cert = rvc_pipeline(&g, k, seed)?;
            let verified = cert
                .witnesses
                .iter()
                .all(|w| is_rainbow_vertex_path(&g, &cert.coloring, &PathWitness::new(w.path.clone())));
            if let Some(path) = coloring {
                emit(Some(&path), &(to_canonical_json(&cert.coloring.to_json_value()) + "\n"))?;
            }
            let bounds = evaluate_rvc_bounds(g.n(), g.min_degree(), k, cert.sigma.value);
            let passed = verified && cert.within_bound();
            emit_json(
                out.as_deref(),
                &json!({ "certificate": cert, "bounds": bounds, "verified": verified, "passed": passed }),
            )?;
            Ok(passed)
        }
        Command::Exact { graph, which, mut limits, budget_ms, out } => {
            let g = read_graph(&graph)?;
            if let Some(ms) = budget_ms {
                limits.time_per_size = Duration::from_millis(ms);
            }
            let mut report = json!({ "n": g.n(), "m": g.m(), "diameter": g.diameter().finite() });
            let mut passed = true;
            if which != Which::Rvc {
                let r = rc_exact(&g, &limits)?;
                let ok = verify_rainbow_edge(&g, &r.coloring, Budget::unlimited()).all_rainbow();
                passed &= ok;
                report["rc"] = json!({ "value": r.value, "nodes": r.nodes, "verified": ok, "coloring": r.coloring.to_json_value(&g) });
            }
            if which != Which::Rc {
                let r = rvc_exact(&g, &limits)?;
                let ok = verify_rainbow_vertex(&g, &r.coloring, Budget::unlimited()).all_rainbow();
                passed &= ok;
                report["rvc"] = json!({ "value": r.value, "nodes": r.nodes, "verified": ok, "coloring": r.coloring.to_json_value() });
            }
            emit_json(out.as_deref(), &report)?;
            Ok(passed)
        }
        Command::Gen { family } => {
            let (generated, out) = match family {
                GenFamily::Kstar { a, b, out } => (gen_kstar(a, b)?, out),
                GenFamily::Example1 { k, n, out } => (gen_example1(k, n)?, out),
                GenFamily::Example2 { k, sigma, t, out } => (gen_example2(k, sigma, t)?, out),
            };
            let (g, spec) = generated;
            emit(out.out.as_deref(), &g.to_edge_list())?;
            if let Some(path) = out.out {
                emit_json(Some(&path.with_extension("json")), &serde_json::to_value(&spec)?)?;
            }
            Ok(true)
        }
        Command::Sparsify { k, graph, out, report } => {
            let g = read_graph(&graph)?;
            let r = sparsify(&g, k)?;
            let passed = r.within_bound() && r.sigma_before == r.sigma_after && r.subgraph.is_connected();
            if let Some(path) = out.as_deref() {
                emit(Some(path), &r.subgraph.to_edge_list())?;
            }
            emit_json(report.as_deref(), &json!({ "report": r, "passed": passed }))?;
            Ok(passed)
        }
        Command::Verify { graph, diam, edge_coloring, vertex_coloring, budget_ms, out } => {
            let g = read_graph(&graph)?;
            let budget = match budget_ms {
                Some(ms) => Budget { time: Some(Duration::from_millis(ms)), ..Budget::default() },
                None => Budget::default(),
            };
            let mut report = json!({ "n": g.n(), "m": g.m() });
            let mut passed = true;
            if diam {
                let d = g.diameter().finite();
                passed &= d.is_some();
                report["diameter"] = json!(d);
            }
            let verdict = if let Some(path) = edge_coloring {
                let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                let c = EdgeColoring::from_json(&g, &text)?;
                report["palette_size"] = json!(c.palette_size());
                Some(verify_rainbow_edge(&g, &c, budget))
            } else if let Some(path) = vertex_coloring {
                let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                let c = VertexColoring::from_json(&g, &text)?;
                report["palette_size"] = json!(c.palette_size());
                Some(verify_rainbow_vertex(&g, &c, budget))
            } else {
                None
            };
            if let Some(v) = verdict {
                passed &= v.all_rainbow();
                let failures: Vec<[usize; 2]> = v.failures().map(|p| [p.u, p.v]).collect();
                let unknown: Vec<[usize; 2]> = v.unknown().map(|p| [p.u, p.v]).collect();
                report["rainbow_connected"] = json!(v.all_rainbow());
                report["pairs"] = json!(v.pairs.len());
                report["failures"] = json!(failures);
                report["unknown"] = json!(unknown);
            }
            report["passed"] = json!(passed);
            emit_json(out.as_deref(), &report)?;
            Ok(passed)
        }
        Command::Bench(args) => bench::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
