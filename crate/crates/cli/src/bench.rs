//! Bound-comparison sweep: one `BoundReport` per corpus graph.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, ValueEnum};
use rainbowk_core::bounds::{evaluate_rc_bounds, evaluate_rvc_bounds, BoundRow};
use rainbowk_core::extremal::{gen_example1, gen_example2};
use rainbowk_core::independence::alpha_at_least;
use rainbowk_core::random::connected_gnp;
use rainbowk_core::report::to_canonical_json;
use rainbowk_core::verify::{is_rainbow_edge_path, is_rainbow_vertex_path};
use rainbowk_core::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{emit, parse_limits, Format, Result};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFamily {
    Example1,
    Example2,
    Gnp,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    family: BenchFamily,
    #[arg(short = 'k')]
    k: usize,
    /// Vertex counts (example1, gnp).
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// sigma_k of the example2 family.
    #[arg(long)]
    sigma: Option<usize>,
    /// Path-block counts (example2).
    #[arg(short = 't', value_delimiter = ',')]
    t: Vec<usize>,
    /// Required for gnp; enables the randomized vertex pipeline everywhere.
    #[arg(long)]
    seed: Option<u64>,
    /// Graphs per size (gnp).
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Edge probability (gnp); defaults to `min(1, 2 ln n / n)`.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, value_parser = parse_limits, default_value = "n=8,m=14")]
    limits: Limits,
    /// Oracle time cap per candidate palette size.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Add wall-clock columns; the output is then no longer reproducible.
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Item {
    id: String,
    family: &'static str,
    g: Graph,
    rvc_seed: Option<u64>,
}

struct BoundReport {
    id: String,
    family: &'static str,
    n: usize,
    m: usize,
    delta: usize,
    k: usize,
    sigma: usize,
    rows: Vec<BoundRow>,
    rc: usize,
    rc_verified: bool,
    rc_within: bool,
    rvc: Option<(usize, bool, bool)>,
    exact: Option<(usize, usize)>,
    rc_time: Duration,
    rvc_time: Duration,
}

impl BoundReport {
    fn passed(&self) -> bool {
        self.rc_verified && self.rc_within && self.rvc.is_none_or(|(_, verified, within)| verified && within)
    }

    fn to_json(&self, timings: bool) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| json!({ "name": r.name, "formula": r.formula, "value": r.value, "applicable": r.value.is_some() }))
            .collect();
        let mut v = json!({
            "id": self.id,
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "k": self.k,
            "sigma_k": self.sigma,
            "bounds": rows,
            "rc": { "achieved": self.rc, "verified": self.rc_verified, "within_bound": self.rc_within },
            "rvc": self.rvc.map(|(a, verified, within)| json!({ "achieved": a, "verified": verified, "within_bound": within })),
            "exact": self.exact.map(|(rc, rvc)| json!({ "rc": rc, "rvc": rvc })),
        });
        if timings {
            v["timings_ms"] = json!({ "rc": ms(self.rc_time), "rvc": ms(self.rvc_time) });
        }
        v
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|x| x.to_string()).unwrap_or_default()
}

fn to_csv(reports: &[BoundReport], timings: bool) -> String {
    let mut out = String::from("id,family,n,m,delta,k,sigma_k");
    if let Some(first) = reports.first() {
        for r in &first.rows {
            write!(out, ",{}", r.name).unwrap();
        }
    }
    out.push_str(",rc_achieved,rc_verified,rvc_achieved,rvc_verified,rc_exact,rvc_exact");
    if timings {
        out.push_str(",rc_ms,rvc_ms");
    }
    out.push('\n');
    for r in reports {
        write!(out, "{},{},{},{},{},{},{}", r.id, r.family, r.n, r.m, r.delta, r.k, r.sigma).unwrap();
        for row in &r.rows {
            write!(out, ",{}", opt(row.value.map(|v| format!("{v:.6}")))).unwrap();
        }
        write!(
            out,
            ",{},{},{},{},{},{}",
            r.rc,
            r.rc_verified,
            opt(r.rvc.map(|x| x.0)),
            opt(r.rvc.map(|x| x.1)),
            opt(r.exact.map(|x| x.0)),
            opt(r.exact.map(|x| x.1))
        )
        .unwrap();
        if timings {
            write!(out, ",{:.3},{:.3}", ms(r.rc_time), ms(r.rvc_time)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Per-graph seed, independent of evaluation order.
fn derive_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn corpus(args: &BenchArgs) -> Result<Vec<Item>> {
    let k = args.k;
    let seeded = |i: usize| args.seed.map(|s| derive_seed(s, i));
    let mut items = Vec::new();
    match args.family {
        BenchFamily::Example1 => {
            for &n in &args.sizes {
                let (g, _) = gen_example1(k, n)?;
                items.push(Item { id: format!("example1-k{k}-n{n}"), family: "example1", g, rvc_seed: seeded(items.len()) });
            }
        }
        BenchFamily::Example2 => {
            let sigma = args.sigma.ok_or("example2 needs --sigma")?;
            for &t in &args.t {
                let (g, _) = gen_example2(k, sigma, t)?;
                items.push(Item {
                    id: format!("example2-k{k}-s{sigma}-t{t}"),
                    family: "example2",
                    g,
                    rvc_seed: seeded(items.len()),
                });
            }
        }
        BenchFamily::Gnp => {
            let seed = args.seed.ok_or("gnp needs --seed")?;
            for &n in &args.sizes {
                let p = args.p.unwrap_or_else(|| (2.0 * (n as f64).ln() / n as f64).min(1.0));
                for i in 0..args.count {
                    let index = items.len();
                    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, index));
                    let all: Vec<usize> = (0..n).collect();
                    let g = (0..100)
                        .filter_map(|_| connected_gnp(n, p, 1000, &mut rng))
                        .find(|g| alpha_at_least(g, &all, k).holds)
                        .ok_or_else(|| format!("no connected G({n}, {p}) with alpha >= {k} found"))?;
                    items.push(Item { id: format!("gnp-n{n}-{i}"), family: "gnp", g, rvc_seed: Some(derive_seed(seed, index)) });
                }
            }
        }
    }
    Ok(items)
}

fn evaluate(item: &Item, k: usize, limits: &Limits) -> Result<BoundReport> {
    let g = &item.g;
    let sigma = sigma_k(g, k)?.value;
    let delta = g.min_degree();
    let mut rows = evaluate_rc_bounds(g.n(), delta, k, sigma);
    rows.extend(evaluate_rvc_bounds(g.n(), delta, k, sigma));

    let start = Instant::now();
    let rc = rc_pipeline(g, k)?;
    let rc_time = start.elapsed();
    let rc_verified =
        rc.witnesses.iter().all(|w| is_rainbow_edge_path(g, &rc.coloring, &PathWitness::new(w.path.clone())));

    let start = Instant::now();
    let rvc = match item.rvc_seed {
        Some(seed) => {
            let c = rvc_pipeline(g, k, seed)?;
            let verified =
                c.witnesses.iter().all(|w| is_rainbow_vertex_path(g, &c.coloring, &PathWitness::new(w.path.clone())));
            Some((c.achieved, verified, c.within_bound()))
        }
        None => None,
    };
    let rvc_time = start.elapsed();

    let exact = if g.n() <= limits.max_n && g.m() <= limits.max_m {
        match (rc_exact(g, limits), rvc_exact(g, limits)) {
            (Ok(a), Ok(b)) => Some((a.value, b.value)),
            _ => None,
        }
    } else {
        None
    };

    Ok(BoundReport {
        id: item.id.clone(),
        family: item.family,
        n: g.n(),
        m: g.m(),
        delta,
        k,
        sigma,
        rows,
        rc: rc.achieved,
        rc_verified,
        rc_within: rc.within_bound(),
        rvc,
        exact,
        rc_time,
        rvc_time,
    })
}

pub fn run(mut args: BenchArgs) -> Result<bool> {
    if let Some(ms) = args.budget_ms {
        args.limits.time_per_size = Duration::from_millis(ms);
    }
    let items = corpus(&args)?;
    if items.is_empty() {
        return Err("empty corpus: pass --sizes (or -t for example2)".into());
    }
    // `collect` keeps corpus order whatever order the graphs finish in.
    let reports: Vec<BoundReport> = items
        .par_iter()
        .map(|item| evaluate(item, args.k, &args.limits).map_err(|e| format!("{}: {e}", item.id)))
        .collect::<std::result::Result<_, _>>()?;
    let text = match args.format {
        Format::Csv => to_csv(&reports, args.timings),
        Format::Json => {
            let rows: Vec<Value> = reports.iter().map(|r| r.to_json(args.timings)).collect();
            to_canonical_json(&json!({ "reports": rows })) + "\n"
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(reports.iter().all(BoundReport::passed))
}
