//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rainbowk_core::bounds::lll_value;
use rainbowk_core::domset::{build_two_step, check_trace, strengthen, upgrade_two_way, verify_domination};
use rainbowk_core::extremal::{example2_tightness_holds, gen_example1, gen_example2};
use rainbowk_core::graph::Distance;
use rainbowk_core::independence::{alpha_at_least, sparsify_edge_bound, SigmaMethod};
use rainbowk_core::rainbow_vertex::RvcRegime;
use rainbowk_core::random::connected_gnp;
use rainbowk_core::verify::{is_rainbow_edge_path, is_rainbow_vertex_path};
use rainbowk_core::*;

const CORPUS_SEED: u64 = 0x5eed_2024;
const RVC_SEED: u64 = 7;

struct Instance {
    name: String,
    g: Graph,
    k: usize,
}

/// 200 connected G(n, p) graphs with `20 <= n <= 80`, `k` in {2, 3} and
/// `alpha >= k`; `p` is log-uniform between `1.5 ln n / n` and 0.6.
fn random_corpus() -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::new();
    while out.len() < 200 {
        let n: usize = rng.gen_range(20..=80);
        let k: usize = rng.gen_range(2..=3);
        let lo = (1.5 * (n as f64).ln() / n as f64).ln();
        let p = (lo + rng.gen::<f64>() * (0.6f64.ln() - lo)).exp();
        let Some(g) = connected_gnp(n, p, 1000, &mut rng) else { continue };
        let all: Vec<usize> = (0..n).collect();
        if alpha_at_least(&g, &all, k).holds {
            out.push(Instance { name: format!("gnp-{}-n{n}-k{k}", out.len()), g, k });
        }
    }
    out
}

fn example_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for (k, sizes) in [(2, [10, 30, 60]), (3, [30, 58, 86])] {
        for n in sizes {
            out.push(Instance { name: format!("example1-k{k}-n{n}"), g: gen_example1(k, n).unwrap().0, k });
        }
    }
    for t in 0..=4 {
        out.push(Instance { name: format!("example2-t{t}"), g: gen_example2(2, 10, t).unwrap().0, k: 2 });
    }
    out
}

/// Connected graphs with `n <= 8` and `m <= 14`, within the oracle's limits.
fn small_corpus() -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 8);
    let mut out = Vec::new();
    while out.len() < 60 {
        let n: usize = rng.gen_range(4..=8);
        let k: usize = rng.gen_range(1..=3);
        let Some(g) = connected_gnp(n, rng.gen_range(0.3..0.8), 100, &mut rng) else { continue };
        let all: Vec<usize> = (0..n).collect();
        if g.m() <= 14 && alpha_at_least(&g, &all, k).holds {
            out.push(Instance { name: format!("small-{}", out.len()), g, k });
        }
    }
    out
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion1() -> Check {
    let mut rows = 0;
    for (k, sizes) in [(2, [10, 30, 60]), (3, [30, 58, 86])] {
        for n in sizes {
            let (g, _) = gen_example1(k, n).map_err(|e| e.to_string())?;
            let s = sigma_k(&g, k).map_err(|e| e.to_string())?;
            ensure(s.value == n - k && s.method == SigmaMethod::Exact, || {
                format!("k={k} n={n}: sigma {} ({:?}), expected {}", s.value, s.method, n - k)
            })?;
            ensure(g.min_degree() == 1, || format!("k={k} n={n}: delta {}", g.min_degree()))?;
            rows += 1;
        }
    }
    Ok(format!("{rows} graphs with sigma_k = n - k and delta = 1"))
}

fn criterion2() -> Check {
    for t in 0..=4 {
        let (g, _) = gen_example2(2, 10, t).map_err(|e| e.to_string())?;
        ensure(g.diameter() == Distance::Finite(3 * t + 5), || format!("t={t}: diameter {}", g.diameter()))?;
        ensure(example2_tightness_holds(2, 10, t, g.n()), || format!("t={t}: identity fails at n={}", g.n()))?;
    }
    Ok("t = 0..4: diameter 3t+5 and 3k(n-2)/(sigma+k) - 1 = 3t+5".into())
}

fn criterion3(corpus: &[&Instance]) -> Check {
    let mut repaired = 0;
    let mut fallback = 0;
    let mut worst_slack = usize::MAX;
    for inst in corpus {
        let g = &inst.g;
        let cert = rc_pipeline(g, inst.k).map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(cert.coloring.is_total(), || format!("{}: partial coloring", inst.name))?;
        let pairs: Vec<(usize, usize)> = cert.witnesses.iter().map(|w| (w.u, w.v)).collect();
        let expected: Vec<(usize, usize)> = (0..g.n()).tuple_combinations().collect();
        ensure(pairs == expected, || format!("{}: witness list does not cover every pair", inst.name))?;
        for w in &cert.witnesses {
            ensure(is_rainbow_edge_path(g, &cert.coloring, &PathWitness::new(w.path.clone())), || {
                format!("{}: witness for ({}, {}) is not rainbow", inst.name, w.u, w.v)
            })?;
        }
        ensure(cert.achieved <= cert.budget, || format!("{}: achieved {} > {}", inst.name, cert.achieved, cert.budget))?;
        let diam = g.diameter().finite().unwrap();
        ensure(cert.achieved >= diam, || format!("{}: achieved {} < diam {diam}", inst.name, cert.achieved))?;
        repaired += usize::from(cert.stats.recolorings > 0);
        fallback += usize::from(cert.fallback);
        worst_slack = worst_slack.min(cert.budget - cert.achieved);
    }
    Ok(format!(
        "{} graphs certified, {fallback} spanning-tree fallbacks, {repaired} needed repairs, min slack {worst_slack}",
        corpus.len()
    ))
}

fn criterion4(corpus: &[&Instance]) -> Check {
    let mut used = 0;
    let mut resamples = 0;
    for inst in corpus {
        let g = &inst.g;
        let sigma = sigma_k(g, inst.k).map_err(|e| e.to_string())?;
        if sigma.value <= 7 * inst.k {
            continue;
        }
        used += 1;
        let cert = rvc_pipeline(g, inst.k, RVC_SEED).map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(cert.regime != RvcRegime::Fallback, || format!("{}: unexpected fallback", inst.name))?;
        ensure(cert.within_bound(), || format!("{}: achieved {} > {:.3}", inst.name, cert.achieved, cert.bound))?;
        ensure(cert.witnesses.len() == g.n() * (g.n() - 1) / 2, || format!("{}: missing witnesses", inst.name))?;
        for w in &cert.witnesses {
            ensure(is_rainbow_vertex_path(g, &cert.coloring, &PathWitness::new(w.path.clone())), || {
                format!("{}: witness for ({}, {}) fails", inst.name, w.u, w.v)
            })?;
        }
        let part = cert.partition.as_ref().unwrap();
        let mut low = vec![false; g.n()];
        for &x in &part.low {
            low[x] = true;
        }
        for &v in &part.uncovered {
            let colors: Vec<usize> =
                g.neighbors(v).iter().filter(|&&x| low[x]).filter_map(|&x| cert.coloring.color(x)).unique().collect();
            ensure(colors.len() >= 2, || format!("{}: uncovered {v} sees {} gateway colors", inst.name, colors.len()))?;
        }
        ensure(cert.lll.as_ref().unwrap().holds(), || format!("{}: LLL condition fails", inst.name))?;
        resamples += cert.resamples;
    }
    Ok(format!("{used} graphs with sigma_k > 7k within bound, {resamples} resamples in total"))
}

fn criterion5() -> Check {
    let spot = lll_value(2, 16, 4);
    ensure((spot - 0.578).abs() <= 0.01, || format!("spot value {spot:.4}"))?;
    let mut cells = 0;
    for k in 2usize..=6 {
        for sigma in 8 * k..=40 * k {
            let s = sigma.div_ceil(2 * k);
            ensure(lll_value(k, sigma, s) < 1.0, || format!("half branch k={k} sigma={sigma}"))?;
            cells += 1;
        }
        for sigma in 7 * k + 1..=40 * k {
            let s = (10 * sigma).div_ceil(19 * k);
            ensure(lll_value(k, sigma, s) < 1.0, || format!("1.9k branch k={k} sigma={sigma}"))?;
            cells += 1;
        }
    }
    Ok(format!("{cells} grid cells below 1, value at k=2, sigma=16 is {spot:.4}"))
}

fn criterion6(small: &[Instance]) -> Check {
    let limits = Limits::default();
    let rc = |g: &Graph| -> Result<usize, String> {
        let r = rc_exact(g, &limits).map_err(|e| e.to_string())?;
        ensure(verify_rainbow_edge(g, &r.coloring, Budget::unlimited()).all_rainbow(), || "rc optimum fails".into())?;
        Ok(r.value)
    };
    let rvc = |g: &Graph| -> Result<usize, String> {
        let r = rvc_exact(g, &limits).map_err(|e| e.to_string())?;
        ensure(verify_rainbow_vertex(g, &r.coloring, Budget::unlimited()).all_rainbow(), || "rvc optimum fails".into())?;
        Ok(r.value)
    };
    for n in 2..=7 {
        ensure(rc(&Graph::path(n))? == n - 1, || format!("rc(P{n})"))?;
    }
    for m in 2..=5 {
        ensure(rc(&Graph::complete(m))? == 1, || format!("rc(K{m})"))?;
        ensure(rvc(&Graph::complete(m))? == 0, || format!("rvc(K{m})"))?;
    }
    ensure(rvc(&Graph::path(4))? == 2, || "rvc(P4)".into())?;
    for inst in small {
        let (exact_rc, exact_rvc) = (rc(&inst.g)?, rvc(&inst.g)?);
        let a = rc_pipeline(&inst.g, inst.k).map_err(|e| e.to_string())?.achieved;
        let b = rvc_pipeline(&inst.g, inst.k, RVC_SEED).map_err(|e| e.to_string())?.achieved;
        ensure(a >= exact_rc && b >= exact_rvc, || {
            format!("{}: pipeline ({a}, {b}) below exact ({exact_rc}, {exact_rvc})", inst.name)
        })?;
    }
    Ok(format!("closed forms hold, {} small graphs: pipelines never below exact", small.len()))
}

fn criterion7(corpus: &[&Instance]) -> Check {
    let mut sets = 0;
    for inst in corpus {
        let (g, k) = (&inst.g, inst.k);
        let sigma = sigma_k(g, k).map_err(|e| e.to_string())?;
        if sigma.value < 2 * k + 1 {
            continue;
        }
        let check = |r: &DominationResult, what: &str| -> Result<(), String> {
            let verdict = verify_domination(g, r);
            ensure(verdict.passed(), || format!("{} {what}: {:?}", inst.name, verdict.failures()))?;
            check_trace(g, r).map_err(|e| format!("{} {what} trace: {e}", inst.name))
        };
        let base = build_two_step(g, k, &sigma).map_err(|e| format!("{}: {e}", inst.name))?;
        check(&base, "two-step")?;
        let two_way = upgrade_two_way(g, k, &sigma, &base).map_err(|e| format!("{}: {e}", inst.name))?;
        check(&two_way, "two-way")?;
        sets += 2;
        if let Some(regime) = RvcRegime::select(k, sigma.value).strong() {
            let strong = strengthen(g, k, &sigma, &base, regime).map_err(|e| format!("{}: {e}", inst.name))?;
            check(&strong, "strong")?;
            sets += 1;
        }
    }
    Ok(format!("{sets} dominating sets verified with their traces"))
}

fn brute_sigma(g: &Graph, k: usize) -> Option<usize> {
    (0..g.n())
        .combinations(k)
        .filter(|s| s.iter().tuple_combinations().all(|(&a, &b)| !g.has_edge(a, b)))
        .map(|s| s.iter().map(|&v| g.degree(v)).sum())
        .min()
}

fn criterion8(corpus: &[&Instance]) -> Check {
    for inst in corpus.iter().take(50) {
        let (g, k) = (&inst.g, inst.k);
        let r = sparsify(g, k).map_err(|e| format!("{}: {e}", inst.name))?;
        let h = &r.subgraph;
        ensure(h.n() == g.n() && h.is_connected(), || format!("{}: output not spanning and connected", inst.name))?;
        let before = sigma_k(g, k).map_err(|e| e.to_string())?.value;
        let after = sigma_k(h, k).map_err(|e| e.to_string())?.value;
        ensure(before == after, || format!("{}: sigma {before} -> {after}", inst.name))?;
        let bound = sparsify_edge_bound(g.n(), k, before);
        ensure((h.m() as f64) < bound, || format!("{}: {} edges, bound {bound:.3}", inst.name, h.m()))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 12);
    let mut small = 0;
    while small < 20 {
        let n = rng.gen_range(6..=12);
        let k = rng.gen_range(1..=3);
        let Some(g) = connected_gnp(n, rng.gen_range(0.3..0.8), 100, &mut rng) else { continue };
        let Some(sigma) = brute_sigma(&g, k) else { continue };
        let h = sparsify(&g, k).map_err(|e| e.to_string())?.subgraph;
        ensure(brute_sigma(&h, k) == Some(sigma), || format!("small n={n}: sigma changed"))?;
        for e in 0..h.m() {
            let cut = h.without_edges(&[e]);
            ensure(!cut.is_connected() || brute_sigma(&cut, k) != Some(sigma), || {
                format!("small n={n}: edge {:?} removable", h.edges()[e])
            })?;
        }
        small += 1;
    }
    Ok(format!("{} corpus graphs within the edge bound, {small} small outputs minimal", corpus.len().min(50)))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let randoms = random_corpus();
    let examples = example_instances();
    let small = small_corpus();
    let full: Vec<&Instance> = randoms.iter().chain(&examples).collect();
    let random_only: Vec<&Instance> = randoms.iter().collect();
    let with_small: Vec<&Instance> = full.iter().copied().chain(&small).collect();
    println!("corpus: {} random, {} example, {} small graphs ({:.2?})", randoms.len(), examples.len(), small.len(), start.elapsed());

    type Job<'a> = Box<dyn Fn() -> Check + 'a>;
    let jobs: Vec<(usize, &str, u64, Job)> = vec![
        (1, "example 1 closed forms", 10, Box::new(criterion1)),
        (2, "example 2 diameter and tightness", 5, Box::new(criterion2)),
        (3, "rc bound compliance", 300, Box::new(|| criterion3(&full))),
        (4, "rvc bound compliance", 300, Box::new(|| criterion4(&random_only))),
        (5, "LLL threshold grid", 1, Box::new(criterion5)),
        (6, "oracle cross-validation", 120, Box::new(|| criterion6(&small))),
        (7, "dominating-set invariants", 120, Box::new(|| criterion7(&with_small))),
        (8, "sparsifier", 120, Box::new(|| criterion8(&random_only))),
    ];
    let mut failed = 0;
    for (id, name, limit, job) in jobs {
        let t = Instant::now();
        let result = job();
        let elapsed = t.elapsed();
        let result = match result {
            Ok(msg) if elapsed > Duration::from_secs(limit) => Err(format!("{msg}; over the {limit} s limit")),
            other => other,
        };
        let (tag, msg) = match &result {
            Ok(msg) => ("PASS", msg),
            Err(msg) => ("FAIL", msg),
        };
        failed += usize::from(result.is_err());
        println!("{tag} [{id}] {name}: {msg} ({:.2?}, limit {limit} s)", elapsed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
