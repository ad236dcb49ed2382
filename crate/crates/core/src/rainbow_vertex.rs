//! Rainbow vertex-coloring through a connected strong two-step dominating set.
//!
//! `D` and the high-degree part of `N^1(D)` get distinct colors. The low part
//! gets 9 random colors, resampled until every uncovered `N^2(D)` vertex sees two
//! different colors among its gateway neighbors. `N^2(D)` stays uncolored.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{lll_value, rvc_sigma_bound};
use crate::coloring::VertexColoring;
use crate::domset::{build_strong, DomError, DominationResult, StrongRegime};
use crate::graph::{Graph, InducedTree, PathWitness};
use crate::independence::{sigma_k, IndependenceError, SigmaReport};
use crate::verify::is_rainbow_vertex_path;

pub use crate::bounds::evaluate_rvc_bounds;
pub use crate::verify::verify_rainbow_vertex;

pub const RANDOM_PALETTE: usize = 9;
/// Resampling budget per low vertex before the deterministic fallback.
pub const RESAMPLE_FACTOR: usize = 1000;

#[derive(Debug, Error)]
pub enum RvcError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Independence(#[from] IndependenceError),
    #[error(transparent)]
    Domination(#[from] DomError),
    #[error("the dominating set does not induce a connected subgraph")]
    DisconnectedSet,
    #[error("{high} high-degree vertices, expected fewer than {bound:.6}")]
    HighCount { high: usize, bound: f64 },
    #[error("no vertex-rainbow route for ({0}, {1})")]
    Routing(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RvcRegime {
    /// `sigma_k <= 7k`: spanning-tree coloring.
    Fallback,
    /// `7k < sigma_k < 8k`: strength `ceil(sigma_k / 1.9k)`.
    NineteenTenths,
    /// `sigma_k >= 8k`: strength `ceil(sigma_k / 2k)`.
    Half,
}

impl RvcRegime {
    pub fn select(k: usize, sigma: usize) -> Self {
        if sigma <= 7 * k {
            RvcRegime::Fallback
        } else if sigma < 8 * k {
            RvcRegime::NineteenTenths
        } else {
            RvcRegime::Half
        }
    }

    pub fn strong(self) -> Option<StrongRegime> {
        match self {
            RvcRegime::Fallback => None,
            RvcRegime::NineteenTenths => Some(StrongRegime::NineteenTenthsK),
            RvcRegime::Half => Some(StrongRegime::HalfK),
        }
    }
}

/// Split of `N^1(D)` into high and low vertices, and of `N^2(D)` into
/// covered and uncovered vertices. Each set is fixed by the rule on its field;
/// `uncovered` depends on `high` only, never on `low`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct N1Partition {
    /// `(sigma + k)^2 / (2k^2) - 1`.
    pub threshold: f64,
    pub high: Vec<usize>,
    pub low: Vec<usize>,
    /// `N^2(D)` vertices with a high neighbor.
    pub covered: Vec<usize>,
    pub uncovered: Vec<usize>,
    /// `2k^2 n / (sigma + k)`; `high.len()` must stay below it.
    pub high_bound: f64,
}

/// Splits `N^1(D)` by the number of neighbors in `N^2(D)`.
pub fn partition_n1(g: &Graph, result: &DominationResult, k: usize, sigma: usize) -> N1Partition {
    let (kf, sf) = (k as f64, sigma as f64);
    let threshold = (sf + kf).powi(2) / (2.0 * kf * kf) - 1.0;
    let dec = &result.decomposition;
    let (mut high, mut low) = (Vec::new(), Vec::new());
    for &x in result.n1() {
        if dec.neighbors_in_layer(g, x, 2) as f64 >= threshold {
            high.push(x);
        } else {
            low.push(x);
        }
    }
    let mut is_high = vec![false; g.n()];
    for &x in &high {
        is_high[x] = true;
    }
    let (covered, uncovered) = result.n2().iter().partition(|&&y| g.neighbors(y).iter().any(|&x| is_high[x]));
    N1Partition { threshold, high, low, covered, uncovered, high_bound: 2.0 * kf * kf * g.n() as f64 / (sf + kf) }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LllInstance {
    pub s: usize,
    /// `(v, X(v))` for every uncovered `v`; `X(v)` is the `s` smallest low neighbors.
    pub gateways: Vec<(usize, Vec<usize>)>,
    /// `9^(1 - s)`.
    pub probability_bound: f64,
    /// `((sigma + k)^2 / (2k^2) - 2) s`.
    pub dependency_bound: f64,
    /// Largest number of other events sharing a gateway with one event.
    pub observed_dependency: usize,
    /// `e * p * (d + 1)`.
    pub condition: f64,
}

impl LllInstance {
    pub fn holds(&self) -> bool {
        self.condition < 1.0
    }
}

pub fn lll_instance(g: &Graph, partition: &N1Partition, k: usize, sigma: usize, s: usize) -> LllInstance {
    let mut is_low = vec![false; g.n()];
    for &x in &partition.low {
        is_low[x] = true;
    }
    let gateways: Vec<(usize, Vec<usize>)> = partition
        .uncovered
        .iter()
        .map(|&v| (v, g.neighbors(v).iter().copied().filter(|&x| is_low[x]).take(s).collect()))
        .collect();
    let mut users: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, (_, xs)) in gateways.iter().enumerate() {
        for &x in xs {
            users[x].push(i);
        }
    }
    let observed_dependency = (0..gateways.len())
        .map(|i| {
            let mut others: Vec<usize> = gateways[i].1.iter().flat_map(|&x| users[x].iter().copied()).collect();
            others.sort_unstable();
            others.dedup();
            others.len().saturating_sub(1)
        })
        .max()
        .unwrap_or(0);
    let (kf, sf) = (k as f64, sigma as f64);
    LllInstance {
        s,
        gateways,
        probability_bound: 9f64.powi(1 - s as i32),
        dependency_bound: ((sf + kf).powi(2) / (2.0 * kf * kf) - 2.0) * s as f64,
        observed_dependency,
        condition: lll_value(k, sigma, s),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LllOutcome {
    pub coloring: VertexColoring,
    pub resamples: usize,
    /// Events still violated when the resampling budget ran out.
    pub fallback_events: usize,
}

/// Distinct colors on `D` and the high part, then Moser-Tardos resampling of
/// the 9-color palette on the low part.
pub fn lll_color(
    g: &Graph,
    result: &DominationResult,
    partition: &N1Partition,
    instance: &LllInstance,
    seed: u64,
) -> LllOutcome {
    let mut colors = vec![None; g.n()];
    let mut next = 0;
    for &v in result.set.iter().chain(&partition.high) {
        colors[v] = Some(next);
        next += 1;
    }
    let distinct = next;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &x in &partition.low {
        colors[x] = Some(distinct + rng.gen_range(0..RANDOM_PALETTE));
    }
    let violated = |colors: &[Option<usize>], xs: &[usize]| xs.windows(2).all(|w| colors[w[0]] == colors[w[1]]);
    let cap = RESAMPLE_FACTOR * partition.low.len();
    let mut resamples = 0;
    let mut fallback_events = 0;
    let mut promoted = 0;
    while let Some((_, xs)) = instance.gateways.iter().find(|(_, xs)| violated(&colors, xs)) {
        if resamples >= cap {
            let mut is_promoted = vec![false; g.n()];
            for (_, xs) in &instance.gateways {
                if !violated(&colors, xs) {
                    continue;
                }
                fallback_events += 1;
                for &x in xs {
                    if !is_promoted[x] {
                        is_promoted[x] = true;
                        colors[x] = Some(distinct + RANDOM_PALETTE + promoted);
                        promoted += 1;
                    }
                }
            }
            break;
        }
        for &x in xs {
            colors[x] = Some(distinct + rng.gen_range(0..RANDOM_PALETTE));
        }
        resamples += 1;
    }
    let random = if partition.low.is_empty() { 0 } else { RANDOM_PALETTE };
    LllOutcome {
        coloring: VertexColoring { colors, distinct, random, promoted, seed: Some(seed) },
        resamples,
        fallback_events,
    }
}

/// Gateway-through-`D` routing for the strong-set coloring.
pub struct VertexRouter<'a> {
    g: &'a Graph,
    tree: InducedTree,
    layer: Vec<Option<usize>>,
    is_high: Vec<bool>,
    coloring: &'a VertexColoring,
}

impl<'a> VertexRouter<'a> {
    pub fn new(
        g: &'a Graph,
        result: &DominationResult,
        partition: &N1Partition,
        coloring: &'a VertexColoring,
    ) -> Result<Self, RvcError> {
        let tree = InducedTree::new(g, &result.set).ok_or(RvcError::DisconnectedSet)?;
        let mut is_high = vec![false; g.n()];
        for &x in &partition.high {
            is_high[x] = true;
        }
        let layer = (0..g.n()).map(|v| result.decomposition.distance(v)).collect();
        Ok(VertexRouter { g, tree, layer, is_high, coloring })
    }

    fn foot(&self, x: usize) -> usize {
        *self.g.neighbors(x).iter().find(|&&w| self.layer[w] == Some(0)).expect("N1 vertex has a D-neighbor")
    }

    /// Candidate gateways of an `N^2` vertex: a high neighbor if there is
    /// one, otherwise its low neighbors.
    fn gateways(&self, y: usize) -> Vec<usize> {
        let up = self.g.neighbors(y).iter().copied().filter(|&x| self.layer[x] == Some(1));
        match self.g.neighbors(y).iter().copied().find(|&x| self.is_high[x]) {
            Some(h) => vec![h],
            None => up.collect(),
        }
    }

    /// Vertex sequence from `v` into `D`, `v` first.
    fn entries(&self, v: usize) -> Vec<Vec<usize>> {
        match self.layer[v] {
            Some(0) => vec![vec![v]],
            Some(1) => vec![vec![v, self.foot(v)]],
            _ => self.gateways(v).into_iter().map(|a| vec![v, a, self.foot(a)]).collect(),
        }
    }

    pub fn route(&self, u: usize, v: usize) -> Result<PathWitness, RvcError> {
        let g = self.g;
        if u == v || g.has_edge(u, v) {
            return Ok(PathWitness::new(if u == v { vec![u] } else { vec![u, v] }));
        }
        for &z in g.neighbors(u) {
            if g.has_edge(z, v) && self.coloring.color(z).is_some() {
                return Ok(PathWitness::new(vec![u, z, v]));
            }
        }
        for a in self.entries(u) {
            for b in self.entries(v) {
                let mut walk = a.clone();
                walk.extend_from_slice(&self.tree.path(*a.last().unwrap(), *b.last().unwrap())[1..]);
                walk.extend(b.iter().rev().skip(1));
                let path = PathWitness::from_walk(&walk);
                if is_rainbow_vertex_path(g, self.coloring, &path) {
                    return Ok(path);
                }
            }
        }
        Err(RvcError::Routing(u, v))
    }
}

/// Distinct colors on the non-leaf vertices of a BFS spanning tree; none at
/// all on a complete graph.
pub fn spanning_tree_vertex_coloring(g: &Graph) -> (VertexColoring, Vec<VertexWitness>) {
    let all: Vec<usize> = (0..g.n()).collect();
    let mut colors = vec![None; g.n()];
    let mut witnesses = Vec::new();
    let tree = InducedTree::new(g, &all);
    if let Some(tree) = tree.as_ref().filter(|_| !g.is_complete()) {
        let mut tree_degree = vec![0; g.n()];
        for &(p, c) in tree.tree_edges() {
            tree_degree[p] += 1;
            tree_degree[c] += 1;
        }
        let mut next = 0;
        for v in 0..g.n() {
            if tree_degree[v] >= 2 {
                colors[v] = Some(next);
                next += 1;
            }
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let path = match &tree {
                Some(_) if g.has_edge(u, v) => vec![u, v],
                Some(t) => t.path(u, v),
                None => continue,
            };
            witnesses.push(VertexWitness { u, v, path });
        }
    }
    (VertexColoring::from_colors(colors), witnesses)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexWitness {
    pub u: usize,
    pub v: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RvcCertificate {
    pub n: usize,
    pub k: usize,
    pub sigma: SigmaReport,
    pub regime: RvcRegime,
    pub domination: Option<DominationResult>,
    pub partition: Option<N1Partition>,
    pub lll: Option<LllInstance>,
    #[serde(skip)]
    pub coloring: VertexColoring,
    pub achieved: usize,
    pub bound: f64,
    pub resamples: usize,
    /// Events that needed the deterministic fallback.
    pub fallback_events: usize,
    pub witnesses: Vec<VertexWitness>,
}

impl RvcCertificate {
    pub fn within_bound(&self) -> bool {
        self.achieved as f64 <= self.bound + 1e-9
    }
}

pub fn rvc_pipeline(g: &Graph, k: usize, seed: u64) -> Result<RvcCertificate, RvcError> {
    if !g.is_connected() {
        return Err(RvcError::Disconnected);
    }
    let sigma = sigma_k(g, k)?;
    let n = g.n();
    let regime = RvcRegime::select(k, sigma.value);
    let bound = rvc_sigma_bound(n, k, sigma.value);
    let Some(strong) = regime.strong() else {
        let (coloring, witnesses) = spanning_tree_vertex_coloring(g);
        return Ok(RvcCertificate {
            n,
            k,
            sigma,
            regime,
            domination: None,
            partition: None,
            lll: None,
            achieved: coloring.palette_size(),
            coloring,
            bound,
            resamples: 0,
            fallback_events: 0,
            witnesses,
        });
    };
    let result = build_strong(g, k, &sigma, strong)?;
    let partition = partition_n1(g, &result, k, sigma.value);
    if partition.high.len() as f64 >= partition.high_bound {
        return Err(RvcError::HighCount { high: partition.high.len(), bound: partition.high_bound });
    }
    let s = strong.strength(sigma.value, k);
    let instance = lll_instance(g, &partition, k, sigma.value, s);
    debug_assert!(instance.holds());
    let outcome = lll_color(g, &result, &partition, &instance, seed);
    let router = VertexRouter::new(g, &result, &partition, &outcome.coloring)?;
    let mut witnesses = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let path = router.route(u, v)?;
            witnesses.push(VertexWitness { u, v, path: path.vertices().to_vec() });
        }
    }
    Ok(RvcCertificate {
        n,
        k,
        achieved: outcome.coloring.palette_size(),
        sigma,
        regime,
        domination: Some(result),
        partition: Some(partition),
        lll: Some(instance),
        coloring: outcome.coloring,
        bound,
        resamples: outcome.resamples,
        fallback_events: outcome.fallback_events,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domset::Flavor;
    use crate::random::connected_gnp;
    use crate::verify::Budget;

    fn strong_on(g: &Graph, set: Vec<usize>) -> DominationResult {
        DominationResult {
            decomposition: g.bfs_layers(&set).unwrap(),
            set,
            strength: None,
            flavor: Flavor::Strong { strength: 4, regime: StrongRegime::HalfK },
            k: 2,
            sigma: 16,
            size_bound: 0.0,
            alt_size_bound: None,
            trace: Vec::new(),
        }
    }

    /// `D = {0}`, `N^1 = {1, 2, 3, 4}`, `N^2 = {5}` adjacent to all of `N^1`.
    fn fan() -> Graph {
        Graph::new(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)]).unwrap()
    }

    fn check_certificate(g: &Graph, cert: &RvcCertificate) {
        assert_eq!(cert.witnesses.len(), g.n() * (g.n() - 1) / 2);
        for w in &cert.witnesses {
            assert!(is_rainbow_vertex_path(g, &cert.coloring, &PathWitness::new(w.path.clone())));
        }
        let diam = g.diameter().finite().unwrap();
        assert!(cert.achieved + 1 >= diam);
    }

    #[test]
    fn partition_extremes() {
        let g = fan();
        let r = strong_on(&g, vec![0]);
        let p = partition_n1(&g, &r, 2, 16);
        assert_eq!(p.threshold, 18.0 * 18.0 / 8.0 - 1.0);
        assert!(p.high.is_empty());
        assert_eq!(p.uncovered, vec![5]);
        // (0 + 1)^2 / 2 - 1 < 0: everything is high
        let p = partition_n1(&g, &r, 1, 0);
        assert_eq!(p.high, vec![1, 2, 3, 4]);
        assert!(p.uncovered.is_empty());
    }

    #[test]
    fn single_event_resampling() {
        let g = fan();
        let r = strong_on(&g, vec![0]);
        let p = partition_n1(&g, &r, 2, 16);
        let inst = lll_instance(&g, &p, 2, 16, 4);
        assert_eq!(inst.gateways, vec![(5, vec![1, 2, 3, 4])]);
        assert!(inst.holds());
        for seed in 0..200 {
            let out = lll_color(&g, &r, &p, &inst, seed);
            let cs: Vec<_> = (1..=4).map(|x| out.coloring.color(x)).collect();
            assert!(cs.iter().any(|&c| c != cs[0]));
            assert_eq!(out.fallback_events, 0);
            assert_eq!(out.coloring.color(5), None);
        }
        let a = lll_color(&g, &r, &p, &inst, 7);
        assert_eq!(a, lll_color(&g, &r, &p, &inst, 7));
    }

    #[test]
    fn no_events_means_no_resamples() {
        let g = Graph::star(4);
        let r = strong_on(&g, vec![0]);
        let p = partition_n1(&g, &r, 2, 16);
        let inst = lll_instance(&g, &p, 2, 16, 4);
        assert_eq!(lll_color(&g, &r, &p, &inst, 1).resamples, 0);
    }

    #[test]
    fn complete_graph_needs_no_colors() {
        let g = Graph::complete(4);
        let cert = rvc_pipeline(&g, 1, 0).unwrap();
        assert_eq!(cert.regime, RvcRegime::Fallback);
        assert_eq!(cert.achieved, 0);
        check_certificate(&g, &cert);
    }

    #[test]
    fn p4_fallback() {
        let g = Graph::path(4);
        let cert = rvc_pipeline(&g, 2, 0).unwrap();
        assert_eq!(cert.regime, RvcRegime::Fallback);
        assert_eq!(cert.achieved, 2);
        check_certificate(&g, &cert);
    }

    #[test]
    fn dense_random_graph_uses_strong_set() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = connected_gnp(70, 0.35, 100, &mut rng).unwrap();
        let cert = rvc_pipeline(&g, 2, 3).unwrap();
        assert_ne!(cert.regime, RvcRegime::Fallback);
        let p = cert.partition.as_ref().unwrap();
        assert!((p.high.len() as f64) < p.high_bound);
        assert!(cert.lll.as_ref().unwrap().holds());
        assert!(cert.within_bound(), "{} > {}", cert.achieved, cert.bound);
        check_certificate(&g, &cert);
        assert!(verify_rainbow_vertex(&g, &cert.coloring, Budget::default()).all_rainbow());
    }

    #[test]
    fn bound_rows() {
        let rows = evaluate_rvc_bounds(100, 3, 2, 16);
        let get = |name| rows.iter().find(|r| r.name == name).unwrap().value;
        assert_eq!(get("rvc-four"), Some(73.0));
        assert!((get("rvc-sigma").unwrap() - (16.0 * 100.0 / 18.0 + 10.0)).abs() < 1e-12);
        let rows = evaluate_rvc_bounds(100, 10, 2, 16);
        assert_eq!(rows[0].value, Some(110.0));
    }
}
