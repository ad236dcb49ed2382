//! Rainbow edge-coloring through a connected two-way dominating set.
//!
//! A spanning tree of `G[D]` gets distinct colors, the rest of the graph gets
//! six fresh colors, and pairs the scheme misses are fixed by recoloring single
//! edges with repair colors. Every pair ends up with a checked rainbow path.

use std::collections::{HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{EdgeColoring, Provenance};
use crate::domset::{build_two_step, upgrade_two_way, DomError, DominationResult, Flavor};
use crate::graph::{Graph, InducedTree, PathWitness};
use crate::independence::{sigma_k, IndependenceError, SigmaReport};
use crate::verify::{is_rainbow_edge_path, rainbow_edge_path, Budget, PairVerdict};

pub use crate::bounds::evaluate_rc_bounds;
pub use crate::verify::verify_rainbow_edge;

#[derive(Debug, Error)]
pub enum RcError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Independence(#[from] IndependenceError),
    #[error(transparent)]
    Domination(#[from] DomError),
    #[error("dominating set must be two-way, got {0:?}")]
    NotTwoWay(Flavor),
    #[error("the dominating set does not induce a connected subgraph")]
    DisconnectedSet,
    #[error("repair loop gave up after {0} recolorings")]
    RepairLimit(usize),
    #[error("witness for ({0}, {1}) failed the independent check")]
    BadWitness(usize, usize),
}

/// Walks of length at most this from a vertex outside `D` into `D`.
const DESCENT_DEPTH: usize = 3;
const MAX_DESCENTS: usize = 256;
/// State cap for the per-pair exhaustive search inside the repair loop.
const SEARCH_STATES: u64 = 50_000;
/// Existing repair colors tried before opening a new one.
const REUSE_TRIES: usize = 4;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ExtensionStats {
    pub tree_colors: usize,
    pub fresh_colors: usize,
    pub repair_colors: usize,
    pub recolorings: usize,
    /// Pairs whose witness came from exhaustive search rather than the router.
    pub searched_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeWitness {
    pub u: usize,
    pub v: usize,
    pub path: Vec<usize>,
    pub searched: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RcCertificate {
    pub n: usize,
    pub k: usize,
    pub sigma: SigmaReport,
    pub domination: Option<DominationResult>,
    #[serde(skip)]
    pub coloring: EdgeColoring,
    pub achieved: usize,
    /// `3k(n-2)/(sigma+k) + 6k - 4`.
    pub bound: f64,
    /// `3k(n-1)/(sigma+k) + 6k - 3`, the asserted form.
    pub bound_loose: f64,
    /// Floor of `bound_loose`.
    pub budget: usize,
    /// Spanning-tree coloring used because `sigma_k <= 2k`.
    pub fallback: bool,
    pub stats: ExtensionStats,
    pub witnesses: Vec<EdgeWitness>,
}

impl RcCertificate {
    pub fn within_bound(&self) -> bool {
        self.achieved <= self.budget
    }
}

/// Distinct colors `0..|D|-1` on the BFS tree of `G[D]`, in discovery order.
pub fn color_dominating_tree(g: &Graph, result: &DominationResult) -> Result<EdgeColoring, RcError> {
    if result.flavor != Flavor::TwoWay {
        return Err(RcError::NotTwoWay(result.flavor));
    }
    let tree = InducedTree::new(g, &result.set).ok_or(RcError::DisconnectedSet)?;
    let mut coloring = EdgeColoring::uncolored(g);
    for (i, &(p, c)) in tree.tree_edges().iter().enumerate() {
        coloring.set(g.edge_index(p, c).unwrap(), i, Provenance::Tree);
    }
    Ok(coloring)
}

#[derive(Debug, Clone)]
struct Descent {
    mask: u64,
    /// From the source to a vertex of `D`.
    walk: Vec<usize>,
}

/// Routes pairs as descent + tree path + descent. Tree colors are
/// `0..tree_colors`; everything else is tracked as a 64-bit mask.
struct Router<'a> {
    g: &'a Graph,
    in_d: Vec<bool>,
    tree: InducedTree,
    tree_colors: usize,
}

fn repeated_colors(g: &Graph, colors: &[usize], path: &[usize]) -> usize {
    let mut seen = HashSet::new();
    path.windows(2).filter(|w| !seen.insert(colors[g.edge_index(w[0], w[1]).unwrap()])).count()
}

impl<'a> Router<'a> {
    fn new(g: &'a Graph, result: &DominationResult, tree_colors: usize) -> Result<Self, RcError> {
        let tree = InducedTree::new(g, &result.set).ok_or(RcError::DisconnectedSet)?;
        let mut in_d = vec![false; g.n()];
        for &v in &result.set {
            in_d[v] = true;
        }
        Ok(Router { g, in_d, tree, tree_colors })
    }

    fn bit(&self, color: usize) -> Option<u64> {
        color.checked_sub(self.tree_colors).filter(|&b| b < 64).map(|b| 1u64 << b)
    }

    fn descents_from(&self, colors: &[usize], x: usize) -> Vec<Descent> {
        if self.in_d[x] {
            return vec![Descent { mask: 0, walk: vec![x] }];
        }
        let mut found: Vec<Descent> = Vec::new();
        let mut masks = HashSet::new();
        let mut seen = HashSet::from([(x, 0u64)]);
        let mut frontier = vec![Descent { mask: 0, walk: vec![x] }];
        for _ in 0..DESCENT_DEPTH {
            let mut next = Vec::new();
            for d in &frontier {
                let v = *d.walk.last().unwrap();
                for &w in self.g.neighbors(v) {
                    if d.walk.contains(&w) {
                        continue;
                    }
                    let Some(bit) = self.bit(colors[self.g.edge_index(v, w).unwrap()]) else { continue };
                    if d.mask & bit != 0 {
                        continue;
                    }
                    let mask = d.mask | bit;
                    let mut walk = d.walk.clone();
                    walk.push(w);
                    if self.in_d[w] {
                        if masks.insert(mask) {
                            found.push(Descent { mask, walk });
                        }
                    } else if seen.insert((w, mask)) {
                        next.push(Descent { mask, walk });
                    }
                }
            }
            frontier = next;
        }
        found.sort_by_key(|d| (d.mask.count_ones(), d.walk.len()));
        let mut kept: Vec<Descent> = Vec::new();
        for d in found {
            if kept.len() < MAX_DESCENTS && !kept.iter().any(|k| k.mask & !d.mask == 0) {
                kept.push(d);
            }
        }
        kept
    }

    fn all_descents(&self, colors: &[usize]) -> Vec<Vec<Descent>> {
        (0..self.g.n()).map(|x| self.descents_from(colors, x)).collect()
    }

    fn join(&self, a: &Descent, b: &Descent) -> Vec<usize> {
        let mut walk = a.walk.clone();
        let (ea, eb) = (*a.walk.last().unwrap(), *b.walk.last().unwrap());
        walk.extend_from_slice(&self.tree.path(ea, eb)[1..]);
        walk.extend(b.walk.iter().rev().skip(1));
        PathWitness::from_walk(&walk).vertices().to_vec()
    }

    fn is_rainbow(&self, colors: &[usize], path: &[usize]) -> bool {
        repeated_colors(self.g, colors, path) == 0
    }

    fn route(&self, colors: &[usize], desc: &[Vec<Descent>], u: usize, v: usize) -> Option<Vec<usize>> {
        let g = self.g;
        if g.has_edge(u, v) {
            return Some(vec![u, v]);
        }
        if self.in_d[u] && self.in_d[v] {
            return Some(self.tree.path(u, v));
        }
        for &z in g.neighbors(u) {
            if g.has_edge(z, v) && self.is_rainbow(colors, &[u, z, v]) {
                return Some(vec![u, z, v]);
            }
        }
        for d in &desc[u] {
            if let Some(i) = d.walk.iter().position(|&w| w == v) {
                return Some(d.walk[..=i].to_vec());
            }
        }
        for d in &desc[v] {
            if let Some(i) = d.walk.iter().position(|&w| w == u) {
                return Some(d.walk[..=i].iter().rev().copied().collect());
            }
        }
        for a in &desc[u] {
            for b in &desc[v] {
                if a.mask & b.mask == 0 {
                    return Some(self.join(a, b));
                }
            }
        }
        // Overlapping descents may still give a rainbow path after loop erasure.
        for a in &desc[u] {
            for b in &desc[v] {
                if a.walk.iter().any(|w| b.walk.contains(w)) {
                    let path = self.join(a, b);
                    if self.is_rainbow(colors, &path) {
                        return Some(path);
                    }
                }
            }
        }
        None
    }

    /// Path for `(u, v)` with the fewest repeated colors among the routes tried.
    fn candidate(&self, colors: &[usize], desc: &[Vec<Descent>], u: usize, v: usize) -> Vec<usize> {
        let mut combos: Vec<(u32, &Descent, &Descent)> = desc[u]
            .iter()
            .flat_map(|a| desc[v].iter().map(move |b| ((a.mask & b.mask).count_ones(), a, b)))
            .collect();
        combos.sort_by_key(|c| c.0);
        let shortest = self.g.shortest_path(u, v).expect("graph is connected");
        combos
            .into_iter()
            .take(32)
            .map(|(_, a, b)| self.join(a, b))
            .chain(std::iter::once(shortest))
            .min_by_key(|p| (repeated_colors(self.g, colors, p), p.len()))
            .unwrap()
    }
}

struct Evaluation {
    failing: Vec<(usize, usize)>,
    witnesses: Vec<EdgeWitness>,
}

struct Extender<'a> {
    g: &'a Graph,
    router: Router<'a>,
    colors: Vec<usize>,
    provenance: Vec<Provenance>,
    /// Paths found during repair, rechecked before falling back to search.
    pinned: HashMap<(usize, usize), Vec<usize>>,
}

impl Extender<'_> {
    fn evaluate(&self) -> Evaluation {
        let g = self.g;
        let desc = self.router.all_descents(&self.colors);
        let coloring = EdgeColoring::from_colors(self.colors.clone(), Provenance::Extension);
        let mut failing = Vec::new();
        let mut witnesses = Vec::new();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if let Some(path) = self.router.route(&self.colors, &desc, u, v) {
                    witnesses.push(EdgeWitness { u, v, path, searched: false });
                    continue;
                }
                if let Some(path) = self.pinned.get(&(u, v)).filter(|p| self.router.is_rainbow(&self.colors, p)) {
                    witnesses.push(EdgeWitness { u, v, path: path.clone(), searched: true });
                    continue;
                }
                match rainbow_edge_path(g, &coloring, u, v, Budget::states(SEARCH_STATES)) {
                    PairVerdict::Rainbow { path } => witnesses.push(EdgeWitness { u, v, path, searched: true }),
                    _ => failing.push((u, v)),
                }
            }
        }
        Evaluation { failing, witnesses }
    }

    /// Edge on `path` carrying a repeated color; tree edges are never chosen.
    fn edge_to_recolor(&self, path: &[usize]) -> Option<usize> {
        let mut first: HashMap<usize, usize> = HashMap::new();
        for w in path.windows(2) {
            let e = self.g.edge_index(w[0], w[1]).unwrap();
            match first.get(&self.colors[e]) {
                Some(&earlier) if self.provenance[e] == Provenance::Tree => return Some(earlier),
                Some(_) => return Some(e),
                None => {
                    first.insert(self.colors[e], e);
                }
            }
        }
        None
    }

    fn repair(&mut self, next_color: &mut usize, stats: &mut ExtensionStats) -> Result<Evaluation, RcError> {
        let limit = self.g.n() * self.g.n();
        let mut repair_palette: Vec<usize> = Vec::new();
        let mut eval = self.evaluate();
        while let Some(&(u, v)) = eval.failing.first() {
            if stats.recolorings >= limit {
                return Err(RcError::RepairLimit(stats.recolorings));
            }
            let desc = self.router.all_descents(&self.colors);
            let path = self.router.candidate(&self.colors, &desc, u, v);
            let Some(e) = self.edge_to_recolor(&path) else {
                // Rainbow already; the router and the capped search both missed it.
                self.pinned.insert((u, v), path);
                eval = self.evaluate();
                continue;
            };
            let on_path: HashSet<usize> =
                path.windows(2).map(|w| self.colors[self.g.edge_index(w[0], w[1]).unwrap()]).collect();
            let before: HashSet<(usize, usize)> = eval.failing.iter().copied().collect();
            let old = self.colors[e];
            let mut accepted = None;
            for &r in repair_palette.iter().filter(|r| !on_path.contains(r)).take(REUSE_TRIES) {
                self.colors[e] = r;
                let trial = self.evaluate();
                if trial.failing.len() < before.len() && trial.failing.iter().all(|p| before.contains(p)) {
                    accepted = Some(trial);
                    break;
                }
                self.colors[e] = old;
            }
            eval = match accepted {
                Some(trial) => trial,
                None => {
                    // A color used nowhere else never breaks an existing rainbow path.
                    self.colors[e] = *next_color;
                    repair_palette.push(*next_color);
                    *next_color += 1;
                    self.pinned.insert((u, v), path);
                    self.evaluate()
                }
            };
            self.provenance[e] = Provenance::Repair;
            stats.recolorings += 1;
        }
        Ok(eval)
    }
}

fn extend_inner(
    g: &Graph,
    result: &DominationResult,
    partial: &EdgeColoring,
) -> Result<(EdgeColoring, ExtensionStats, Vec<EdgeWitness>), RcError> {
    if result.flavor != Flavor::TwoWay {
        return Err(RcError::NotTwoWay(result.flavor));
    }
    let tree_colors = partial.color_bound();
    let router = Router::new(g, result, tree_colors)?;
    let fresh = |i: usize| tree_colors + i;
    let mut coloring = partial.clone();
    let decomposition = &result.decomposition;
    let in_layer = |v: usize, k: usize| decomposition.distance(v) == Some(k);

    for &x in result.n1() {
        let foot = *g.neighbors(x).iter().find(|&&w| in_layer(w, 0)).expect("N1 vertex has a D-neighbor");
        let e = g.edge_index(x, foot).unwrap();
        if coloring.color(e).is_none() {
            coloring.set(e, fresh(x % 2), Provenance::Extension);
        }
    }
    for &y in result.n2() {
        let up = g.neighbors(y).iter().filter(|&&a| in_layer(a, 1));
        for (slot, &a) in up.take(2).enumerate() {
            let e = g.edge_index(y, a).unwrap();
            if coloring.color(e).is_none() {
                coloring.set(e, fresh(2 + slot), Provenance::Extension);
            }
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if coloring.color(e).is_some() {
            continue;
        }
        let color = match (in_layer(u, 0), in_layer(v, 0)) {
            (true, true) => 0,
            (true, false) | (false, true) => fresh(4),
            (false, false) => fresh(5),
        };
        coloring.set(e, color, Provenance::Extension);
    }

    let mut ext = Extender {
        g,
        router,
        colors: coloring.colors().iter().map(|c| c.unwrap()).collect(),
        provenance: (0..g.m()).map(|e| coloring.provenance(e).unwrap()).collect(),
        pinned: HashMap::new(),
    };
    let mut stats = ExtensionStats { tree_colors, ..Default::default() };
    let mut next_color = fresh(6);
    let eval = ext.repair(&mut next_color, &mut stats)?;

    let mut out = EdgeColoring::uncolored(g);
    for e in 0..g.m() {
        out.set(e, ext.colors[e], ext.provenance[e]);
    }
    let used: HashSet<usize> = ext.colors.iter().copied().collect();
    stats.fresh_colors = (0..6).filter(|&i| used.contains(&fresh(i))).count();
    stats.repair_colors = used.iter().filter(|&&c| c >= fresh(6)).count();
    stats.searched_pairs = eval.witnesses.iter().filter(|w| w.searched).count();
    out.compact();
    Ok((out, stats, eval.witnesses))
}

/// Colors every edge left uncolored by `partial` and repairs until every pair
/// has a rainbow path.
pub fn extend_two_way(
    g: &Graph,
    result: &DominationResult,
    partial: &EdgeColoring,
) -> Result<(EdgeColoring, ExtensionStats), RcError> {
    extend_inner(g, result, partial).map(|(c, s, _)| (c, s))
}

/// Distinct colors on a BFS spanning tree of `g`; other edges reuse color 0.
pub fn spanning_tree_coloring(g: &Graph) -> (EdgeColoring, Vec<EdgeWitness>) {
    let all: Vec<usize> = (0..g.n()).collect();
    let mut coloring = EdgeColoring::uncolored(g);
    let Some(tree) = InducedTree::new(g, &all) else { return (coloring, Vec::new()) };
    for (i, &(p, c)) in tree.tree_edges().iter().enumerate() {
        coloring.set(g.edge_index(p, c).unwrap(), i, Provenance::Tree);
    }
    for e in 0..g.m() {
        if coloring.color(e).is_none() {
            coloring.set(e, 0, Provenance::Extension);
        }
    }
    let mut witnesses = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let path = if g.has_edge(u, v) { vec![u, v] } else { tree.path(u, v) };
            witnesses.push(EdgeWitness { u, v, path, searched: false });
        }
    }
    (coloring, witnesses)
}

/// Full pipeline: sigma_k, two-step then two-way domination, tree coloring,
/// extension and repair. Falls back to a spanning-tree coloring when
/// `sigma_k <= 2k`.
pub fn rc_pipeline(g: &Graph, k: usize) -> Result<RcCertificate, RcError> {
    if !g.is_connected() {
        return Err(RcError::Disconnected);
    }
    let sigma = sigma_k(g, k)?;
    let n = g.n();
    let (coloring, witnesses, domination, stats, fallback) = if sigma.value <= 2 * k {
        let (c, w) = spanning_tree_coloring(g);
        let stats = ExtensionStats { tree_colors: c.palette_size(), ..Default::default() };
        (c, w, None, stats, true)
    } else {
        let base = build_two_step(g, k, &sigma)?;
        let two_way = upgrade_two_way(g, k, &sigma, &base)?;
        let partial = color_dominating_tree(g, &two_way)?;
        let (c, stats, w) = extend_inner(g, &two_way, &partial)?;
        (c, w, Some(two_way), stats, false)
    };
    for w in &witnesses {
        if !is_rainbow_edge_path(g, &coloring, &PathWitness::new(w.path.clone())) {
            return Err(RcError::BadWitness(w.u, w.v));
        }
    }
    Ok(RcCertificate {
        n,
        k,
        achieved: coloring.palette_size(),
        bound: crate::bounds::rc_sigma_bound(n, k, sigma.value),
        bound_loose: crate::bounds::rc_sigma_bound_loose(n, k, sigma.value),
        budget: crate::bounds::rc_color_budget(n, k, sigma.value),
        sigma,
        domination,
        coloring,
        fallback,
        stats,
        witnesses,
    })
}
