//! Independent-set machinery: the degree-sum parameter `sigma_k`, bounded
//! independence tests on induced subgraphs, and the sigma-preserving sparsifier.

use serde::Serialize;
use thiserror::Error;

use crate::bits::BitSet;
use crate::graph::Graph;

/// Search-node budget above which [`sigma_k`] stops proving optimality.
pub const SIGMA_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndependenceError {
    #[error("k must be between 1 and n = {n}, got {k}")]
    BadK { k: usize, n: usize },
    #[error("sigma_{k} undefined: largest independent set found has {alpha} vertices")]
    SigmaUndefined { k: usize, alpha: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SigmaMethod {
    /// The search ran to completion: `value` is the true minimum.
    Exact,
    /// The node budget ran out: `value` is a certified upper bound.
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaReport {
    pub k: usize,
    pub value: usize,
    /// Sorted ascending.
    pub witness: Vec<usize>,
    pub method: SigmaMethod,
}

impl SigmaReport {
    /// Member of the witness with the largest degree, smallest id on ties.
    pub fn heaviest_member(&self, g: &Graph) -> usize {
        *self
            .witness
            .iter()
            .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
            .expect("witness is nonempty")
    }
}

trait Adjacency {
    fn adjacent(&self, u: usize, v: usize) -> bool;
}

impl Adjacency for Graph {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
}

struct BitAdjacency {
    rows: Vec<BitSet>,
}

impl Adjacency for BitAdjacency {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }
}

/// Pruned enumeration of independent `k`-sets by ascending degree.
struct DegreeSumSearch<'a, A> {
    adj: &'a A,
    degrees: &'a [usize],
    order: Vec<usize>,
    k: usize,
    /// Strict upper limit; only sets with a smaller sum are accepted.
    best: usize,
    best_set: Option<Vec<usize>>,
    nodes: u64,
    budget: u64,
    stop_at_first: bool,
}

impl<'a, A: Adjacency> DegreeSumSearch<'a, A> {
    fn new(adj: &'a A, degrees: &'a [usize], candidates: impl Iterator<Item = usize>, k: usize) -> Self {
        let mut order: Vec<usize> = candidates.collect();
        order.sort_by_key(|&v| (degrees[v], v));
        DegreeSumSearch {
            adj,
            degrees,
            order,
            k,
            best: usize::MAX,
            best_set: None,
            nodes: 0,
            budget: u64::MAX,
            stop_at_first: false,
        }
    }

    /// Returns false when the budget was exhausted.
    fn run(&mut self, chosen: &mut Vec<usize>, sum: usize) -> bool {
        self.descend(0, chosen, sum)
    }

    fn descend(&mut self, start: usize, chosen: &mut Vec<usize>, sum: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let need = self.k - chosen.len();
        if need == 0 {
            if sum < self.best {
                self.best = sum;
                self.best_set = Some(chosen.clone());
            }
            return true;
        }
        for idx in start..self.order.len() {
            if self.order.len() - idx < need {
                break;
            }
            let v = self.order[idx];
            let lower = sum + need * self.degrees[v];
            if lower >= self.best {
                break;
            }
            if chosen.iter().any(|&c| self.adj.adjacent(c, v)) {
                continue;
            }
            chosen.push(v);
            let finished = self.descend(idx + 1, chosen, sum + self.degrees[v]);
            chosen.pop();
            if !finished {
                return false;
            }
            if self.stop_at_first && self.best_set.is_some() {
                return true;
            }
        }
        true
    }
}

/// Minimum degree sum over independent `k`-sets, with a witness.
pub fn sigma_k(g: &Graph, k: usize) -> Result<SigmaReport, IndependenceError> {
    sigma_k_with_budget(g, k, SIGMA_NODE_BUDGET)
}

pub fn sigma_k_with_budget(g: &Graph, k: usize, budget: u64) -> Result<SigmaReport, IndependenceError> {
    if k == 0 || k > g.n() {
        return Err(IndependenceError::BadK { k, n: g.n() });
    }
    let degrees = g.degrees();
    let mut search = DegreeSumSearch::new(g, &degrees, 0..g.n(), k);
    search.budget = budget;
    // Greedy incumbent: lowest degrees first, skipping conflicts.
    let mut greedy = Vec::new();
    for &v in &search.order {
        if greedy.len() < k && greedy.iter().all(|&c| !g.has_edge(c, v)) {
            greedy.push(v);
        }
    }
    if greedy.len() == k {
        search.best = greedy.iter().map(|&v| degrees[v]).sum::<usize>() + 1;
        search.best_set = None;
    }
    let greedy_sum = (greedy.len() == k).then(|| search.best - 1);
    let complete = search.run(&mut Vec::new(), 0);
    let (value, mut witness) = match (search.best_set.take(), greedy_sum) {
        (Some(set), _) => (search.best, set),
        (None, Some(sum)) => (sum, greedy),
        (None, None) => {
            let alpha = alpha_at_least(g, &(0..g.n()).collect::<Vec<_>>(), k);
            if alpha.holds {
                let set = alpha.witness;
                (set.iter().map(|&v| degrees[v]).sum(), set)
            } else {
                return Err(IndependenceError::SigmaUndefined { k, alpha: alpha.witness.len() });
            }
        }
    };
    witness.sort_unstable();
    Ok(SigmaReport {
        k,
        value,
        witness,
        method: if complete { SigmaMethod::Exact } else { SigmaMethod::BranchAndBound },
    })
}

/// Outcome of [`alpha_at_least`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaCheck {
    pub holds: bool,
    /// An independent `k`-set when `holds`, otherwise a maximum independent set (sorted).
    pub witness: Vec<usize>,
}

/// Decides `alpha(g[set]) >= k`.
pub fn alpha_at_least(g: &Graph, set: &[usize], k: usize) -> AlphaCheck {
    let mut members: Vec<usize> = set.to_vec();
    members.sort_unstable();
    members.dedup();
    if k == 0 {
        return AlphaCheck { holds: true, witness: Vec::new() };
    }
    let local = LocalGraph::induced(g, &members);
    let mut best = Vec::new();
    let mut all = BitSet::new(members.len());
    for i in 0..members.len() {
        all.insert(i);
    }
    local.search_mis(all, &mut Vec::new(), &mut best, k);
    best.truncate(k);
    let mut witness: Vec<usize> = best.into_iter().map(|i| members[i]).collect();
    witness.sort_unstable();
    AlphaCheck { holds: witness.len() >= k, witness }
}

/// Largest-degree vertex of `set` that belongs to some independent `k`-set of `g[set]`.
///
/// Degrees are taken in `g`; ties go to the smallest id.
pub fn heaviest_in_independent_kset(g: &Graph, set: &[usize], k: usize) -> Option<usize> {
    let mut cands = set.to_vec();
    cands.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    cands.dedup();
    if !alpha_at_least(g, set, k).holds {
        return None;
    }
    cands.into_iter().find(|&v| {
        let rest: Vec<usize> = set.iter().copied().filter(|&w| w != v && !g.has_edge(v, w)).collect();
        alpha_at_least(g, &rest, k - 1).holds
    })
}

/// Induced subgraph on local ids with bit-set rows.
struct LocalGraph {
    rows: Vec<BitSet>,
}

impl LocalGraph {
    fn induced(g: &Graph, members: &[usize]) -> Self {
        let mut rows = vec![BitSet::new(members.len()); members.len()];
        for (i, &v) in members.iter().enumerate() {
            for &w in g.neighbors(v) {
                if let Ok(j) = members.binary_search(&w) {
                    rows[i].insert(j);
                }
            }
        }
        LocalGraph { rows }
    }

    /// Greedy clique cover size of `cands`, an upper bound on its independence number.
    fn clique_cover(&self, cands: &BitSet) -> usize {
        let mut left = cands.clone();
        let mut cliques = 0;
        while let Some(v) = left.first() {
            cliques += 1;
            left.remove(v);
            let mut common = self.rows[v].clone();
            common.intersect_with(&left);
            while let Some(w) = common.first() {
                left.remove(w);
                common.remove(w);
                common.intersect_with(&self.rows[w]);
            }
        }
        cliques
    }

    /// Branch and bound for a maximum independent set; stops once `target` is met.
    fn search_mis(&self, cands: BitSet, current: &mut Vec<usize>, best: &mut Vec<usize>, target: usize) -> bool {
        if current.len() > best.len() {
            *best = current.clone();
            if best.len() >= target {
                return true;
            }
        }
        if cands.is_empty() || current.len() + self.clique_cover(&cands) <= best.len() {
            return false;
        }
        // Branch on the vertex with fewest candidate neighbors.
        let v = cands
            .iter()
            .min_by_key(|&v| self.rows[v].intersection_count(&cands))
            .unwrap();
        let mut with = cands.clone();
        with.remove(v);
        with.difference_with(&self.rows[v]);
        current.push(v);
        let found = self.search_mis(with, current, best, target);
        current.pop();
        if found {
            return true;
        }
        if self.rows[v].intersection_count(&cands) == 0 {
            // An isolated candidate is always worth taking.
            return false;
        }
        let mut without = cands;
        without.remove(v);
        self.search_mis(without, current, best, target)
    }
}

/// Result of [`sparsify`].
#[derive(Debug, Clone, Serialize)]
pub struct SparsifyReport {
    #[serde(skip)]
    pub subgraph: Graph,
    pub k: usize,
    pub input_edges: usize,
    pub output_edges: usize,
    pub deleted_edges: usize,
    pub sigma_before: usize,
    pub sigma_after: usize,
    /// `n(sigma_k - k + 1) + kn / (sigma_k + k)`; the output has strictly fewer edges.
    pub edge_bound: f64,
    /// Components of the edge-minimal intermediate graph before reconnection.
    pub intermediate_components: usize,
    pub reconnection_edges: usize,
}

impl SparsifyReport {
    pub fn within_bound(&self) -> bool {
        (self.output_edges as f64) < self.edge_bound
    }
}

pub fn sparsify_edge_bound(n: usize, k: usize, sigma: usize) -> f64 {
    let (n, k, s) = (n as f64, k as f64, sigma as f64);
    n * (s - k + 1.0) + k * n / (s + k)
}

struct MutableGraph {
    adj: BitAdjacency,
    degrees: Vec<usize>,
}

impl MutableGraph {
    fn from_graph(g: &Graph) -> Self {
        let mut rows = vec![BitSet::new(g.n()); g.n()];
        for &(u, v) in g.edges() {
            rows[u].insert(v);
            rows[v].insert(u);
        }
        MutableGraph { adj: BitAdjacency { rows }, degrees: g.degrees() }
    }

    fn remove(&mut self, (u, v): (usize, usize)) {
        self.adj.rows[u].remove(v);
        self.adj.rows[v].remove(u);
        self.degrees[u] -= 1;
        self.degrees[v] -= 1;
    }

    fn insert(&mut self, (u, v): (usize, usize)) {
        self.adj.rows[u].insert(v);
        self.adj.rows[v].insert(u);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
    }

    /// Some independent `k`-set through `a` or `b` has degree sum below `limit`.
    fn lighter_set_through(&self, endpoints: [usize; 2], k: usize, limit: usize) -> bool {
        let n = self.degrees.len();
        endpoints.into_iter().any(|a| {
            let mut search = DegreeSumSearch::new(&self.adj, &self.degrees, (0..n).filter(|&v| v != a), k);
            search.best = limit;
            search.stop_at_first = true;
            search.run(&mut vec![a], self.degrees[a]);
            search.best_set.is_some()
        })
    }

    fn is_connected(&self) -> bool {
        let n = self.degrees.len();
        if n <= 1 {
            return true;
        }
        let mut seen = BitSet::new(n);
        seen.insert(0);
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for w in self.adj.rows[u].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Connected spanning subgraph with the same `sigma_k` and few edges.
///
/// Edges are deleted greedily (ascending by smaller endpoint degree, then
/// lexicographically) whenever `sigma_k` survives; deleted edges are then
/// re-added in deletion order where they join two components; a final pass
/// drops any edge whose removal keeps both connectivity and `sigma_k`.
pub fn sparsify(g: &Graph, k: usize) -> Result<SparsifyReport, IndependenceError> {
    if !g.is_connected() {
        return Err(IndependenceError::Disconnected);
    }
    let sigma = sigma_k(g, k)?.value;
    let mut order: Vec<(usize, usize)> = g.edges().to_vec();
    order.sort_by_key(|&(u, v)| (g.degree(u).min(g.degree(v)), u, v));

    let mut h = MutableGraph::from_graph(g);
    let mut deleted = Vec::new();
    for &e in &order {
        h.remove(e);
        if h.lighter_set_through([e.0, e.1], k, sigma) {
            h.insert(e);
        } else {
            deleted.push(e);
        }
    }

    let mut parent: Vec<usize> = (0..g.n()).collect();
    for u in 0..g.n() {
        for v in h.adj.rows[u].iter().filter(|&v| v > u).collect::<Vec<_>>() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    let intermediate_components = (0..g.n()).filter(|&v| find(&mut parent, v) == v).count();
    let mut reconnection_edges = 0;
    for &e in &deleted {
        let (a, b) = (find(&mut parent, e.0), find(&mut parent, e.1));
        if a != b {
            parent[a] = b;
            h.insert(e);
            reconnection_edges += 1;
        }
    }

    for &e in &order {
        if !h.adj.rows[e.0].contains(e.1) {
            continue;
        }
        h.remove(e);
        if !h.is_connected() || h.lighter_set_through([e.0, e.1], k, sigma) {
            h.insert(e);
        }
    }

    let kept: Vec<(usize, usize)> = order.iter().copied().filter(|&(u, v)| h.adj.rows[u].contains(v)).collect();
    let subgraph = Graph::new(g.n(), kept).expect("subset of a simple graph");
    let sigma_after = sigma_k(&subgraph, k)?.value;
    Ok(SparsifyReport {
        k,
        input_edges: g.m(),
        output_edges: subgraph.m(),
        deleted_edges: g.m() - subgraph.m(),
        sigma_before: sigma,
        sigma_after,
        edge_bound: sparsify_edge_bound(g.n(), k, sigma),
        intermediate_components,
        reconnection_edges,
        subgraph,
    })
}
