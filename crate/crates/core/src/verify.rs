//! Exhaustive rainbow-connectivity checks and independent witness checkers.
//!
//! The searches run over states `(vertex, colors used so far)`. Every rainbow
//! path is a rainbow walk, so exhausting the state space without reaching the
//! target proves that no rainbow path exists.

use std::collections::{HashSet, VecDeque};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bits::BitSet;
use crate::coloring::{EdgeColoring, VertexColoring};
use crate::graph::{Graph, PathWitness};

/// Limits for one source vertex's search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_states: Option<u64>,
    pub time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_states: None, time: Some(Duration::from_secs(2)) }
    }
}

impl Budget {
    pub fn states(max_states: u64) -> Self {
        Budget { max_states: Some(max_states), time: None }
    }

    pub fn unlimited() -> Self {
        Budget { max_states: None, time: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PairVerdict {
    Rainbow { path: Vec<usize> },
    NoRainbowPath,
    Unknown,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairResult {
    pub u: usize,
    pub v: usize,
    #[serde(flatten)]
    pub verdict: PairVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub pairs: Vec<PairResult>,
}

impl Verdict {
    pub fn all_rainbow(&self) -> bool {
        self.pairs.iter().all(|p| matches!(p.verdict, PairVerdict::Rainbow { .. }))
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairResult> {
        self.pairs.iter().filter(|p| p.verdict == PairVerdict::NoRainbowPath)
    }

    pub fn unknown(&self) -> impl Iterator<Item = &PairResult> {
        self.pairs.iter().filter(|p| p.verdict == PairVerdict::Unknown)
    }
}

/// Edges of the path are present and carry pairwise distinct colors.
pub fn is_rainbow_edge_path(g: &Graph, coloring: &EdgeColoring, path: &PathWitness) -> bool {
    if path.validate(g).is_err() {
        return false;
    }
    let mut seen = HashSet::new();
    path.edges().all(|(u, v)| match coloring.color_between(g, u, v) {
        Some(c) => seen.insert(c),
        None => false,
    })
}

/// Internal vertices of the path are colored with pairwise distinct colors.
pub fn is_rainbow_vertex_path(g: &Graph, coloring: &VertexColoring, path: &PathWitness) -> bool {
    if path.validate(g).is_err() {
        return false;
    }
    let mut seen = HashSet::new();
    path.internal().iter().all(|&x| match coloring.color(x) {
        Some(c) => seen.insert(c),
        None => false,
    })
}

/// Search space shared by the edge and vertex variants.
trait Moves {
    fn palette(&self) -> usize;
    /// Color consumed when the walk steps `from -> to`, `Err(())` if the step
    /// is not allowed. `Ok(None)` consumes nothing.
    fn step(&self, source: usize, from: usize, to: usize) -> Result<Option<usize>, ()>;
}

struct EdgeMoves<'a> {
    g: &'a Graph,
    coloring: &'a EdgeColoring,
}

impl Moves for EdgeMoves<'_> {
    fn palette(&self) -> usize {
        self.coloring.color_bound()
    }

    fn step(&self, _: usize, from: usize, to: usize) -> Result<Option<usize>, ()> {
        self.coloring.color_between(self.g, from, to).map(Some).ok_or(())
    }
}

struct VertexMoves<'a> {
    coloring: &'a VertexColoring,
}

impl Moves for VertexMoves<'_> {
    fn palette(&self) -> usize {
        self.coloring.colors.iter().flatten().map(|c| c + 1).max().unwrap_or(0)
    }

    fn step(&self, source: usize, from: usize, to: usize) -> Result<Option<usize>, ()> {
        if to == source {
            return Err(());
        }
        if from == source {
            return Ok(None);
        }
        self.coloring.color(from).map(Some).ok_or(())
    }
}

/// Witness walk per target, `None` where no rainbow walk was found.
type Walks = Vec<Option<Vec<usize>>>;

/// Per-source search; returns a witness walk (or `None`) for each target.
/// `Err(found)` when the budget ran out, with whatever was found so far.
fn search_from<M: Moves>(
    g: &Graph,
    moves: &M,
    source: usize,
    targets: &[usize],
    budget: Budget,
) -> Result<Walks, Walks> {
    let start = Instant::now();
    let palette = moves.palette().max(1);
    let mut want = vec![usize::MAX; g.n()];
    for (i, &t) in targets.iter().enumerate() {
        want[t] = i;
    }
    let mut found: Vec<Option<Vec<usize>>> = vec![None; targets.len()];
    let mut remaining = targets.len();
    // (vertex, parent state)
    let mut states: Vec<(usize, usize)> = vec![(source, usize::MAX)];
    let mut masks: Vec<BitSet> = vec![BitSet::new(palette)];
    let mut seen: HashSet<(usize, BitSet)> = HashSet::from([(source, BitSet::new(palette))]);
    let mut queue = VecDeque::from([0usize]);
    let walk_to = |states: &[(usize, usize)], mut s: usize| {
        let mut walk = Vec::new();
        while s != usize::MAX {
            walk.push(states[s].0);
            s = states[s].1;
        }
        walk.reverse();
        walk
    };
    while let Some(s) = queue.pop_front() {
        if remaining == 0 {
            break;
        }
        if budget.max_states.is_some_and(|cap| states.len() as u64 > cap)
            || (states.len().is_multiple_of(1024) && budget.time.is_some_and(|t| start.elapsed() > t))
        {
            return Err(found);
        }
        let v = states[s].0;
        for &w in g.neighbors(v) {
            let Ok(color) = moves.step(source, v, w) else { continue };
            let mut mask = masks[s].clone();
            if let Some(c) = color {
                if mask.contains(c) {
                    continue;
                }
                mask.insert(c);
            }
            if want[w] != usize::MAX && found[want[w]].is_none() {
                let mut walk = walk_to(&states, s);
                walk.push(w);
                found[want[w]] = Some(walk);
                remaining -= 1;
            }
            if seen.insert((w, mask.clone())) {
                states.push((w, s));
                masks.push(mask);
                queue.push_back(states.len() - 1);
            }
        }
    }
    Ok(found)
}

fn verify_all<M: Moves>(g: &Graph, moves: &M, budget: Budget, check: impl Fn(&PathWitness) -> bool) -> Verdict {
    let mut pairs = Vec::new();
    for u in 0..g.n() {
        let targets: Vec<usize> = (u + 1..g.n()).collect();
        let (found, complete) = match search_from(g, moves, u, &targets, budget) {
            Ok(f) => (f, true),
            Err(f) => (f, false),
        };
        for (i, walk) in found.into_iter().enumerate() {
            let verdict = match walk {
                Some(walk) => {
                    let path = PathWitness::from_walk(&walk);
                    debug_assert!(check(&path));
                    PairVerdict::Rainbow { path: path.vertices().to_vec() }
                }
                None if complete => PairVerdict::NoRainbowPath,
                None => PairVerdict::Unknown,
            };
            pairs.push(PairResult { u, v: targets[i], verdict });
        }
    }
    Verdict { pairs }
}

/// Checks every pair for a rainbow path under an edge coloring.
pub fn verify_rainbow_edge(g: &Graph, coloring: &EdgeColoring, budget: Budget) -> Verdict {
    let moves = EdgeMoves { g, coloring };
    verify_all(g, &moves, budget, |p| is_rainbow_edge_path(g, coloring, p))
}

/// Checks every pair for a vertex-rainbow path.
pub fn verify_rainbow_vertex(g: &Graph, coloring: &VertexColoring, budget: Budget) -> Verdict {
    verify_all(g, &VertexMoves { coloring }, budget, |p| is_rainbow_vertex_path(g, coloring, p))
}

/// Single-pair edge search, used by the repair loop.
pub fn rainbow_edge_path(
    g: &Graph,
    coloring: &EdgeColoring,
    u: usize,
    v: usize,
    budget: Budget,
) -> PairVerdict {
    match search_from(g, &EdgeMoves { g, coloring }, u, &[v], budget) {
        Ok(mut f) | Err(mut f) if f[0].is_some() => {
            PairVerdict::Rainbow { path: PathWitness::from_walk(&f.pop().unwrap().unwrap()).vertices().to_vec() }
        }
        Ok(_) => PairVerdict::NoRainbowPath,
        Err(_) => PairVerdict::Unknown,
    }
}
