//! Exact `rc` and `rvc` on tiny graphs by backtracking.
//!
//! Every simple path of every pair is listed up front, as the set of edges
//! (for `rc`) or internal vertices (for `rvc`) it uses. A pair is alive while
//! at least one of its paths has no repeated color among the items colored so
//! far, and the search backtracks as soon as some pair dies.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{EdgeColoring, Provenance, VertexColoring};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_m: usize,
    /// Wall-clock cap for a single candidate palette size.
    pub time_per_size: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 8, max_m: 14, time_per_size: Duration::from_secs(60) }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph with n={n}, m={m} exceeds the limits n<={max_n}, m<={max_m}")]
    TooLarge { n: usize, m: usize, max_n: usize, max_m: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("search for {size} colors hit the time cap")]
    Timeout { size: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactResult<C> {
    pub value: usize,
    #[serde(skip)]
    pub coloring: C,
    pub nodes: u64,
}

fn check(g: &Graph, limits: &Limits) -> Result<(), OracleError> {
    if g.n() > limits.max_n || g.m() > limits.max_m {
        return Err(OracleError::TooLarge { n: g.n(), m: g.m(), max_n: limits.max_n, max_m: limits.max_m });
    }
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    Ok(())
}

/// Simple `u`-`v` paths as vertex sequences.
fn simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], v: usize, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == v {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(x) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                go(g, path, on, v, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut on = vec![false; g.n()];
    on[u] = true;
    let mut out = Vec::new();
    go(g, &mut vec![u], &mut on, v, &mut out);
    out
}

/// Per pair, item sets of its paths with supersets of other paths removed.
fn minimal_item_sets(pairs: Vec<Vec<Vec<usize>>>) -> Vec<Vec<Vec<usize>>> {
    pairs
        .into_iter()
        .map(|mut sets| {
            for s in &mut sets {
                s.sort_unstable();
                s.dedup();
            }
            sets.sort_by_key(Vec::len);
            sets.dedup();
            let mut kept: Vec<Vec<usize>> = Vec::new();
            for s in sets {
                if !kept.iter().any(|k| k.iter().all(|x| s.binary_search(x).is_ok())) {
                    kept.push(s);
                }
            }
            kept
        })
        .collect()
}

struct Search {
    colors: usize,
    items: Vec<usize>,
    pair_of: Vec<usize>,
    item_paths: Vec<Vec<usize>>,
    /// `count[path * colors + c]`: items of the path currently colored `c`.
    count: Vec<u8>,
    conflicts: Vec<u32>,
    alive: Vec<u32>,
    assignment: Vec<Option<usize>>,
    nodes: u64,
    deadline: Instant,
    timed_out: bool,
}

impl Search {
    /// `None` when some pair has no path short enough for `colors`.
    fn new(
        universe: usize,
        pairs: &[Vec<Vec<usize>>],
        colors: usize,
        deadline: Instant,
    ) -> Option<Self> {
        let mut pair_of = Vec::new();
        let mut item_paths = vec![Vec::new(); universe];
        let mut alive = Vec::new();
        for (p, sets) in pairs.iter().enumerate() {
            let usable: Vec<&Vec<usize>> = sets.iter().filter(|s| s.len() <= colors).collect();
            if usable.is_empty() {
                return None;
            }
            alive.push(usable.len() as u32);
            for s in usable {
                let id = pair_of.len();
                pair_of.push(p);
                for &x in s {
                    item_paths[x].push(id);
                }
            }
        }
        let items: Vec<usize> = (0..universe).filter(|&x| !item_paths[x].is_empty()).collect();
        Some(Search {
            colors,
            items,
            count: vec![0; pair_of.len() * colors],
            conflicts: vec![0; pair_of.len()],
            pair_of,
            item_paths,
            alive,
            assignment: vec![None; universe],
            nodes: 0,
            deadline,
            timed_out: false,
        })
    }

    /// Colors `x` with `c`; returns false if some pair lost its last path.
    fn assign(&mut self, x: usize, c: usize) -> bool {
        let mut ok = true;
        for &p in &self.item_paths[x] {
            let slot = &mut self.count[p * self.colors + c];
            if *slot > 0 {
                self.conflicts[p] += 1;
                if self.conflicts[p] == 1 {
                    let a = &mut self.alive[self.pair_of[p]];
                    *a -= 1;
                    ok &= *a > 0;
                }
            }
            *slot += 1;
        }
        self.assignment[x] = Some(c);
        ok
    }

    fn unassign(&mut self, x: usize, c: usize) {
        for &p in &self.item_paths[x] {
            let slot = &mut self.count[p * self.colors + c];
            *slot -= 1;
            if *slot > 0 {
                self.conflicts[p] -= 1;
                if self.conflicts[p] == 0 {
                    self.alive[self.pair_of[p]] += 1;
                }
            }
        }
        self.assignment[x] = None;
    }

    /// Colors `items[i..]`; `used` colors have appeared so far.
    fn run(&mut self, i: usize, used: usize) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && Instant::now() > self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        if i == self.items.len() {
            return true;
        }
        let x = self.items[i];
        // A color first appears only after every smaller one has.
        for c in 0..(used + 1).min(self.colors) {
            let ok = self.assign(x, c);
            if ok && self.run(i + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(x, c);
        }
        false
    }
}

/// Smallest `c >= floor` with a coloring that keeps every pair alive.
fn minimize(
    universe: usize,
    pairs: &[Vec<Vec<usize>>],
    floor: usize,
    limits: &Limits,
) -> Result<(usize, Vec<Option<usize>>, u64), OracleError> {
    let mut nodes = 0;
    for c in floor.max(1)..=universe.max(1) {
        let deadline = Instant::now() + limits.time_per_size;
        let Some(mut search) = Search::new(universe, pairs, c, deadline) else { continue };
        let found = search.run(0, 0);
        nodes += search.nodes;
        if search.timed_out {
            return Err(OracleError::Timeout { size: c });
        }
        if found {
            return Ok((c, search.assignment, nodes));
        }
    }
    unreachable!("distinct colors on every item always work")
}

fn pairs_of(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..g.n()).flat_map(move |u| (u + 1..g.n()).map(move |v| (u, v)))
}

pub fn rc_exact(g: &Graph, limits: &Limits) -> Result<ExactResult<EdgeColoring>, OracleError> {
    check(g, limits)?;
    if g.m() == 0 {
        return Ok(ExactResult { value: 0, coloring: EdgeColoring::uncolored(g), nodes: 0 });
    }
    let pairs = minimal_item_sets(
        pairs_of(g)
            .map(|(u, v)| {
                simple_paths(g, u, v)
                    .iter()
                    .map(|p| p.windows(2).map(|w| g.edge_index(w[0], w[1]).unwrap()).collect())
                    .collect()
            })
            .collect(),
    );
    let floor = g.diameter().finite().unwrap_or(0);
    let (value, assignment, nodes) = minimize(g.m(), &pairs, floor, limits)?;
    let colors = assignment.into_iter().map(|c| c.expect("every edge is on some path")).collect();
    Ok(ExactResult { value, coloring: EdgeColoring::from_colors(colors, Provenance::Search), nodes })
}

pub fn rvc_exact(g: &Graph, limits: &Limits) -> Result<ExactResult<VertexColoring>, OracleError> {
    check(g, limits)?;
    let pairs = minimal_item_sets(
        pairs_of(g)
            .map(|(u, v)| simple_paths(g, u, v).iter().map(|p| p[1..p.len() - 1].to_vec()).collect())
            .collect(),
    );
    if pairs.iter().all(|sets| sets.iter().any(Vec::is_empty)) {
        return Ok(ExactResult { value: 0, coloring: VertexColoring::from_colors(vec![None; g.n()]), nodes: 0 });
    }
    let floor = g.diameter().finite().unwrap_or(1).saturating_sub(1);
    let (value, colors, nodes) = minimize(g.n(), &pairs, floor, limits)?;
    Ok(ExactResult { value, coloring: VertexColoring::from_colors(colors), nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_rainbow_edge, verify_rainbow_vertex, Budget};

    fn rc(g: &Graph) -> usize {
        let r = rc_exact(g, &Limits::default()).unwrap();
        assert!(verify_rainbow_edge(g, &r.coloring, Budget::default()).all_rainbow());
        assert_eq!(r.coloring.palette_size(), r.value);
        r.value
    }

    fn rvc(g: &Graph) -> usize {
        let r = rvc_exact(g, &Limits::default()).unwrap();
        assert!(verify_rainbow_vertex(g, &r.coloring, Budget::default()).all_rainbow());
        r.value
    }

    #[test]
    fn paths_need_all_distinct() {
        for n in 2..=7 {
            assert_eq!(rc(&Graph::path(n)), n - 1);
        }
    }

    #[test]
    fn small_rc_values() {
        assert_eq!(rc(&Graph::complete(3)), 1);
        assert_eq!(rc(&Graph::cycle(5)), 3);
        assert_eq!(rc(&Graph::cycle(4)), 2);
    }

    #[test]
    fn small_rvc_values() {
        assert_eq!(rvc(&Graph::complete(4)), 0);
        assert_eq!(rvc(&Graph::path(4)), 2);
        let c5 = rvc(&Graph::cycle(5));
        assert!((1..=3).contains(&c5));
        assert_eq!(rvc(&Graph::star(4)), 1);
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(rc_exact(&Graph::complete(6), &Limits::default()), Err(OracleError::TooLarge { .. })));
        assert_eq!(rc_exact(&Graph::empty(3), &Limits::default()).unwrap_err(), OracleError::Disconnected);
    }
}
