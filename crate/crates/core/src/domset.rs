//! Connected two-step dominating sets: the plain construction, the two-way
//! upgrade and the `s`-strong variants, each with a size-bound certificate and a
//! replayable construction trace.
//!
//! All constructions share one pattern. A seed (the heaviest member of a
//! `sigma_k` witness) is grown along deterministic shortest paths until every
//! vertex is within distance two; afterwards "deficient" vertices of `N^2(D)`,
//! those with too few neighbors in `N^1(D)`, are absorbed together with their
//! parent in `N^1(D)` until none remain.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, LayerDecomposition};
use crate::independence::{alpha_at_least, heaviest_in_independent_kset, SigmaReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DomError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("sigma_k = {sigma} is below the required {required}")]
    SigmaTooSmall { sigma: usize, required: usize },
    #[error("sigma report is for k = {found}, expected k = {expected}")]
    SigmaMismatch { expected: usize, found: usize },
    #[error("{count} pendant vertices in N^1(D), at most {limit} allowed")]
    TooManyPendants { count: usize, limit: usize },
    #[error("construction did not reach a fixpoint within {0} iterations")]
    NonTermination(usize),
    #[error("|D| = {size} exceeds the size bound {bound:.6}")]
    SizeBoundExceeded { size: usize, bound: f64 },
    #[error("base set must come from the plain two-step construction")]
    WrongBase,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which strength target a strong set is built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrongRegime {
    /// `ceil(sigma / 2k)`-strong.
    HalfK,
    /// `ceil(sigma / 1.9k)`-strong.
    NineteenTenthsK,
}

impl StrongRegime {
    pub fn strength(self, sigma: usize, k: usize) -> usize {
        match self {
            StrongRegime::HalfK => sigma.div_ceil(2 * k),
            StrongRegime::NineteenTenthsK => (10 * sigma).div_ceil(19 * k),
        }
    }

    /// Guaranteed shrinkage of `N^2(D)` for one absorption from an independent family.
    pub fn absorption_gain(self, sigma: usize, k: usize) -> usize {
        match self {
            StrongRegime::HalfK => sigma / (2 * k) + 2,
            StrongRegime::NineteenTenthsK => 9 * sigma / (19 * k) + 2,
        }
    }

    /// `(asserted, alternative)` size bounds. The asserted one is the looser.
    pub fn size_bounds(self, n: usize, k: usize, sigma: usize) -> (f64, Option<f64>) {
        let (n, k, s) = (n as f64, k as f64, sigma as f64);
        match self {
            StrongRegime::HalfK => (4.0 * k * (n - 1.0) / (s + k) + 5.0 * k - 6.0, None),
            StrongRegime::NineteenTenthsK => {
                let header = 38.0 * k * (n - 1.0) / (9.0 * (s + k)) + 5.0 * k - 6.0;
                let recap = 38.0 * k * (n - 1.0) / (9.0 * (s + 4.0 * k)) + 5.0 * k - 6.0;
                (header.max(recap), Some(header.min(recap)))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Flavor {
    TwoStep,
    TwoWay,
    Strong { strength: usize, regime: StrongRegime },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepReason {
    Seed,
    /// Heaviest member of an independent k-set in `N^3(D)`, with its path.
    IndependentFamily,
    /// `N^3(D)` has no independent k-set but vertices lie beyond it.
    FrontierAdvance,
    /// A member of a maximum independent set of the residual `N^3(D)`.
    ResidualAttach,
    PendantMove,
    /// Heaviest member of an independent k-set of deficient `N^2(D)` vertices.
    DeficientFamily,
    /// Any remaining deficient vertex once no such family exists.
    DeficientResidual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub added: Vec<usize>,
    pub reason: StepReason,
}

#[derive(Debug, Clone, Serialize)]
pub struct DominationResult {
    /// Sorted member list.
    pub set: Vec<usize>,
    #[serde(skip)]
    pub decomposition: LayerDecomposition,
    /// Minimum of `e(v, N^1(D))` over `v` in `N^2(D)`; `None` when `N^2(D)` is empty.
    pub strength: Option<usize>,
    pub flavor: Flavor,
    pub k: usize,
    pub sigma: usize,
    pub size_bound: f64,
    /// The other published form of the bound, reported but not asserted.
    pub alt_size_bound: Option<f64>,
    pub trace: Vec<TraceStep>,
}

impl DominationResult {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.set.binary_search(&v).is_ok()
    }

    pub fn n1(&self) -> &[usize] {
        self.decomposition.layer(1)
    }

    pub fn n2(&self) -> &[usize] {
        self.decomposition.layer(2)
    }
}

/// `3k(n - |N^2(D)| - 1)/(sigma + k) + 3k - 5`.
pub fn two_step_bound(n: usize, n2: usize, k: usize, sigma: usize) -> f64 {
    let (k, s) = (k as f64, sigma as f64);
    3.0 * k * (n as f64 - n2 as f64 - 1.0) / (s + k) + 3.0 * k - 5.0
}

/// `(asserted, statement)` bounds for the two-way set: the proof's
/// `3k(n-1)/(sigma+k) + 6k - 8` and the statement's `3k(n-2)/(sigma+k) + 6k - 9`.
pub fn two_way_bounds(n: usize, k: usize, sigma: usize) -> (f64, f64) {
    let (n, k, s) = (n as f64, k as f64, sigma as f64);
    (3.0 * k * (n - 1.0) / (s + k) + 6.0 * k - 8.0, 3.0 * k * (n - 2.0) / (s + k) + 6.0 * k - 9.0)
}

struct Builder<'g> {
    g: &'g Graph,
    in_set: Vec<bool>,
    trace: Vec<TraceStep>,
}

impl<'g> Builder<'g> {
    fn seeded(g: &'g Graph, seed: usize) -> Self {
        let mut in_set = vec![false; g.n()];
        in_set[seed] = true;
        Builder { g, in_set, trace: vec![TraceStep { added: vec![seed], reason: StepReason::Seed }] }
    }

    fn from_result(g: &'g Graph, base: &DominationResult) -> Self {
        let mut in_set = vec![false; g.n()];
        for &v in &base.set {
            in_set[v] = true;
        }
        Builder { g, in_set, trace: base.trace.clone() }
    }

    fn members(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.in_set[v]).collect()
    }

    fn layers(&self) -> LayerDecomposition {
        self.g.bfs_layers(&self.members()).expect("set is nonempty")
    }

    /// Adds `v` and its shortest path down to the set.
    fn attach(&mut self, layers: &LayerDecomposition, v: usize, reason: StepReason) {
        let path = layers.path_to_seeds(self.g, v).expect("graph is connected");
        let added: Vec<usize> = path.into_iter().filter(|&w| !self.in_set[w]).collect();
        for &w in &added {
            self.in_set[w] = true;
        }
        self.trace.push(TraceStep { added, reason });
    }

    /// Absorbs deficient `N^2(D)` vertices (fewer than `strength` neighbors in
    /// `N^1(D)`) until none remain, optionally sweeping pendants of `N^1(D)` in.
    fn absorb(&mut self, k: usize, strength: usize, move_pendants: bool) -> Result<(), DomError> {
        let guard = self.g.n() + 1;
        for _ in 0..guard {
            let layers = self.layers();
            if move_pendants {
                let pendants = self.g.pendant_vertices(layers.layer(1));
                if let Some(&p) = pendants.first() {
                    self.attach(&layers, p, StepReason::PendantMove);
                    continue;
                }
            }
            let deficient: Vec<usize> = layers
                .layer(2)
                .iter()
                .copied()
                .filter(|&v| layers.neighbors_in_layer(self.g, v, 1) < strength)
                .collect();
            if deficient.is_empty() {
                return Ok(());
            }
            match heaviest_in_independent_kset(self.g, &deficient, k) {
                Some(v) => self.attach(&layers, v, StepReason::DeficientFamily),
                None => {
                    let v = heaviest(self.g, &deficient);
                    self.attach(&layers, v, StepReason::DeficientResidual);
                }
            }
        }
        Err(DomError::NonTermination(guard))
    }

    fn finish(
        self,
        flavor: Flavor,
        k: usize,
        sigma: usize,
        bound: impl FnOnce(&LayerDecomposition) -> (f64, Option<f64>),
    ) -> Result<DominationResult, DomError> {
        let set = self.members();
        let decomposition = self.layers();
        let strength = strength_of(self.g, &decomposition);
        let (size_bound, alt_size_bound) = bound(&decomposition);
        // The size bounds rely on k >= 2; for k = 1 they are reported only.
        if k >= 2 && set.len() as f64 > size_bound + 1e-9 {
            return Err(DomError::SizeBoundExceeded { size: set.len(), bound: size_bound });
        }
        Ok(DominationResult { set, decomposition, strength, flavor, k, sigma, size_bound, alt_size_bound, trace: self.trace })
    }
}

fn heaviest(g: &Graph, set: &[usize]) -> usize {
    *set.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))).expect("nonempty")
}

fn strength_of(g: &Graph, layers: &LayerDecomposition) -> Option<usize> {
    layers.layer(2).iter().map(|&v| layers.neighbors_in_layer(g, v, 1)).min()
}

fn check_inputs(g: &Graph, k: usize, sigma: &SigmaReport, required: usize) -> Result<(), DomError> {
    if !g.is_connected() {
        return Err(DomError::Disconnected);
    }
    if sigma.k != k {
        return Err(DomError::SigmaMismatch { expected: k, found: sigma.k });
    }
    if sigma.value < required {
        return Err(DomError::SigmaTooSmall { sigma: sigma.value, required });
    }
    Ok(())
}

/// Connected two-step dominating set grown from the heaviest `sigma_k` witness member.
pub fn build_two_step(g: &Graph, k: usize, sigma: &SigmaReport) -> Result<DominationResult, DomError> {
    check_inputs(g, k, sigma, 2 * k + 1)?;
    let mut b = Builder::seeded(g, sigma.heaviest_member(g));
    let guard = g.n() + 1;
    let mut done = false;
    for _ in 0..guard {
        let layers = b.layers();
        if layers.is_two_step_dominated() {
            done = true;
            break;
        }
        let far = layers.layer(3);
        if let Some(v) = heaviest_in_independent_kset(g, far, k) {
            b.attach(&layers, v, StepReason::IndependentFamily);
        } else if !layers.remainder().is_empty() {
            b.attach(&layers, heaviest(g, far), StepReason::FrontierAdvance);
        } else {
            // alpha(G[N^3]) < k: attach a maximum independent set of N^3 one member at a time.
            for x in alpha_at_least(g, far, k).witness {
                if !b.in_set[x] {
                    let layers = b.layers();
                    b.attach(&layers, x, StepReason::ResidualAttach);
                }
            }
        }
    }
    if !done {
        return Err(DomError::NonTermination(guard));
    }
    b.finish(Flavor::TwoStep, k, sigma.value, |l| {
        (two_step_bound(g.n(), l.layer(2).len(), k, sigma.value), None)
    })
}

/// Upgrades a two-step set to a two-way set: pendants go into `D` and every
/// vertex of `N^2(D)` ends with at least two neighbors in `N^1(D)`.
pub fn upgrade_two_way(
    g: &Graph,
    k: usize,
    sigma: &SigmaReport,
    base: &DominationResult,
) -> Result<DominationResult, DomError> {
    check_inputs(g, k, sigma, 2 * k + 1)?;
    if base.flavor != Flavor::TwoStep {
        return Err(DomError::WrongBase);
    }
    let pendants = g.pendant_vertices(base.n1());
    if pendants.len() > k - 1 {
        return Err(DomError::TooManyPendants { count: pendants.len(), limit: k - 1 });
    }
    let mut b = Builder::from_result(g, base);
    b.absorb(k, 2, true)?;
    b.finish(Flavor::TwoWay, k, sigma.value, |_| {
        let (asserted, statement) = two_way_bounds(g.n(), k, sigma.value);
        (asserted, Some(statement))
    })
}

/// Connected `s`-strong two-step dominating set with `s` set by `regime`.
pub fn build_strong(
    g: &Graph,
    k: usize,
    sigma: &SigmaReport,
    regime: StrongRegime,
) -> Result<DominationResult, DomError> {
    check_inputs(g, k, sigma, 7 * k + 1)?;
    let base = build_two_step(g, k, sigma)?;
    strengthen(g, k, sigma, &base, regime)
}

/// Absorption phase of [`build_strong`] on an existing two-step set.
pub fn strengthen(
    g: &Graph,
    k: usize,
    sigma: &SigmaReport,
    base: &DominationResult,
    regime: StrongRegime,
) -> Result<DominationResult, DomError> {
    if base.flavor != Flavor::TwoStep {
        return Err(DomError::WrongBase);
    }
    let strength = regime.strength(sigma.value, k);
    let mut b = Builder::from_result(g, base);
    b.absorb(k, strength, false)?;
    b.finish(Flavor::Strong { strength, regime }, k, sigma.value, |_| regime.size_bounds(g.n(), k, sigma.value))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominationVerdict {
    pub checks: Vec<Check>,
}

impl DominationVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Re-derives every property of `result` from the graph alone.
pub fn verify_domination(g: &Graph, result: &DominationResult) -> DominationVerdict {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });
    let set = &result.set;
    push("connected", !set.is_empty() && g.induced_is_connected(set), format!("|D| = {}", set.len()));
    let layers = if set.is_empty() { None } else { g.bfs_layers(set).ok() };
    let Some(layers) = layers else {
        push("coverage", false, "empty set".into());
        return DominationVerdict { checks };
    };
    let uncovered = layers.beyond_two();
    push("coverage", uncovered.is_empty(), format!("{} vertices beyond distance 2", uncovered.len()));
    let strength = strength_of(g, &layers);
    let required = match result.flavor {
        Flavor::TwoStep => 0,
        Flavor::TwoWay => 2,
        Flavor::Strong { strength, .. } => strength,
    };
    if result.flavor == Flavor::TwoWay {
        let missing: Vec<usize> =
            g.pendant_vertices(&(0..g.n()).collect::<Vec<_>>()).into_iter().filter(|v| !result.contains(*v)).collect();
        push("pendants", missing.is_empty(), format!("pendants outside D: {missing:?}"));
    }
    let strong_enough = strength.is_none_or(|s| s >= required);
    push(
        "strength",
        strong_enough && strength == result.strength,
        format!("measured {strength:?}, recorded {:?}, required {required}", result.strength),
    );
    push(
        "size_bound",
        result.k < 2 || set.len() as f64 <= result.size_bound + 1e-9,
        format!("|D| = {} vs bound {:.6}{}", set.len(), result.size_bound, if result.k < 2 { " (not asserted for k = 1)" } else { "" }),
    );
    DominationVerdict { checks }
}

/// Replays the trace from scratch and checks the per-step invariants: at most
/// three vertices per step, `g[D]` stays connected, independent-family steps
/// grow `|D u N^1(D)|` by at least `ceil(sigma/k) + 1`, and deficient-family
/// absorptions shrink `N^2(D)` by the amount the flavor guarantees.
pub fn check_trace(g: &Graph, result: &DominationResult) -> Result<(), String> {
    let (k, sigma) = (result.k, result.sigma);
    let mut set: Vec<usize> = Vec::new();
    for (i, step) in result.trace.iter().enumerate() {
        if step.reason == StepReason::Seed {
            if i != 0 || step.added.len() != 1 {
                return Err(format!("step {i}: malformed seed"));
            }
            set = step.added.clone();
            continue;
        }
        if step.added.is_empty() || step.added.len() > 3 {
            return Err(format!("step {i}: adds {} vertices", step.added.len()));
        }
        let before = g.bfs_layers(&set).map_err(|e| e.to_string())?;
        if step.added.iter().any(|v| set.contains(v)) {
            return Err(format!("step {i}: re-adds a member"));
        }
        set.extend(&step.added);
        set.sort_unstable();
        if !g.induced_is_connected(&set) {
            return Err(format!("step {i}: g[D] disconnected"));
        }
        let after = g.bfs_layers(&set).map_err(|e| e.to_string())?;
        let closed = |l: &LayerDecomposition| l.layer(0).len() + l.layer(1).len();
        match step.reason {
            StepReason::IndependentFamily => {
                let need = sigma.div_ceil(k) + 1;
                let grew = closed(&after) - closed(&before);
                if grew < need {
                    return Err(format!("step {i}: |D u N1| grew by {grew} < {need}"));
                }
            }
            StepReason::DeficientFamily => {
                let need = match result.flavor {
                    Flavor::TwoWay => sigma.div_ceil(k),
                    Flavor::Strong { regime, .. } => regime.absorption_gain(sigma, k),
                    Flavor::TwoStep => return Err(format!("step {i}: absorption in a two-step set")),
                };
                let shrank = before.layer(2).len().saturating_sub(after.layer(2).len());
                if shrank < need {
                    return Err(format!("step {i}: N2 shrank by {shrank} < {need}"));
                }
            }
            _ => {}
        }
    }
    if set != result.set {
        return Err("replayed set differs from the recorded set".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::sigma_k;

    #[test]
    fn petersen_two_step_is_single_vertex() {
        let g = Graph::petersen();
        let s = sigma_k(&g, 2).unwrap();
        let r = build_two_step(&g, 2, &s).unwrap();
        assert_eq!(r.size(), 1);
        assert!(verify_domination(&g, &r).passed());
        check_trace(&g, &r).unwrap();
    }

    #[test]
    fn petersen_two_way_reaches_strength_two() {
        let g = Graph::petersen();
        let s = sigma_k(&g, 2).unwrap();
        let base = build_two_step(&g, 2, &s).unwrap();
        assert_eq!(base.strength, Some(1));
        let r = upgrade_two_way(&g, 2, &s, &base).unwrap();
        assert!(r.strength.is_none_or(|x| x >= 2));
        let v = verify_domination(&g, &r);
        assert!(v.passed(), "{v:?}");
        check_trace(&g, &r).unwrap();
    }

    #[test]
    fn cycle_fails_sigma_precondition() {
        let g = Graph::cycle(5);
        let s = sigma_k(&g, 2).unwrap();
        assert_eq!(build_two_step(&g, 2, &s).unwrap_err(), DomError::SigmaTooSmall { sigma: 4, required: 5 });
    }

    #[test]
    fn star_has_too_many_pendants() {
        let g = Graph::star(6);
        // Fake a report that passes the sigma gate so the pendant check is reached.
        let s = SigmaReport { k: 2, value: 5, witness: vec![1, 2], method: crate::independence::SigmaMethod::Exact };
        let base = build_two_step(&g, 2, &s).unwrap();
        assert_eq!(base.set, vec![1]);
        let mut centred = base.clone();
        centred.set = vec![0];
        centred.decomposition = g.bfs_layers(&[0]).unwrap();
        assert_eq!(
            upgrade_two_way(&g, 2, &s, &centred).unwrap_err(),
            DomError::TooManyPendants { count: 6, limit: 1 }
        );
    }

    #[test]
    fn strength_rules() {
        assert_eq!(StrongRegime::HalfK.strength(16, 2), 4);
        assert_eq!(StrongRegime::NineteenTenthsK.strength(15, 2), 4);
        assert_eq!(StrongRegime::NineteenTenthsK.strength(38, 2), 10);
        assert_eq!(StrongRegime::NineteenTenthsK.strength(39, 2), 11);
    }

    #[test]
    fn mutations_are_caught() {
        // Cube of a 12-vertex path: sigma_2 = 6, diameter 4.
        let edges = (0..12).flat_map(|v| (1..=3).map(move |d| (v, v + d))).filter(|&(_, w)| w < 12);
        let g = Graph::new(12, edges).unwrap();
        let s = sigma_k(&g, 2).unwrap();
        let r = build_two_step(&g, 2, &s).unwrap();
        assert!(verify_domination(&g, &r).passed());

        let mut smaller = r.clone();
        smaller.size_bound = r.size() as f64 - 1.0;
        assert!(!verify_domination(&g, &smaller).passed());

        if r.size() > 1 {
            let mut missing = r.clone();
            missing.set.remove(missing.set.len() / 2);
            let v = verify_domination(&g, &missing);
            assert!(v.failures().iter().any(|c| c.name == "coverage" || c.name == "connected"));
        }
    }
}
