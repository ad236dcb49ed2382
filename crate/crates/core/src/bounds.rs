//! Closed-form upper bounds on `rc` and `rvc`, the new sigma-based ones and
//! the minimum-degree bounds they are compared against.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub name: &'static str,
    pub formula: &'static str,
    /// `None` when the bound's hypotheses fail for this graph.
    pub value: Option<f64>,
}

fn row(name: &'static str, formula: &'static str, applies: bool, value: impl FnOnce() -> f64) -> BoundRow {
    BoundRow { name, formula, value: applies.then(value) }
}

/// `3k(n-2)/(sigma+k) + 6k - 4`.
pub fn rc_sigma_bound(n: usize, k: usize, sigma: usize) -> f64 {
    let (n, k, s) = (n as f64, k as f64, sigma as f64);
    3.0 * k * (n - 2.0) / (s + k) + 6.0 * k - 4.0
}

/// `3k(n-1)/(sigma+k) + 6k - 3`, the form the construction actually meets.
pub fn rc_sigma_bound_loose(n: usize, k: usize, sigma: usize) -> f64 {
    let (n, k, s) = (n as f64, k as f64, sigma as f64);
    3.0 * k * (n - 1.0) / (s + k) + 6.0 * k - 3.0
}

/// Integer budget for the edge pipeline: floor of [`rc_sigma_bound_loose`],
/// computed exactly.
pub fn rc_color_budget(n: usize, k: usize, sigma: usize) -> usize {
    (3 * k * (n.max(1) - 1)) / (sigma + k) + 6 * k - 3
}

/// Which formula of the vertex bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RvcBranch {
    /// `sigma <= 7k` or `sigma >= 8k`: `(4k + 2k^2) n/(sigma+k) + 5k`.
    Main,
    /// `7k < sigma < 8k`: `(38k/9 + 2k^2) n/(sigma+k) + 5k`.
    Gap,
}

pub fn rvc_branch(k: usize, sigma: usize) -> RvcBranch {
    if sigma > 7 * k && sigma < 8 * k {
        RvcBranch::Gap
    } else {
        RvcBranch::Main
    }
}

pub fn rvc_sigma_bound(n: usize, k: usize, sigma: usize) -> f64 {
    let (nf, kf, s) = (n as f64, k as f64, sigma as f64);
    let lead = match rvc_branch(k, sigma) {
        RvcBranch::Main => 4.0 * kf,
        RvcBranch::Gap => 38.0 * kf / 9.0,
    };
    (lead + 2.0 * kf * kf) * nf / (s + kf) + 5.0 * kf
}

/// Additive constant of the `4n/(delta+1)` vertex bound for `delta >= 6`.
pub fn rvc_degree_constant(delta: usize) -> f64 {
    let d = delta as f64;
    let num = 3.0 * (d.powi(3) + 2.0 * d * d + 3.0).ln() - 3.0 * (3f64.ln() - 1.0);
    (num / (d - 3.0)).exp() - 2.0
}

/// Minimum-degree bound on `rvc`, `None` below `delta = 3`.
pub fn rvc_degree_bound(n: usize, delta: usize) -> Option<f64> {
    let nf = n as f64;
    match delta {
        0..=2 => None,
        3 => Some(3.0 * nf / 4.0 - 2.0),
        4 => Some(3.0 * nf / 5.0 - 8.0 / 5.0),
        5 => Some(nf / 2.0 - 2.0),
        d => Some(4.0 * nf / (d as f64 + 1.0) + rvc_degree_constant(d)),
    }
}

/// Every `rc` bound evaluated on `(n, delta, k, sigma_k)`.
pub fn evaluate_rc_bounds(n: usize, delta: usize, k: usize, sigma: usize) -> Vec<BoundRow> {
    let (nf, d) = (n as f64, delta as f64);
    vec![
        row("rc-five-sixths", "5n/6", delta >= 3, || 5.0 * nf / 6.0),
        row("rc-log-degree", "n(4 ln d + 3)/d", delta >= 1, || nf * (4.0 * d.ln() + 3.0) / d),
        row("rc-twenty", "20n/d", delta >= 1, || 20.0 * nf / d),
        row("rc-three", "3n/(d+1) + 3", true, || 3.0 * nf / (d + 1.0) + 3.0),
        row("rc-sigma", "3k(n-2)/(s+k) + 6k - 4", k >= 1, || rc_sigma_bound(n, k, sigma)),
        row("rc-sigma-loose", "3k(n-1)/(s+k) + 6k - 3", k >= 1, || rc_sigma_bound_loose(n, k, sigma)),
    ]
}

/// Every `rvc` bound evaluated on `(n, delta, k, sigma_k)`.
pub fn evaluate_rvc_bounds(n: usize, delta: usize, k: usize, sigma: usize) -> Vec<BoundRow> {
    let nf = n as f64;
    let formula = match rvc_branch(k, sigma) {
        RvcBranch::Main => "(4k + 2k^2)n/(s+k) + 5k",
        RvcBranch::Gap => "(38k/9 + 2k^2)n/(s+k) + 5k",
    };
    vec![
        row("rvc-eleven", "11n/d", delta >= 1, || 11.0 * nf / delta as f64),
        BoundRow { name: "rvc-four", formula: "4n/(d+1) + C(d)", value: rvc_degree_bound(n, delta) },
        row("rvc-sigma", formula, k >= 1, || rvc_sigma_bound(n, k, sigma)),
    ]
}

/// `e * p * (d + 1)` for the gateway-coloring events with 9 colors and
/// gateway sets of size `s`: `p = 9^(1-s)`, `d = ((sigma+k)^2/(2k^2) - 2) s`.
pub fn lll_value(k: usize, sigma: usize, s: usize) -> f64 {
    let (kf, sf) = (k as f64, sigma as f64);
    let p = 9f64.powi(1 - s as i32);
    let d = ((sf + kf).powi(2) / (2.0 * kf * kf) - 2.0) * s as f64;
    std::f64::consts::E * p * (d + 1.0)
}
