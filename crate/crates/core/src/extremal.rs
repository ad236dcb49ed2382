//! Extremal families built from `K*_{a,b}` blocks.
//!
//! `K*_{a,b}` is `K_{a,b}` with the `b`-part turned into a clique. Blocks are
//! laid out left to right with the `a`-part first, so block `i` with `a = 2`
//! starts with its two non-adjacent vertices `x_{i,1}, x_{i,2}`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("K*_{{a,b}} needs a >= 1 and b >= 1, got a={a}, b={b}")]
    NonpositivePart { a: usize, b: usize },
    #[error("k must be at least 2")]
    SmallK,
    #[error("(n - 2)/(k - 1) must be an integer >= 3 (n={n}, k={k})")]
    Example1Divisibility { n: usize, k: usize },
    #[error("sigma/k must be an integer >= 2 (sigma={sigma}, k={k})")]
    Example2Divisibility { sigma: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Kstar { a: usize, b: usize },
    Example1 { k: usize, n: usize },
    Example2 { k: usize, sigma: usize, t: usize },
}

/// Closed-form properties of a generated graph, where known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub n: usize,
    pub m: Option<usize>,
    pub sigma_k: Option<usize>,
    pub min_degree: Option<usize>,
    pub diameter: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    pub expected: Expected,
}

/// Appends a `K*_{a,b}` block starting at vertex `offset`.
fn push_kstar(edges: &mut Vec<(usize, usize)>, offset: usize, a: usize, b: usize) {
    for i in 0..a {
        for j in 0..b {
            edges.push((offset + i, offset + a + j));
        }
    }
    for j in 0..b {
        for l in j + 1..b {
            edges.push((offset + a + j, offset + a + l));
        }
    }
}

pub fn gen_kstar(a: usize, b: usize) -> Result<(Graph, FamilySpec), ExtremalError> {
    if a == 0 || b == 0 {
        return Err(ExtremalError::NonpositivePart { a, b });
    }
    let mut edges = Vec::new();
    push_kstar(&mut edges, 0, a, b);
    let g = Graph::new(a + b, edges).expect("blocks are simple");
    let spec = FamilySpec {
        family: Family::Kstar { a, b },
        expected: Expected {
            n: a + b,
            m: Some(a * b + b * (b - 1) / 2),
            sigma_k: None,
            min_degree: Some(b.min(a + b - 1)),
            diameter: None,
        },
    };
    Ok((g, spec))
}

/// Chains `blocks` (each `K*_{2,b}`) with `x_{i,2} - x_{i+1,1}` links and
/// returns the edges plus each block's offset.
fn chain(blocks: &[usize]) -> (Vec<(usize, usize)>, Vec<usize>, usize) {
    let mut edges = Vec::new();
    let mut offsets = Vec::new();
    let mut next = 0;
    for &b in blocks {
        push_kstar(&mut edges, next, 2, b);
        offsets.push(next);
        next += 2 + b;
    }
    for w in offsets.windows(2) {
        edges.push((w[0] + 1, w[1]));
    }
    (edges, offsets, next)
}

/// `H_1 = K*_{2,q-1}`, `H_2..H_{k-1} = K*_{2,q-2}` and a pendant `v` on
/// `x_{k-1,2}`, where `q = (n-2)/(k-1)`. Here `sigma_k = n - k`, `delta = 1`.
pub fn gen_example1(k: usize, n: usize) -> Result<(Graph, FamilySpec), ExtremalError> {
    if k < 2 {
        return Err(ExtremalError::SmallK);
    }
    if n < 2 || !(n - 2).is_multiple_of(k - 1) || (n - 2) / (k - 1) < 3 {
        return Err(ExtremalError::Example1Divisibility { n, k });
    }
    let q = (n - 2) / (k - 1);
    let mut blocks = vec![q - 1];
    blocks.extend(std::iter::repeat_n(q - 2, k - 2));
    let (mut edges, offsets, v) = chain(&blocks);
    assert_eq!(v + 1, n, "block sizes must add up to n");
    edges.push((offsets[k - 2] + 1, v));
    let g = Graph::new(n, edges).expect("blocks are simple");
    let spec = FamilySpec {
        family: Family::Example1 { k, n },
        expected: Expected { n, m: None, sigma_k: Some(n - k), min_degree: Some(1), diameter: None },
    };
    Ok((g, spec))
}

/// `t` copies of `K*_{2,sigma/k-1}` between two copies of `K*_{2,sigma/k}`.
/// Diameter `3t + 5`; inner vertices have degree `sigma/k`.
pub fn gen_example2(k: usize, sigma: usize, t: usize) -> Result<(Graph, FamilySpec), ExtremalError> {
    if k == 0 || !sigma.is_multiple_of(k) || sigma / k < 2 {
        return Err(ExtremalError::Example2Divisibility { sigma, k });
    }
    let r = sigma / k;
    let mut blocks = vec![r];
    blocks.extend(std::iter::repeat_n(r - 1, t));
    blocks.push(r);
    let (edges, _, n) = chain(&blocks);
    debug_assert_eq!(n, (t + 2) * (r + 1) + 2);
    let g = Graph::new(n, edges).expect("blocks are simple");
    let spec = FamilySpec {
        family: Family::Example2 { k, sigma, t },
        expected: Expected { n, m: None, sigma_k: None, min_degree: Some(r), diameter: Some(3 * t + 5) },
    };
    Ok((g, spec))
}

/// Vertices of the inner copies `H_1..H_t` of [`gen_example2`].
pub fn example2_inner_vertices(k: usize, sigma: usize, t: usize) -> Vec<usize> {
    let r = sigma / k;
    let start = r + 2;
    (start..start + t * (r + 1)).collect()
}

/// `3k(n-2)/(sigma+k) - 1 == 3t + 5`, checked by cross-multiplication.
pub fn example2_tightness_holds(k: usize, sigma: usize, t: usize, n: usize) -> bool {
    3 * k * (n - 2) == (3 * t + 6) * (sigma + k)
}
