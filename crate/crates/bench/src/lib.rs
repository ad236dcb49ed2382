//! Fixed graphs shared by the pipeline benchmarks.

use rainbowk_core::extremal::{gen_example1, gen_example2};
use rainbowk_core::Graph;

pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub k: usize,
}

/// Example families at a few sizes, each paired with the `k` it was built for.
pub fn extremal_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in [30, 58, 86] {
        out.push(Fixture { name: format!("example1-k3-n{n}"), graph: gen_example1(3, n).unwrap().0, k: 3 });
    }
    for t in [1, 4] {
        out.push(Fixture { name: format!("example2-s16-t{t}"), graph: gen_example2(2, 16, t).unwrap().0, k: 2 });
    }
    out
}
