//! Uniform random graphs.

use rand::Rng;

use crate::graph::Graph;

/// One draw of `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("pairs are distinct")
}

/// Redraws `G(n, p)` until it is connected, giving up after `attempts` tries.
pub fn connected_gnp<R: Rng + ?Sized>(n: usize, p: f64, attempts: usize, rng: &mut R) -> Option<Graph> {
    (0..attempts).map(|_| gnp(n, p, rng)).find(Graph::is_connected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_draws_repeat() {
        let a = gnp(20, 0.3, &mut ChaCha8Rng::seed_from_u64(5));
        let b = gnp(20, 0.3, &mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(a, b);
        assert_eq!(gnp(6, 1.0, &mut ChaCha8Rng::seed_from_u64(0)).m(), 15);
    }

    #[test]
    fn connected_draw() {
        let g = connected_gnp(30, 0.3, 100, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert!(g.is_connected());
        assert!(connected_gnp(30, 0.0, 3, &mut ChaCha8Rng::seed_from_u64(1)).is_none());
    }
}
