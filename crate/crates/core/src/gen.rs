//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instance::Instance;
use crate::matroid::MatroidBackend;
use crate::pwl::{int, Interval, LinearFn};

/// Shape of random instances; weights are `a + λb` with integer `a, b`.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub nodes: (usize, usize),
    pub max_edges: usize,
    pub coeff: i64,
    pub interval: (i64, i64),
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            nodes: (3, 8),
            max_edges: 16,
            coeff: 9,
            interval: (-10, 10),
        }
    }
}

fn random_weights(rng: &mut ChaCha8Rng, m: usize, coeff: i64) -> Vec<LinearFn> {
    (0..m)
        .map(|_| LinearFn::from_ints(rng.gen_range(-coeff..=coeff), rng.gen_range(-coeff..=coeff)))
        .collect()
}

/// A random 2-edge-connected multigraph: a Hamiltonian cycle plus extra
/// loop-free edges, so no edge is a bridge.
pub fn random_graphic(seed: u64, cfg: &GenConfig) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(cfg.nodes.0..=cfg.nodes.1);
    let m = rng.gen_range(n..=cfg.max_edges.max(n));
    random_graphic_sized(&mut rng, n, m, cfg).named(format!("graphic-{seed}"))
}

/// As [`random_graphic`] with `n` nodes and `m ≥ n` edges.
pub fn random_graphic_with(seed: u64, n: usize, m: usize, cfg: &GenConfig) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graphic_sized(&mut rng, n, m, cfg).named(format!("graphic-{n}-{m}-{seed}"))
}

fn random_graphic_sized(rng: &mut ChaCha8Rng, n: usize, m: usize, cfg: &GenConfig) -> Instance {
    assert!(n >= 2 && m >= n, "need at least a cycle");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    edges.shuffle(rng);
    let weights = random_weights(rng, m, cfg.coeff);
    Instance::new(
        MatroidBackend::graphic(n, edges),
        weights,
        Interval::closed(int(cfg.interval.0), int(cfg.interval.1)).expect("ordered"),
    )
    .expect("valid by construction")
}

/// A random uniform matroid `U(k, m)` with `2 ≤ m ≤ max_m` and `1 ≤ k < m`.
pub fn random_uniform(seed: u64, max_m: usize, cfg: &GenConfig) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(2..=max_m.max(2));
    let k = rng.gen_range(1..m);
    let weights = random_weights(&mut rng, m, cfg.coeff);
    Instance::new(
        MatroidBackend::uniform(m, k),
        weights,
        Interval::closed(int(cfg.interval.0), int(cfg.interval.1)).expect("ordered"),
    )
    .expect("valid by construction")
    .named(format!("uniform-{seed}"))
}
