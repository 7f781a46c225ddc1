use crate::graph::Graph;

/// How to order the edge list before order-sensitive computations.
///
/// The forest generating function is order-free, so this only affects which
/// intermediate forest sets arise; exercising several orders is how tests
/// check that invariance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrderPolicy {
    /// Keep the input order.
    Input,
    /// Sort edges lexicographically by endpoints.
    Lexicographic,
    /// Seeded Fisher–Yates shuffle (deterministic for a given seed).
    Random { seed: u64 },
}

impl EdgeOrderPolicy {
    pub fn apply(self, g: &Graph) -> Graph {
        let m = g.edge_count();
        match self {
            EdgeOrderPolicy::Input => g.clone(),
            EdgeOrderPolicy::Lexicographic => {
                let mut idx: Vec<usize> = (0..m).collect();
                idx.sort_by_key(|&i| g.edge(i).unwrap());
                g.with_edge_order(&idx).unwrap()
            }
            EdgeOrderPolicy::Random { seed } => {
                g.with_edge_order(&shuffled_indices(m, seed)).unwrap()
            }
        }
    }

    pub fn parse(s: &str, seed: u64) -> Result<Self, String> {
        match s {
            "input" => Ok(EdgeOrderPolicy::Input),
            "lex" => Ok(EdgeOrderPolicy::Lexicographic),
            "random" => Ok(EdgeOrderPolicy::Random { seed }),
            other => Err(format!("unknown edge order policy {other:?}")),
        }
    }
}

/// SplitMix64: tiny deterministic generator. Keeping it in-repo pins the
/// shuffle byte-for-byte across platforms and dependency bumps.
#[derive(Debug, Clone)]
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (rejection-free modulo; bias is
    /// negligible for the tiny bounds used here).
    pub fn next_below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Fisher–Yates permutation of `0..m` from the given seed.
pub fn shuffled_indices(m: usize, seed: u64) -> Vec<usize> {
    let mut rng = SplitMix64(seed);
    let mut idx: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        let j = rng.next_below(i + 1);
        idx.swap(i, j);
    }
    idx
}
