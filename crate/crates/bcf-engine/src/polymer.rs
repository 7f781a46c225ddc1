//! Polymer-gas view of the chromatic polynomial: signed connected-spanning-
//! subgraph sums, activities, and the partition function Ξ.

use std::collections::HashMap;

use graph_core::Graph;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::caps::{BcfError, EnumCaps};

/// Exact rational or complex scalar the polymer sums run over.
pub trait ActivityValue: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
}

impl ActivityValue for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

impl ActivityValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

fn check_polymer(g: &Graph, r: &[usize]) -> Result<Vec<usize>, BcfError> {
    if r.len() < 2 {
        return Err(BcfError::SubsetTooSmall { size: r.len() });
    }
    let mut in_r = vec![false; g.vertex_count()];
    for &v in r {
        if v >= g.vertex_count() {
            return Err(BcfError::Graph(graph_core::GraphError::UnknownVertex { v }));
        }
        in_r[v] = true;
    }
    let edges_within: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.edge(e).unwrap();
            in_r[a] && in_r[b]
        })
        .collect();
    if !subset_connected(g, r, &edges_within, u32::MAX) {
        return Err(BcfError::NotConnected);
    }
    Ok(edges_within)
}

/// Connectivity of `(R, {edges_within selected by mask})`.
fn subset_connected(g: &Graph, r: &[usize], edges_within: &[usize], mask: u32) -> bool {
    let mut rank: HashMap<usize, usize> = HashMap::new();
    for (i, &v) in r.iter().enumerate() {
        rank.insert(v, i);
    }
    let mut parent: Vec<usize> = (0..r.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut comps = r.len();
    for (i, &e) in edges_within.iter().enumerate() {
        if i < 32 && mask >> i & 1 == 0 {
            continue;
        }
        let (a, b) = g.edge(e).unwrap();
        let (ra, rb) = (find(&mut parent, rank[&a]), find(&mut parent, rank[&b]));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps == 1
}

/// Signed sum over connected spanning subgraphs of `G|_R`:
/// `Σ_g (-1)^(|E_g|)`, by exhaustive edge-subset enumeration.
/// Requires `G|_R` connected and `|R| >= 2`.
pub fn css_signed_sum(g: &Graph, r: &[usize]) -> Result<i64, BcfError> {
    let edges_within = check_polymer(g, r)?;
    let m = edges_within.len();
    if m > 30 {
        return Err(BcfError::SizeCap {
            what: "connected-spanning-subgraph enumeration edge count",
            size: m,
            cap: 30,
        });
    }
    let mut sum = 0i64;
    for mask in 0u32..(1 << m) {
        if subset_connected(g, r, &edges_within, mask) {
            sum += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(sum)
}

/// Polymer activity `z(R, q) = css(R) / q^(|R|-1)`.
pub fn activity<T: ActivityValue>(g: &Graph, r: &[usize], q: &T) -> Result<T, BcfError> {
    if q.is_zero() {
        return Err(BcfError::ZeroQ);
    }
    let css = css_signed_sum(g, r)?;
    let mut denom = T::one();
    for _ in 0..r.len() - 1 {
        denom = denom.mul(q);
    }
    Ok(T::from_i64(css).div(&denom))
}

/// Partition function of the polymer gas: sum over all families of pairwise
/// disjoint connected polymers (each with at least two vertices) of the
/// product of their activities. Recursive enumeration over vertex masks with
/// memoization.
pub fn xi_polymer<T: ActivityValue>(g: &Graph, q: &T, caps: &EnumCaps) -> Result<T, BcfError> {
    if q.is_zero() {
        return Err(BcfError::ZeroQ);
    }
    let n = g.vertex_count();
    if n > caps.polymer_vertices {
        return Err(BcfError::SizeCap {
            what: "polymer enumeration vertex count",
            size: n,
            cap: caps.polymer_vertices,
        });
    }
    // activities of every connected subset with >= 2 vertices
    let mut polymers: Vec<(u32, T)> = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let r: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        match css_signed_sum(g, &r) {
            Ok(_) => polymers.push((mask, activity(g, &r, q)?)),
            Err(BcfError::NotConnected) => continue,
            Err(e) => return Err(e),
        }
    }
    let mut memo: HashMap<u32, T> = HashMap::new();
    fn rec<T: ActivityValue>(
        avail: u32,
        polymers: &[(u32, T)],
        memo: &mut HashMap<u32, T>,
    ) -> T {
        if avail == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&avail) {
            return v.clone();
        }
        let v = avail.trailing_zeros();
        let without = rec(avail & !(1 << v), polymers, memo);
        let mut total = without;
        for (mask, z) in polymers {
            if mask & (1 << v) != 0 && mask & !avail == 0 {
                let rest = rec(avail & !mask, polymers, memo);
                total = total.add(&z.mul(&rest));
            }
        }
        memo.insert(avail, total.clone());
        total
    }
    Ok(rec((1u32 << n) - 1, &polymers, &mut memo))
}
