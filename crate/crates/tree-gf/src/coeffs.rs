use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::TreeGfError;

/// Number of `n`-vertex rooted subtrees of the infinite rooted tree whose
/// every vertex has `Δ-1` children, by the Lagrange-inversion closed form
/// `u_n = (1/n!) ((Δ-1)n)! / ((Δ-2)n + 1)!`, evaluated as an exact
/// factorial ratio.
pub fn u_coeff(delta: u32, n: usize) -> Result<BigInt, TreeGfError> {
    if delta < 3 {
        return Err(TreeGfError::DeltaTooSmall { delta, min: 3 });
    }
    assert!(n >= 1);
    let d = delta as usize;
    // numerator: ((Δ-2)n + 2) * ... * ((Δ-1)n), which has n-1 factors
    let mut num = BigInt::one();
    for k in (d - 2) * n + 2..=(d - 1) * n {
        num *= BigInt::from(k);
    }
    let mut den = BigInt::one();
    for k in 2..=n {
        den *= BigInt::from(k);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

const BRUTE_N_CAP: usize = 9;

/// Independent oracle for `u_coeff`: explicitly enumerates the `n`-vertex
/// subtrees containing the root inside the depth-`n` truncation of the
/// rooted `(Δ-1)`-ary tree, one by one.
pub fn count_rooted_subtrees(delta: u32, n: usize) -> Result<u64, TreeGfError> {
    if delta < 3 {
        return Err(TreeGfError::DeltaTooSmall { delta, min: 3 });
    }
    if n > BRUTE_N_CAP {
        return Err(TreeGfError::NTooLarge { n, cap: BRUTE_N_CAP });
    }
    if n == 1 {
        return Ok(1);
    }
    let branching = (delta - 1) as usize;
    // build the truncation: children[i] lists the child node ids of node i
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut level = vec![0usize];
    for _ in 1..n {
        let mut next = Vec::new();
        for &node in &level {
            for _ in 0..branching {
                let id = children.len();
                children.push(Vec::new());
                children[node].push(id);
                next.push(id);
            }
        }
        level = next;
    }
    // grow connected supersets of {root}: each call owns a frontier of
    // candidate nodes; picking frontier[i] bans frontier[..i] forever, so
    // every subtree is reached exactly once
    fn grow(children: &[Vec<usize>], frontier: &[usize], size: usize, n: usize, count: &mut u64) {
        if size == n {
            *count += 1;
            return;
        }
        for (i, &node) in frontier.iter().enumerate() {
            let mut next: Vec<usize> = frontier[i + 1..].to_vec();
            next.extend_from_slice(&children[node]);
            grow(children, &next, size + 1, n, count);
        }
    }
    let mut count = 0;
    grow(&children, &children[0].clone(), 1, n, &mut count);
    Ok(count)
}
