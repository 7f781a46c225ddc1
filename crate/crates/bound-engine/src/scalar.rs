/// Bisection for `f(x) = target` with `f` increasing on `[lo, hi]`.
///
/// Requires `f(lo) <= target <= f(hi)`. Halves the bracket until it is a few
/// ulps wide (or `max_iter` is hit), which pins the root to the limit of f64
/// resolution regardless of how steep `f` is near the root.
pub fn bisect_increasing(mut lo: f64, mut hi: f64, target: f64, f: impl Fn(f64) -> f64) -> f64 {
    debug_assert!(lo <= hi);
    let max_iter = 200;
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket exhausted at f64 resolution
        }
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section search for the maximum of `f` on `[lo, hi]`.
///
/// Returns `(x_best, f_best)` over every point probed (including endpoints),
/// shrinking the interval until its width drops below `tol`.
pub fn golden_section_max(
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    f: impl Fn(f64) -> f64,
) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best = (lo, f(lo));
    let fhi = f(hi);
    if fhi > best.1 {
        best = (hi, fhi);
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        let cand = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
        if cand.1 > best.1 {
            best = cand;
        }
    }
    best
}
