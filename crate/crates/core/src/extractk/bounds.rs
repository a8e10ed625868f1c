/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r * (n as u128 - i) / (i + 1);
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Most nodes a rooted tree of the given depth can have under a compatible
/// order of cutwidth at most `c`: `C(depth + c - 1, c)`, and 0 at depth 0.
pub fn tree_size_bound(depth: usize, c: usize) -> u64 {
    if depth == 0 {
        return 0;
    }
    binomial((depth + c - 1) as u64, c as u64)
}

/// `2 - p + (p/e) * size^(1/p)`, the real-valued depth bound reported as a
/// certificate. It fails only for a single node with `p = 1`; use
/// [`certified_depth`] for an integer bound that always holds.
pub fn depth_lower_bound(size: usize, p: usize) -> f64 {
    let p = p as f64;
    2.0 - p + (p / std::f64::consts::E) * (size as f64).powf(1.0 / p)
}

/// Least depth `d` with `tree_size_bound(d, p) >= size`, so every tree of
/// `size` nodes and cutwidth at most `p` is at least this deep.
///
/// This is at least `⌈depth_lower_bound(size, p)⌉` except for a single node
/// with `p = 1`, where the real bound `1 + 1/e` overshoots the true depth 1.
pub fn certified_depth(size: usize, p: usize) -> usize {
    if size <= 1 || p == 0 {
        return 1;
    }
    // Doubling then bisection; the bound is increasing in d.
    let mut hi = 1;
    while tree_size_bound(hi, p) < size as u64 {
        hi *= 2;
    }
    let mut lo = hi / 2 + 1;
    while lo < hi {
        let mid = (lo + hi) / 2;
        if tree_size_bound(mid, p) >= size as u64 {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    hi
}
