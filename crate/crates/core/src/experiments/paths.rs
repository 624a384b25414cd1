use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seed::Seed;

use super::stats::binomial_ci;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathRate {
    pub k: usize,
    pub path_len: usize,
    pub trials: usize,
    pub seed: Seed,
    pub proper: usize,
    pub rate: f64,
    /// `2^(1 - path_len)`: both alternating patterns out of `2^path_len`.
    pub analytic: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Empirical probability that a path with `path_len` edges is proper under a
/// uniform random 2-colouring. `k` is echoed for labelling; the usual
/// lengths are `2k - 2` (paths through `K_n`) and `2k - 1` (split bipartite
/// paths).
pub fn path_properness_rate(k: usize, path_len: usize, trials: usize, seed: Seed) -> Result<PathRate> {
    if path_len == 0 || path_len > 64 {
        return Err(Error::invalid(format!("path length must be in 1..=64, got {path_len}")));
    }
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let mut rng = seed.rng();
    let mask = if path_len == 64 { u64::MAX } else { (1u64 << path_len) - 1 };
    let adjacent = mask >> 1;
    let mut proper = 0;
    for _ in 0..trials {
        let bits = rng.random::<u64>() & mask;
        // proper iff every pair of consecutive edge colours differs
        if (bits ^ (bits >> 1)) & adjacent == adjacent {
            proper += 1;
        }
    }
    let ci = binomial_ci(proper, trials);
    Ok(PathRate {
        k,
        path_len,
        trials,
        seed,
        proper,
        rate: proper as f64 / trials as f64,
        analytic: 0.5f64.powi(path_len as i32 - 1),
        ci_low: ci.low,
        ci_high: ci.high,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BipartiteN2 {
    pub k: usize,
    pub l: usize,
    /// Smallest `n` from which the inequality holds for every larger `n`.
    pub n: u64,
    /// Always `"derived-from-proof"`: the source states only that such an `n` exists.
    pub label: String,
    pub inequality: String,
}

/// Smallest `n` with `2^(k-l+1) n^(k+l-1) (1 - p2)^(floor((n-1)/(k-1)) - (l-1)) <= 1`
/// for all larger `n`, where `p2 = 2^-(2k-2)`.
pub fn bipartite_n2(k: usize, l: usize) -> Result<BipartiteN2> {
    if k < 3 || l < 1 || l > k {
        return Err(Error::invalid(format!("need k >= 3 and 1 <= l <= k, got k={k}, l={l}")));
    }
    let p2 = 0.5f64.powi(2 * k as i32 - 2);
    let log_q = (-p2).ln_1p();
    let c0 = (k + 1 - l) as f64 * std::f64::consts::LN_2;
    let deg = (k + l - 1) as f64;
    let kk = (k - 1) as u64;
    let f = |n: u64| c0 + deg * (n as f64).ln() + (((n - 1) / kk) as f64 - (l - 1) as f64) * log_q;
    // concave upper envelope; decreasing past `turn`
    let g = |n: u64| c0 + deg * (n as f64).ln() + ((n - 1) as f64 / kk as f64 - 1.0 - (l - 1) as f64) * log_q;
    let turn = (deg * kk as f64 / -log_q).ceil() as u64;
    let mut last_bad = 0u64;
    let mut n = 1u64;
    while n <= turn || g(n) > 0.0 {
        if f(n) > 0.0 {
            last_bad = n;
        }
        n += 1;
        if n > 1_000_000_000 {
            return Err(Error::TooLarge(format!("no crossing below 1e9 for k={k}, l={l}")));
        }
    }
    Ok(BipartiteN2 {
        k,
        l,
        n: last_bad + 1,
        label: "derived-from-proof".into(),
        inequality: "2^(k-l+1) * n^(k+l-1) * (1-p2)^(floor((n-1)/(k-1)) - (l-1)) <= 1, p2 = 2^-(2k-2)".into(),
    })
}
