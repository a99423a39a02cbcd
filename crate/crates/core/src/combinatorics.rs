//! Hamming-ball combinatorics over F₂ⁿ and the binary entropy function.
//!
//! Every count is exact. Binomial rows are built by Pascal iteration and
//! memoized process-wide behind a read/write lock.

use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::exact::Count;
use crate::{Error, Result};

type Row = Arc<Vec<Count>>;

fn rows() -> &'static RwLock<Vec<Row>> {
    static ROWS: OnceLock<RwLock<Vec<Row>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![Arc::new(vec![Count::one()])]))
}

/// Row `n` of Pascal's triangle, `[C(n,0), …, C(n,n)]`.
pub fn binomial_row(n: u32) -> Row {
    let n = n as usize;
    {
        let cache = rows().read().expect("binomial cache poisoned");
        if let Some(row) = cache.get(n) {
            return Arc::clone(row);
        }
    }
    let mut cache = rows().write().expect("binomial cache poisoned");
    while cache.len() <= n {
        let prev = cache.last().expect("row 0 present");
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(Count::one());
        for w in prev.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(Count::one());
        cache.push(Arc::new(next));
    }
    Arc::clone(&cache[n])
}

pub fn binomial(n: u32, k: u32) -> Count {
    if k > n {
        return Count::zero();
    }
    binomial_row(n)[k as usize].clone()
}

/// `Σ_{k=0}^{min(r,n)} C(n,k)`.
fn prefix_sum(n: u32, r: u32) -> Count {
    let row = binomial_row(n);
    row.iter().take(r.min(n) as usize + 1).sum()
}

/// Volume `V(n, r)` of a radius-`r` Hamming ball in F₂ⁿ. Radii beyond `n` are clamped.
pub fn ball_volume(n: u32, r: u32) -> Count {
    prefix_sum(n, r)
}

/// `V(n, r)` with the convention `V(n, -1) = 0`; convenient for `d - 1` radii with `d = 0`.
pub fn ball_volume_signed(n: u32, r: i64) -> Count {
    if r < 0 {
        Count::zero()
    } else {
        ball_volume(n, r.min(u32::MAX as i64) as u32)
    }
}

/// `T(n, d, r)`: the number of words within distance `r` of both of two
/// centers that are at Hamming distance `d`.
///
/// Sums `C(d,s)·C(n−d,t)` over `s ≤ d`, `t ≤ n−d`, `s+t ≤ r`, `t+d−s ≤ r`,
/// with `s` and `t` starting at zero.
pub fn ball_intersection(n: u32, d: u32, r: u32) -> Result<Count> {
    if d == 0 || d > n {
        return Err(Error::Domain(format!(
            "center distance d = {d} must satisfy 1 <= d <= n = {n}"
        )));
    }
    let rest = n - d;
    let inner = binomial_row(d);
    let mut total = Count::zero();
    let (d, r) = (d as i64, r as i64);
    for s in 0..=d {
        // t <= r - s and t <= r - d + s
        let t_max = (r - s).min(r - d + s);
        if t_max < 0 {
            continue;
        }
        let t_max = t_max.min(rest as i64) as u32;
        total += &inner[s as usize] * prefix_sum(rest, t_max);
    }
    Ok(total)
}

/// `I(n, N, d, r) = N·V(n,r) − (N−1)·T(n,d,r)`: an upper bound on the volume
/// of the union of `N` radius-`r` balls whose centers form a chain in which
/// every center after the first is at distance exactly `d` from an earlier one.
pub fn chained_union_upper(n: u32, count: &Count, d: u32, r: u32) -> Result<Count> {
    if count.is_zero() {
        return Err(Error::Domain("ball count N must be at least 1".into()));
    }
    let t = ball_intersection(n, d, r)?;
    let v = ball_volume(n, r);
    // T <= V, so the difference never underflows.
    Ok(count * &v - (count - 1u8) * t)
}

fn check_probability(x: f64, what: &str) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} = {x} is outside [0, 1]")))
    }
}

fn entropy_unchecked(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Binary entropy `h(x)` in bits, with `0·log 0 = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    check_probability(x, "x")?;
    Ok(entropy_unchecked(x))
}

/// Inverse of `h` restricted to `[0, 1/2]`, by bisection.
pub fn binary_entropy_inv(y: f64) -> Result<f64> {
    check_probability(y, "y")?;
    if y == 1.0 {
        return Ok(0.5);
    }
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    for _ in 0..200 {
        if hi - lo <= 1e-16 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if entropy_unchecked(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `g(x, y) = h(x) + h(y) − h(x+y)` for `x, y ∈ (0, 1/2)`.
pub fn entropy_gap_g(x: f64, y: f64) -> Result<f64> {
    let open = |v: f64| v > 0.0 && v < 0.5;
    if !open(x) || !open(y) {
        return Err(Error::Domain(format!(
            "g(x, y) needs x, y in (0, 1/2); got ({x}, {y})"
        )));
    }
    Ok(entropy_unchecked(x) + entropy_unchecked(y) - entropy_unchecked(x + y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    /// Brute-force oracle: count words of F₂ⁿ within `r` of both `a` and `b`.
    fn enumerate_intersection(n: u32, a: u32, b: u32, r: u32) -> u64 {
        (0u32..1 << n)
            .filter(|x| (x ^ a).count_ones() <= r && (x ^ b).count_ones() <= r)
            .count() as u64
    }

    #[test]
    fn volumes() {
        assert_eq!(ball_volume(7, 0), c(1));
        assert_eq!(ball_volume(7, 7), c(128));
        assert_eq!(ball_volume(4, 2), c(11));
        assert_eq!(ball_volume(4, 9), c(16));
        assert_eq!(ball_volume(0, 3), c(1));
        assert_eq!(ball_volume_signed(5, -1), c(0));
    }

    #[test]
    fn large_volume_is_exact() {
        assert_eq!(ball_volume(300, 300), crate::exact::pow2(300));
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn intersections_match_enumeration() {
        assert_eq!(enumerate_intersection(4, 0b0000, 0b1100, 1), 2);
        assert_eq!(ball_intersection(4, 2, 1).unwrap(), c(2));
        assert_eq!(ball_intersection(10, 5, 2).unwrap(), c(0));
        assert_eq!(enumerate_intersection(3, 0, 1, 1), 2);
        assert_eq!(ball_intersection(3, 1, 1).unwrap(), c(2));
        assert_eq!(enumerate_intersection(7, 0, 0b111, 2), 6);
        assert_eq!(ball_intersection(7, 3, 2).unwrap(), c(6));
        // r = 0: two distinct centers never share the zero-radius ball.
        assert_eq!(ball_intersection(9, 1, 0).unwrap(), c(0));
    }

    #[test]
    fn intersection_rejects_bad_distance() {
        assert!(ball_intersection(5, 0, 2).is_err());
        assert!(ball_intersection(5, 6, 2).is_err());
    }

    #[test]
    fn chained_union() {
        assert_eq!(chained_union_upper(4, &c(2), 2, 1).unwrap(), c(8));
        assert_eq!(chained_union_upper(4, &c(1), 2, 1).unwrap(), c(5));
        assert_eq!(chained_union_upper(7, &c(3), 3, 2).unwrap(), c(75));
        assert!(chained_union_upper(4, &c(0), 2, 1).is_err());
        // the two-ball case is exact
        let union = (0u32..16)
            .filter(|x| x.count_ones() <= 1 || (x ^ 0b1100).count_ones() <= 1)
            .count();
        assert_eq!(union, 8);
    }

    #[test]
    fn intersection_structure_small_n() {
        for n in 1..=12u32 {
            for r in 0..=n {
                let v = ball_volume(n, r);
                let mut prev: Option<Count> = None;
                for d in 1..=n {
                    let t = ball_intersection(n, d, r).unwrap();
                    assert!(t <= v);
                    assert_eq!(t.is_zero(), d > 2 * r, "n={n} d={d} r={r}");
                    let oracle = enumerate_intersection(n, 0, (1u32 << d) - 1, r);
                    assert_eq!(t, c(oracle));
                    if d > r {
                        if let Some(p) = &prev {
                            assert!(&t <= p, "T not nonincreasing at n={n} d={d} r={r}");
                        }
                    }
                    prev = Some(t);
                }
            }
        }
    }

    #[test]
    fn entropy_values() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert!((binary_entropy(0.25).unwrap() - 0.8112781245).abs() < 1e-9);
        assert!(binary_entropy(-0.1).is_err());
        assert!(binary_entropy(f64::NAN).is_err());
    }

    #[test]
    fn entropy_inverse() {
        assert!((binary_entropy_inv(1.0).unwrap() - 0.5).abs() < 1e-12);
        assert!(binary_entropy_inv(0.0).unwrap().abs() < 1e-12);
        assert!((binary_entropy_inv(0.8112781245).unwrap() - 0.25).abs() < 1e-9);
        assert!(binary_entropy_inv(1.5).is_err());
        for i in 0..=1000 {
            let x = 0.5 * i as f64 / 1000.0;
            let back = binary_entropy_inv(binary_entropy(x).unwrap()).unwrap();
            assert!((back - x).abs() < 1e-9, "x={x} back={back}");
        }
    }

    #[test]
    fn gap_function() {
        assert!((entropy_gap_g(0.25, 0.25).unwrap() - 0.6225562489).abs() < 1e-9);
        assert!(entropy_gap_g(1e-6, 0.25).unwrap() > 0.0);
        let h = |x| binary_entropy(x).unwrap();
        let want = h(0.1) + h(0.3) - h(0.4);
        assert!((entropy_gap_g(0.1, 0.3).unwrap() - want).abs() < 1e-15);
        assert!(entropy_gap_g(0.0, 0.3).is_err());
        assert!(entropy_gap_g(0.2, 0.5).is_err());
    }

    #[test]
    fn concurrent_rows_agree() {
        let handles: Vec<_> = (0..8u32)
            .map(|i| std::thread::spawn(move || binomial(150 + i, 40)))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            let row = binomial_row(150 + i as u32);
            assert_eq!(got, row[40]);
        }
    }
}
