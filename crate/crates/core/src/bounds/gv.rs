use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BoundKind, BoundReport, TwoLevelParams, UepParams};
use crate::combinatorics::{ball_intersection, ball_volume};
use crate::exact::{pow2, rational, rational_from_counts, to_signed, Count};
use crate::{Error, Result};

fn check_distance(n: u32, d: u32) -> Result<()> {
    if d == 0 || d > n {
        return Err(Error::InvalidParams(format!(
            "distance d = {d} must satisfy 1 <= d <= n = {n}"
        )));
    }
    Ok(())
}

/// Classic GV: a length-`n` code at distance `d` with at least `2ⁿ / V(n, d−1)` words.
pub fn gv_classic(n: u32, d: u32) -> Result<BoundReport> {
    check_distance(n, d)?;
    let value = rational_from_counts(&pow2(n), &ball_volume(n, d - 1));
    Ok(BoundReport::achievability(BoundKind::GvClassic, value, n))
}

/// Improved GV `G(n, d) = (2ⁿ − T(n,d,d−1)) / (V(n,d−1) − T(n,d,d−1))`.
pub fn gv_improved(n: u32, d: u32) -> Result<BoundReport> {
    check_distance(n, d)?;
    let t = ball_intersection(n, d, d - 1)?;
    let v = ball_volume(n, d - 1);
    if v <= t {
        return Err(Error::Infeasible(format!(
            "G({n}, {d}) has a nonpositive denominator"
        )));
    }
    let value = rational_from_counts(&(pow2(n) - &t), &(v - t));
    Ok(BoundReport::achievability(BoundKind::GvImproved, value, n))
}

/// `S(n, m, A₁ᵐ, d₁ᵐ) = Σᵢ (Π_{j>i} A_j)(A_i − 1) V(n, d_i − 1)`.
///
/// Any region `W ⊆ F₂ⁿ` with `|W| > S` contains a UEP code with these parameters.
pub fn multilevel_budget(p: &UepParams) -> Count {
    let mut total = Count::zero();
    let mut tail = Count::one();
    for (a, &d) in p.sizes().iter().zip(p.distances()).rev() {
        total += &tail * (a - 1u8) * ball_volume(p.n(), d - 1);
        tail *= a;
    }
    total
}

/// `(2ⁿ − (B−1)V(n,d_B−1)) / (B·V(n,d_A−1))`: the two-level specialization
/// of the multi-level budget, solved for `A`.
pub fn uep_union_bound(p: &TwoLevelParams) -> BoundReport {
    let n = p.n;
    let num = to_signed(&pow2(n)) - to_signed(&(p.b_minus_one() * ball_volume(n, p.d_b - 1)));
    let den = &p.b * ball_volume(n, p.d_a - 1);
    BoundReport::achievability(BoundKind::Union, rational(num, &den), n)
}

pub(crate) fn signed_diff(a: &Count, b: &Count) -> BigInt {
    to_signed(a) - to_signed(b)
}
