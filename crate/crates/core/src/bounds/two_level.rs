use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gv::{gv_improved, signed_diff};
use super::{BoundKind, BoundReport, TwoLevelParams};
use crate::combinatorics::{ball_volume, chained_union_upper};
use crate::exact::{
    ceil_nonneg, clamp_nonneg, floor_nonneg, pow2, rational, rational_from_counts, Count, Rational,
};
use crate::{Error, Result};

/// How the class-B block length of a time-sharing code is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitRule {
    /// `min{m ≥ d_B : 2^m / V(m, d_B−1) > B − 1}`.
    Strict,
    /// `min{m ≥ d_B : B ≤ 2^m / V(m, d_B−1)}`; the rule behind the short-length table.
    #[default]
    NonStrict,
}

impl SplitRule {
    fn admits(self, m: u32, b: &Count, d_b: u32) -> bool {
        let vol = ball_volume(m, d_b - 1);
        match self {
            SplitRule::Strict => pow2(m) > (b - 1u8) * vol,
            SplitRule::NonStrict => b * vol <= pow2(m),
        }
    }
}

/// Length split `n = n_A + n_B` of a time-sharing code.
#[derive(Debug, Clone, PartialEq)]
pub struct TsAllocation {
    pub n_a: u32,
    pub n_b: u32,
    pub alpha_star: f64,
}

/// Smallest class-B length able to carry `B` messages at distance `d_B` by GV.
///
/// The scan starts at `m = d_B`: a class-B block never gets fewer than `d_B`
/// coordinates, which also fixes `n_B = d_B` when `B = 1`.
pub fn ts_allocation(n: u32, b: &Count, d_b: u32, rule: SplitRule) -> Result<TsAllocation> {
    if d_b == 0 || b.is_zero() {
        return Err(Error::InvalidParams("need B >= 1 and d_B >= 1".into()));
    }
    let n_b = (d_b..=n).find(|&m| rule.admits(m, b, d_b)).ok_or_else(|| {
        Error::Infeasible(format!(
            "no class-B length <= {n} carries B = {b} messages at distance {d_b}"
        ))
    })?;
    let n_a = n - n_b;
    Ok(TsAllocation {
        n_a,
        n_b,
        alpha_star: n_a as f64 / n as f64,
    })
}

/// GV guarantees `(G(n_A, d_A), G(n_B, d_B))` for the two component codes of a
/// time-sharing code.
pub fn ts_gv(n_a: u32, n_b: u32, d_a: u32, d_b: u32) -> Result<(BoundReport, BoundReport)> {
    let relabel = |mut r: BoundReport, kind| {
        r.kind = kind;
        r
    };
    let a = gv_improved(n_a, d_a)?;
    let b = gv_improved(n_b, d_b)?;
    Ok((
        relabel(a, BoundKind::TimeSharingA),
        relabel(b, BoundKind::TimeSharingB),
    ))
}

/// Class-A GV size of the time-sharing code sharing `p`'s total length.
pub fn ts_class_a(p: &TwoLevelParams, rule: SplitRule) -> Result<BoundReport> {
    let alloc = ts_allocation(p.n, &p.b, p.d_b, rule)?;
    if p.d_a > alloc.n_a {
        return Err(Error::Infeasible(format!(
            "class-A block of length {} cannot reach distance {}",
            alloc.n_a, p.d_a
        )));
    }
    let mut r = gv_improved(alloc.n_a, p.d_a)?;
    r.kind = BoundKind::TimeSharingA;
    // rate over the full length, for comparison with UEP bounds
    r.log2_rate = crate::exact::log2_rational(&r.exact_value) / p.n as f64;
    Ok(r)
}

/// `M + max((2ⁿ − (B−1)V(n,d_B−1) − used) / (B·V(n,d_A−1)), 0)`.
fn hosted_plus_fill(p: &TwoLevelParams, hosted: &Count, used: &Count) -> Rational {
    let n = p.n;
    let free = signed_diff(&pow2(n), &(p.b_minus_one() * ball_volume(n, p.d_b - 1)))
        - BigInt::from(used.clone());
    let fill = rational(free, &(&p.b * ball_volume(n, p.d_a - 1)));
    Rational::from_integer(BigInt::from(hosted.clone())) + clamp_nonneg(fill)
}

/// `I(n, B, d_B, d_A−1)`: union volume of the class-A exclusion balls around
/// one chained group of `B` class-B codewords.
fn group_union(p: &TwoLevelParams) -> Result<Count> {
    if p.d_b > p.n {
        // a single class-B codeword is the only chain possible
        if p.b.is_one() {
            return Ok(ball_volume(p.n, p.d_a - 1));
        }
        return Err(Error::Infeasible(format!(
            "d_B = {} exceeds n = {}",
            p.d_b, p.n
        )));
    }
    chained_union_upper(p.n, &p.b, p.d_b, p.d_a - 1)
}

/// Cube-region bound: each class-A word of a GV time-sharing code spans the
/// cube `{prefix} × F₂^{n_B}`, the remainder is filled greedily.
pub fn uep_cube_bound(p: &TwoLevelParams, rule: SplitRule) -> Result<BoundReport> {
    let ts = ts_class_a(p, rule)?;
    let hosted = ts.guaranteed_size;
    let used = &hosted * group_union(p)?;
    let value = hosted_plus_fill(p, &hosted, &used);
    Ok(BoundReport::achievability(BoundKind::Cube, value, p.n))
}

/// Radii and packing counts for ball-shaped hosting regions.
#[derive(Debug, Clone, PartialEq)]
pub struct PackingPlan {
    /// Smallest radius whose ball holds a chained class-B group.
    pub r_v: u32,
    /// `r_V + ⌈d_A/2⌉`, the radius of the disjoint packing balls.
    pub r_s: u32,
    /// `⌈2ⁿ / V(n, 2r_S)⌉`, a certified lower bound on the packing number.
    pub m_s_lower: Count,
    /// `⌊2ⁿ / V(n, r_S)⌋`, the sphere-packing upper bound on it.
    pub m_s_upper: Count,
}

/// Which packing count drives the ball-region bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PackingCount {
    #[default]
    Certified,
    /// `2ⁿ / V(n, r_S)` used as if it were a lower bound. Not certified.
    Optimistic,
}

impl PackingPlan {
    pub fn count(&self, which: PackingCount) -> &Count {
        match which {
            PackingCount::Certified => &self.m_s_lower,
            PackingCount::Optimistic => &self.m_s_upper,
        }
    }
}

pub fn packing_plan(p: &TwoLevelParams) -> Result<PackingPlan> {
    let n = p.n;
    let need = p.b_minus_one() * ball_volume(n, p.d_b - 1);
    let r_v = (0..=n).find(|&r| ball_volume(n, r) > need).ok_or_else(|| {
        Error::Infeasible(format!("B = {} class-B words do not fit in F2^{n}", p.b))
    })?;
    let r_s = r_v + p.d_a.div_ceil(2);
    let space = pow2(n);
    let m_s_lower = ceil_nonneg(&rational_from_counts(&space, &ball_volume(n, 2 * r_s)));
    let m_s_upper = floor_nonneg(&rational_from_counts(&space, &ball_volume(n, r_s)));
    Ok(PackingPlan {
        r_v,
        r_s,
        m_s_lower,
        m_s_upper,
    })
}

/// Ball-region bound with `m_s` hosting balls of radius `r_V`.
pub fn uep_ball_bound(p: &TwoLevelParams, m_s: &Count) -> Result<BoundReport> {
    if m_s.is_zero() {
        return Err(Error::InvalidParams("packing count must be >= 1".into()));
    }
    let used = m_s * group_union(p)?;
    let value = hosted_plus_fill(p, m_s, &used);
    Ok(BoundReport::achievability(BoundKind::Ball, value, p.n))
}

/// Enlargement bound: the class-A exclusion zone of each hosting ball is
/// covered by one ball of radius `r_V + d_A − 1`, and those enlarged balls
/// are chained at distance `2r_S + 1`.
pub fn uep_enlargement_bound(p: &TwoLevelParams, m_s: &Count) -> Result<BoundReport> {
    if m_s.is_zero() {
        return Err(Error::InvalidParams("packing count must be >= 1".into()));
    }
    let plan = packing_plan(p)?;
    let radius = plan.r_v + p.d_a - 1;
    let chain = 2 * plan.r_s + 1;
    let used = if m_s.is_one() {
        ball_volume(p.n, radius)
    } else if chain > p.n {
        return Err(Error::Infeasible(format!(
            "{m_s} balls cannot be chained at distance {chain} > n = {}",
            p.n
        )));
    } else {
        chained_union_upper(p.n, m_s, chain, radius)?
    };
    let value = hosted_plus_fill(p, m_s, &used);
    Ok(BoundReport::achievability(
        BoundKind::Enlargement,
        value,
        p.n,
    ))
}

/// Sphere-packing converse `A ≤ 2ⁿ / (B·V(n, ⌊(d_B−1)/2⌋))`, from the fact
/// that all `A·B` codewords are pairwise at distance at least `d_B`.
pub fn hamming_converse(p: &TwoLevelParams) -> BoundReport {
    let den = &p.b * ball_volume(p.n, (p.d_b - 1) / 2);
    BoundReport::converse(
        BoundKind::Hamming,
        rational_from_counts(&pow2(p.n), &den),
        p.n,
    )
}

/// Equal-protection GV: one code of `A·B` words at distance `d_A`,
/// `A ≥ 2ⁿ / (B·V(n, d_A−1))`.
///
/// GV certifies `⌈2ⁿ/V⌉` words, i.e. `⌊⌈2ⁿ/V⌉ / B⌋` complete groups; that is
/// the guaranteed size, not the ceiling of the exact value.
pub fn eep_bound(p: &TwoLevelParams) -> BoundReport {
    let space = pow2(p.n);
    let vol = ball_volume(p.n, p.d_a - 1);
    let words = ceil_nonneg(&rational_from_counts(&space, &vol));
    let mut report = BoundReport::achievability(
        BoundKind::Eep,
        rational_from_counts(&space, &(&p.b * vol)),
        p.n,
    );
    report.guaranteed_size = words / &p.b;
    report
}
