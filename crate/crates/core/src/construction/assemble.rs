use std::collections::VecDeque;

use num_traits::ToPrimitive;

use super::chain::{chain_in, chained_greedy};
use super::code::UepCode;
use super::greedy::{check_meets, place_multilevel, MaskCache};
use super::region::{ball_regions, cube_regions};
use super::space::{ball_masks, check_cap, PointSet};
use super::{Region, Word};
use crate::bounds::{packing_plan, ts_allocation, PackingCount, SplitRule, TwoLevelParams};
use crate::combinatorics::ball_volume;
use crate::{Error, Result};

/// A two-level code built from hosting regions plus a greedy fill.
#[derive(Debug, Clone, PartialEq)]
pub struct AssembledCode {
    pub code: UepCode,
    /// Class-A messages hosted by regions (`M`).
    pub hosted: usize,
    /// Class-A messages added in the leftover space (`A'`).
    pub filled: usize,
    /// Exact size of `∪ B(c_ij, d_A−1)` over the hosted codewords.
    pub hosted_union_volume: u64,
}

const UNSEEN: u8 = u8::MAX;

/// Smallest distance between two different regions, found by a multi-source
/// breadth-first search up to depth `limit`. `None` when every pair is
/// farther apart than that search reaches.
fn min_region_distance(n: u32, sets: &[PointSet], limit: u32) -> Option<u32> {
    let size = 1usize << n;
    let mut dist = vec![UNSEEN; size];
    let mut owner = vec![0u32; size];
    let mut queue = VecDeque::new();
    let mut best: Option<u32> = None;
    let mut record = |d: u32| best = Some(best.map_or(d, |b: u32| b.min(d)));
    for (i, s) in sets.iter().enumerate() {
        for x in s.iter() {
            let x = x as usize;
            if dist[x] == 0 {
                record(0);
                continue;
            }
            dist[x] = 0;
            owner[x] = i as u32;
            queue.push_back(x);
        }
    }
    let depth_cap = limit.min(UNSEEN as u32 - 1);
    while let Some(x) = queue.pop_front() {
        for bit in 0..n {
            let y = x ^ (1 << bit);
            if dist[y] == UNSEEN {
                if (dist[x] as u32) < depth_cap {
                    dist[y] = dist[x] + 1;
                    owner[y] = owner[x];
                    queue.push_back(y);
                }
            } else if owner[y] != owner[x] {
                record(dist[x] as u32 + dist[y] as u32 + 1);
            }
        }
    }
    best
}

/// Most points of `region` a single radius-`(d_B−1)` ball can cover.
fn intra_volume(region: &Region, n: u32, d_b: u32) -> num_bigint::BigUint {
    match region {
        Region::Cube { n_b, .. } => ball_volume(*n_b, d_b - 1),
        _ => ball_volume(n, d_b - 1),
    }
}

/// Hosts one class-A message in each region (its `B` class-B words chosen by
/// connected-set selection) and fills the rest of the space greedily.
///
/// Regions must be connected, pairwise at distance `≥ d_A`, and hold more
/// than `(B−1)` class-B exclusion balls. For cube regions the exclusion ball
/// is measured inside the cube.
pub fn assemble_two_level(p: &TwoLevelParams, regions: &[Region]) -> Result<AssembledCode> {
    let n = p.n;
    check_cap(n)?;
    let b =
        p.b.to_usize()
            .ok_or_else(|| Error::InvalidParams(format!("B = {} too large", p.b)))?;
    let mut sets = Vec::with_capacity(regions.len());
    for (i, region) in regions.iter().enumerate() {
        if region.n() != n {
            return Err(Error::InvalidParams(format!(
                "region {i} lives in dimension {}, expected {n}",
                region.n()
            )));
        }
        let set = region.to_point_set()?;
        if !set.is_connected() {
            return Err(Error::InvalidParams(format!("region {i} is not connected")));
        }
        let need = p.b_minus_one() * intra_volume(region, n, p.d_b);
        if num_bigint::BigUint::from(set.len()) <= need {
            return Err(Error::InvalidParams(format!(
                "region {i} has {} points, needs more than {need}",
                set.len()
            )));
        }
        sets.push(set);
    }
    if let Some(d) = min_region_distance(n, &sets, p.d_a) {
        if d < p.d_a {
            return Err(Error::InvalidParams(format!(
                "two regions are at distance {d} < d_A = {}",
                p.d_a
            )));
        }
    }

    let mut cache = MaskCache::default();
    let b_masks = cache.ball(n, p.d_b - 1).to_vec();
    let mut hosted_words = Vec::with_capacity(regions.len() * b);
    for set in &sets {
        let group = chain_in(set, b, &b_masks)
            .ok_or_else(|| Error::Internal("region ran dry during selection".into()))?;
        hosted_words.extend(group);
    }

    let mut free = PointSet::full(n);
    for &c in &hosted_words {
        free.remove_ball(c, cache.ball(n, p.d_a - 1));
    }
    let hosted_union_volume = (1u64 << n) - free.len();

    let class_b = num_bigint::BigUint::from(free.len());
    let reserve = p.b_minus_one() * ball_volume(n, p.d_b - 1);
    let filled = if class_b > reserve {
        let per = &p.b * ball_volume(n, p.d_a - 1);
        ((class_b - reserve - 1u8) / per + 1u8)
            .to_usize()
            .ok_or_else(|| Error::Internal("fill count overflow".into()))?
    } else {
        0
    };
    let fill_words = if filled > 0 {
        place_multilevel(&mut free, &[filled, b], &[p.d_a, p.d_b], &mut cache)
            .ok_or_else(|| Error::Internal("fill ran dry despite the budget".into()))?
    } else {
        Vec::new()
    };

    let hosted = regions.len();
    if hosted + filled == 0 {
        return Err(Error::Infeasible("no class-A message fits".into()));
    }
    let words = hosted_words
        .iter()
        .chain(&fill_words)
        .map(|&x| Word::from_index(n, x as u64))
        .collect();
    let code = UepCode::new(n, vec![hosted + filled, b], words)?;
    check_meets(&code, &[p.d_a, p.d_b])?;
    Ok(AssembledCode {
        code,
        hosted,
        filled,
        hosted_union_volume,
    })
}

/// Cube construction: a chained greedy class-A code of length `n_A` (from the
/// time-sharing split) supplies the cube prefixes.
pub fn cube_construction(p: &TwoLevelParams, rule: SplitRule) -> Result<AssembledCode> {
    check_cap(p.n)?;
    let alloc = ts_allocation(p.n, &p.b, p.d_b, rule)?;
    if p.d_a > alloc.n_a {
        return Err(Error::Infeasible(format!(
            "class-A block of length {} cannot reach distance {}",
            alloc.n_a, p.d_a
        )));
    }
    let prefixes: Vec<Word> = chained_greedy(alloc.n_a, p.d_a, usize::MAX)
        .into_iter()
        .map(|x| Word::from_index(alloc.n_a, x as u64))
        .collect();
    assemble_two_level(p, &cube_regions(&prefixes, alloc.n_b))
}

/// Ball construction: radius-`r_V` hosting balls around the centers of a
/// chained radius-`r_S` packing.
pub fn ball_construction(p: &TwoLevelParams, count: PackingCount) -> Result<AssembledCode> {
    check_cap(p.n)?;
    let plan = packing_plan(p)?;
    let target = plan
        .count(count)
        .to_usize()
        .ok_or_else(|| Error::Internal("packing count overflow".into()))?;
    let centers = super::chain::chained_ball_packing(p.n, plan.r_s, target)?;
    assemble_two_level(p, &ball_regions(&centers, plan.r_v))
}

/// `|∪ B(c, r)|` over `centers`, by enumeration.
pub fn union_volume(n: u32, centers: &[Word], r: u32) -> Result<u64> {
    check_cap(n)?;
    let masks = ball_masks(n, r);
    let mut covered = PointSet::empty(n);
    for c in centers {
        let c = c.to_index() as u32;
        for m in &masks {
            covered.insert(c ^ m);
        }
    }
    Ok(covered.len())
}
