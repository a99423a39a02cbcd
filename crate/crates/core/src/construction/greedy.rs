use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::code::{verify_profile, UepCode};
use super::space::{ball_masks, check_cap, PointSet};
use super::{Region, Word};
use crate::bounds::{multilevel_budget, UepParams};
use crate::exact::Count;
use crate::{Error, Result};

pub(crate) fn available_set(n: u32, region: Option<&Region>) -> Result<PointSet> {
    check_cap(n)?;
    match region {
        None => Ok(PointSet::full(n)),
        Some(r) if r.n() != n => Err(Error::InvalidParams(format!(
            "region lives in dimension {}, expected {n}",
            r.n()
        ))),
        Some(r) => r.to_point_set(),
    }
}

#[derive(Default)]
pub(crate) struct MaskCache {
    masks: HashMap<(u32, u32), Vec<u32>>,
}

impl MaskCache {
    pub fn ball(&mut self, n: u32, r: u32) -> &[u32] {
        self.masks.entry((n, r)).or_insert_with(|| ball_masks(n, r))
    }
}

/// Places `count` points of `avail` at pairwise distance `≥ d`, each the
/// smallest remaining point, removing radius-`(d−1)` balls as it goes.
pub(crate) fn place_greedy(
    avail: &mut PointSet,
    count: usize,
    d: u32,
    cache: &mut MaskCache,
) -> Vec<u32> {
    let n = avail.n();
    let masks = cache.ball(n, d.saturating_sub(1));
    let mut out = Vec::with_capacity(count.min(avail.len() as usize));
    let mut cursor = 0;
    while out.len() < count {
        let Some(x) = avail.first_from(cursor) else {
            break;
        };
        out.push(x);
        avail.remove_ball(x, masks);
        cursor = x;
    }
    out
}

/// Multilevel greedy placement inside `avail`. Returns point indices in
/// mixed-radix message order, or `None` if the set ran dry.
pub(crate) fn place_multilevel(
    avail: &mut PointSet,
    shape: &[usize],
    distances: &[u32],
    cache: &mut MaskCache,
) -> Option<Vec<u32>> {
    let total: usize = shape.iter().product();
    let mut book = vec![0u32; total];
    let mut tail: usize = total;
    for (&a, &d) in shape.iter().zip(distances) {
        tail /= a;
        if a == 1 {
            continue;
        }
        // tuples (0,..,0, a_i ≥ 1, *) occupy ranks tail..a·tail
        let need = (a - 1) * tail;
        let placed = place_greedy(avail, need, d, cache);
        if placed.len() < need {
            return None;
        }
        book[tail..a * tail].copy_from_slice(&placed);
    }
    book[0] = avail.first()?;
    Some(book)
}

pub(crate) fn to_usize_sizes(sizes: &[Count]) -> Result<Vec<usize>> {
    sizes
        .iter()
        .map(|a| {
            a.to_usize()
                .ok_or_else(|| Error::InvalidParams(format!("level size {a} too large")))
        })
        .collect()
}

/// Builds a multilevel UEP code by greedy ball carving inside `region`
/// (the whole space when `None`).
///
/// Success is guaranteed when the region is larger than the multilevel
/// budget. Below it the greedy still runs, and running dry is reported as a
/// budget precondition error.
///
/// Level 1 messages other than 0 are placed first, pairwise at distance
/// `d₁`; the remaining levels are then built recursively in what is left.
pub fn greedy_multilevel(p: &UepParams, region: Option<&Region>) -> Result<UepCode> {
    let n = p.n();
    let mut avail = available_set(n, region)?;
    let budget = multilevel_budget(p);
    let size = avail.len();
    let total: Count = p.sizes().iter().product();
    if total > Count::from(size) {
        return Err(Error::Precondition(format!(
            "{total} codewords cannot fit in a region of {size} points (budget {budget})"
        )));
    }
    let shape = to_usize_sizes(p.sizes())?;
    let book = place_multilevel(&mut avail, &shape, p.distances(), &mut MaskCache::default())
        .ok_or_else(|| {
            if Count::from(size) <= budget {
                Error::Precondition(format!(
                    "region size {size} does not exceed the budget {budget}"
                ))
            } else {
                Error::Internal("greedy ran out of points despite the budget".into())
            }
        })?;
    let words = book
        .iter()
        .map(|&x| Word::from_index(n, x as u64))
        .collect();
    let code = UepCode::new(n, shape, words)?;
    check_meets(&code, p.distances())?;
    Ok(code)
}

pub(crate) fn check_meets(code: &UepCode, required: &[u32]) -> Result<()> {
    let profile = verify_profile(code);
    if super::code::meets(&profile, required) {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "constructed profile {profile:?} misses {required:?}"
        )))
    }
}

/// Lexicographic greedy code at minimum distance `d` inside `region`,
/// stopping after `limit` words if given.
pub fn greedy_code(
    n: u32,
    d: u32,
    limit: Option<usize>,
    region: Option<&Region>,
) -> Result<Vec<Word>> {
    if d == 0 {
        return Err(Error::InvalidParams("distance must be at least 1".into()));
    }
    let mut avail = available_set(n, region)?;
    let cap = limit.unwrap_or(usize::MAX);
    let placed = place_greedy(&mut avail, cap, d, &mut MaskCache::default());
    Ok(placed
        .into_iter()
        .map(|x| Word::from_index(n, x as u64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, sizes: &[u64], d: &[u32]) -> UepParams {
        UepParams::new(
            n,
            sizes.iter().map(|&a| Count::from(a)).collect(),
            d.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn single_pair() {
        let code = greedy_multilevel(&params(3, &[2], &[3]), None).unwrap();
        assert_eq!(code.words().len(), 2);
        assert_eq!(code.profile(), &[Some(3)]);
    }

    #[test]
    fn two_by_two() {
        let code = greedy_multilevel(&params(3, &[2, 2], &[2, 1]), None).unwrap();
        assert_eq!(code.len(), 4);
        assert!(code.meets(&[2, 1]));
    }

    #[test]
    fn two_by_four() {
        let code = greedy_multilevel(&params(8, &[2, 4], &[3, 2]), None).unwrap();
        assert!(code.meets(&[3, 2]));
        let again = greedy_multilevel(&params(8, &[2, 4], &[3, 2]), None).unwrap();
        assert_eq!(code, again);
    }

    #[test]
    fn below_budget() {
        // S = 8·1·V(7,2) + 7·V(7,1) = 288 ≥ 128, yet the greedy finds the Hamming code
        let code = greedy_multilevel(&params(7, &[2, 8], &[3, 2]), None).unwrap();
        assert!(code.meets(&[3, 3]));
        let err = greedy_multilevel(&params(5, &[4, 4], &[3, 2]), None).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)), "{err:?}");
        let err = greedy_multilevel(&params(3, &[3, 3], &[2, 1]), None).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)), "{err:?}");
    }

    #[test]
    fn three_levels() {
        // S = 4·V(10,3) + 2·V(10,2) + V(10,1) = 827 < 1024
        let code = greedy_multilevel(&params(10, &[2, 2, 2], &[4, 3, 2]), None).unwrap();
        assert!(code.meets(&[4, 3, 2]));
    }

    #[test]
    fn region_restricts() {
        let region = Region::Ball {
            center: Word::zeros(8),
            radius: 3,
        };
        let code = greedy_multilevel(&params(8, &[1, 4], &[3, 2]), Some(&region)).unwrap();
        assert!(code.words().iter().all(|w| region.contains(w)));
        assert!(code.meets(&[3, 2]));
    }

    #[test]
    fn lexicode_is_hamming_sized() {
        // the distance-3 lexicode of length 7 is the Hamming code
        let words = greedy_code(7, 3, None, None).unwrap();
        assert_eq!(words.len(), 16);
        assert_eq!(greedy_code(7, 3, Some(5), None).unwrap().len(), 5);
    }
}
