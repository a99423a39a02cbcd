use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use super::space::{ball_masks, check_cap, sphere_masks, PointSet};
use super::{Region, Word};
use crate::combinatorics::ball_volume;
use crate::exact::Count;
use crate::{Error, Result};

/// Picks `b` words of a connected region at pairwise distance `≥ d_b`, each
/// after the first at distance exactly `d_b` from an earlier one.
///
/// The next word is always the smallest point of `D` outside the covered
/// balls that has a neighbour in `D` ∩ covered. Such a point sits at
/// distance exactly `d_b` from the center covering that neighbour, and the
/// search never leaves `D`.
pub fn connected_set_select(region: &Region, b: &Count, d_b: u32) -> Result<Vec<Word>> {
    let n = region.n();
    check_cap(n)?;
    if d_b == 0 {
        return Err(Error::InvalidParams("d_B must be at least 1".into()));
    }
    let b = b
        .to_usize()
        .filter(|&b| b >= 1)
        .ok_or_else(|| Error::InvalidParams(format!("B = {b} out of range")))?;
    let domain = region.to_point_set()?;
    if !domain.is_connected() {
        return Err(Error::Disconnected);
    }
    let need = Count::from(b - 1) * ball_volume(n, d_b - 1);
    if Count::from(domain.len()) <= need {
        return Err(Error::Precondition(format!(
            "region size {} does not exceed (B-1)·V(n, d_B-1) = {need}",
            domain.len()
        )));
    }
    let masks = ball_masks(n, d_b - 1);
    let chosen = chain_in(&domain, b, &masks)
        .ok_or_else(|| Error::Internal("connected region ran dry".into()))?;
    Ok(to_words(n, &chosen))
}

/// Frontier selection inside a connected `domain`; `None` if it runs dry.
pub(crate) fn chain_in(domain: &PointSet, b: usize, masks: &[u32]) -> Option<Vec<u32>> {
    let n = domain.n();
    let mut covered = PointSet::empty(n);
    let mut frontier = BTreeSet::new();
    let mut chosen = Vec::with_capacity(b);
    let mut next = domain.first();
    while chosen.len() < b {
        let c = next?;
        chosen.push(c);
        for m in masks {
            let y = c ^ m;
            if !covered.insert(y) {
                continue;
            }
            frontier.remove(&y);
            if !domain.contains(y) {
                continue;
            }
            for i in 0..n {
                let z = y ^ (1 << i);
                if domain.contains(z) && !covered.contains(z) {
                    frontier.insert(z);
                }
            }
        }
        next = frontier.first().copied();
    }
    Some(chosen)
}

fn to_words(n: u32, points: &[u32]) -> Vec<Word> {
    points
        .iter()
        .map(|&x| Word::from_index(n, x as u64))
        .collect()
}

/// Greedy code at distance `d` grown from `0`: each new word is the smallest
/// point at distance exactly `d` from some earlier word and `≥ d` from all.
/// Without a limit it stops when no such point is left, which leaves the code
/// maximal.
pub(crate) fn chained_greedy(n: u32, d: u32, limit: usize) -> Vec<u32> {
    if limit == 0 {
        return Vec::new();
    }
    let blocked_masks = ball_masks(n, d.saturating_sub(1));
    let step_masks = sphere_masks(n, d);
    let mut blocked = PointSet::empty(n);
    let mut frontier = BTreeSet::new();
    let mut words = vec![0u32];
    loop {
        let a = *words.last().expect("nonempty");
        for mask in &blocked_masks {
            let y = a ^ mask;
            if blocked.insert(y) {
                frontier.remove(&y);
            }
        }
        for mask in &step_masks {
            let y = a ^ mask;
            if !blocked.contains(y) {
                frontier.insert(y);
            }
        }
        if words.len() == limit {
            break;
        }
        match frontier.pop_first() {
            Some(next) => words.push(next),
            None => break,
        }
    }
    words
}

/// Maximal chained greedy code of length `n` and distance `d`, optionally
/// truncated to `limit` words. Its size is at least the intersection-refined
/// GV guarantee.
pub fn chained_greedy_code(n: u32, d: u32, limit: Option<usize>) -> Result<Vec<Word>> {
    check_cap(n)?;
    if d == 0 {
        return Err(Error::InvalidParams("distance must be at least 1".into()));
    }
    Ok(to_words(
        n,
        &chained_greedy(n, d, limit.unwrap_or(usize::MAX)),
    ))
}

/// Greedy chained packing: up to `m` centers at pairwise distance
/// `≥ 2r+1`, each after the first at distance exactly `2r+1` from an earlier
/// one. Returns fewer than `m` centers when the frontier empties.
pub fn chained_ball_packing(n: u32, r: u32, m: usize) -> Result<Vec<Word>> {
    check_cap(n)?;
    Ok(to_words(n, &chained_greedy(n, 2 * r + 1, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chained_exactly(words: &[Word], d: u32) -> bool {
        (1..words.len()).all(|i| words[..i].iter().any(|w| w.distance(&words[i]) == d))
    }

    fn min_distance(words: &[Word]) -> u32 {
        let mut best = u32::MAX;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                best = best.min(words[i].distance(&words[j]));
            }
        }
        best
    }

    #[test]
    fn whole_space_pair() {
        let words = connected_set_select(
            &Region::Ball {
                center: Word::zeros(5),
                radius: 5,
            },
            &Count::from(2u32),
            2,
        )
        .unwrap();
        assert_eq!(words.len(), 2);
        assert_eq!(words[0].distance(&words[1]), 2);
    }

    #[test]
    fn inside_ball() {
        // V(10,3) = 176 > 3·V(10,1) = 33
        let center: Word = "0110100101".parse().unwrap();
        let region = Region::Ball { center, radius: 3 };
        let words = connected_set_select(&region, &Count::from(4u32), 2).unwrap();
        assert!(words.iter().all(|w| region.contains(w)));
        assert!(min_distance(&words) >= 2);
        assert!(chained_exactly(&words, 2));
    }

    #[test]
    fn single_word() {
        let region = Region::Cube {
            prefix: "101".parse().unwrap(),
            n_b: 2,
        };
        let words = connected_set_select(&region, &Count::from(1u32), 3).unwrap();
        assert_eq!(words, vec!["10100".parse().unwrap()]);
    }

    #[test]
    fn errors() {
        let two =
            Region::explicit(3, vec!["000".parse().unwrap(), "111".parse().unwrap()]).unwrap();
        assert_eq!(
            connected_set_select(&two, &Count::from(1u32), 1),
            Err(Error::Disconnected)
        );
        let small = Region::Ball {
            center: Word::zeros(6),
            radius: 1,
        };
        assert!(matches!(
            connected_set_select(&small, &Count::from(2u32), 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn packing_examples() {
        let all = chained_ball_packing(3, 0, 8).unwrap();
        assert_eq!(all.len(), 8);
        assert!(chained_exactly(&all, 1));

        let hamming = chained_ball_packing(7, 1, 16).unwrap();
        assert_eq!(hamming.len(), 16);
        assert!(min_distance(&hamming) >= 3);
        assert!(chained_exactly(&hamming, 3));

        let pair = chained_ball_packing(4, 1, 2).unwrap();
        assert_eq!(pair.len(), 2);
        assert_eq!(pair[0].distance(&pair[1]), 3);

        // frontier exhausts before the target
        assert_eq!(chained_ball_packing(4, 1, 10).unwrap().len(), 2);
        assert!(chained_ball_packing(5, 0, 0).unwrap().is_empty());
    }

    #[test]
    fn chained_code_meets_refined_gv() {
        use crate::bounds::gv_improved;
        for n in 1..=12u32 {
            for d in 1..=n {
                let code = chained_greedy_code(n, d, None).unwrap();
                assert!(min_distance(&code) >= d);
                assert!(chained_exactly(&code, d));
                if let Ok(g) = gv_improved(n, d) {
                    assert!(Count::from(code.len()) >= g.guaranteed_size, "n={n} d={d}");
                }
            }
        }
    }
}
