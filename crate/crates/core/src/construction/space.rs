//! Bitset view of F₂ⁿ for explicit enumeration (`n ≤ ENUMERATION_CAP`).

use super::{Word, ENUMERATION_CAP};
use crate::{Error, Result};

pub(crate) fn check_cap(n: u32) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "blocklength",
            value: n as u64,
            cap: ENUMERATION_CAP as u64,
        });
    }
    Ok(())
}

/// Subset of F₂ⁿ, points addressed by their index form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PointSet {
    n: u32,
    bits: Vec<u64>,
    len: u64,
}

impl PointSet {
    pub fn empty(n: u32) -> Self {
        let size = 1u64 << n;
        Self {
            n,
            bits: vec![0; size.div_ceil(64) as usize],
            len: 0,
        }
    }

    pub fn full(n: u32) -> Self {
        let mut s = Self::empty(n);
        let size = 1u64 << n;
        for (k, limb) in s.bits.iter_mut().enumerate() {
            let start = k as u64 * 64;
            let take = (size - start).min(64);
            *limb = if take == 64 {
                u64::MAX
            } else {
                (1u64 << take) - 1
            };
        }
        s.len = size;
        s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.bits[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    /// Returns `true` if `x` was absent.
    #[inline]
    pub fn insert(&mut self, x: u32) -> bool {
        let limb = &mut self.bits[(x >> 6) as usize];
        let mask = 1u64 << (x & 63);
        let fresh = *limb & mask == 0;
        *limb |= mask;
        self.len += fresh as u64;
        fresh
    }

    /// Returns `true` if `x` was present.
    #[inline]
    pub fn remove(&mut self, x: u32) -> bool {
        let limb = &mut self.bits[(x >> 6) as usize];
        let mask = 1u64 << (x & 63);
        let present = *limb & mask != 0;
        *limb &= !mask;
        self.len -= present as u64;
        present
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter().enumerate().flat_map(|(k, &limb)| {
            let base = (k as u32) << 6;
            BitIter(limb).map(move |b| base + b)
        })
    }

    pub fn first(&self) -> Option<u32> {
        self.first_from(0)
    }

    /// Smallest member `≥ start`.
    pub fn first_from(&self, start: u32) -> Option<u32> {
        let mut k = (start >> 6) as usize;
        let mut limb = *self.bits.get(k)? & (u64::MAX << (start & 63));
        loop {
            if limb != 0 {
                return Some(((k as u32) << 6) + limb.trailing_zeros());
            }
            k += 1;
            limb = *self.bits.get(k)?;
        }
    }

    /// Removes every point within distance `r` of `center`, given the ball masks.
    pub fn remove_ball(&mut self, center: u32, masks: &[u32]) {
        for m in masks {
            self.remove(center ^ m);
        }
    }

    /// `self ∩= other`.
    pub fn intersect_with(&mut self, other: &PointSet) {
        let mut len = 0;
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
            len += a.count_ones() as u64;
        }
        self.len = len;
    }

    pub fn from_words<'a>(n: u32, words: impl IntoIterator<Item = &'a Word>) -> PointSet {
        let mut s = PointSet::empty(n);
        for w in words {
            s.insert(w.to_index() as u32);
        }
        s
    }

    pub fn to_words(&self) -> Vec<Word> {
        self.iter()
            .map(|x| Word::from_index(self.n, x as u64))
            .collect()
    }

    /// Breadth-first reachability along unit Hamming steps inside the set.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.first() else {
            return true;
        };
        let mut seen = PointSet::empty(self.n);
        seen.insert(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.n {
                let y = x ^ (1 << i);
                if self.contains(y) && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.len() == self.len()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// All `n`-bit masks of weight exactly `w`, ascending.
pub(crate) fn sphere_masks(n: u32, w: u32) -> Vec<u32> {
    if w > n {
        return Vec::new();
    }
    if w == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    // Gosper's hack
    let mut x: u64 = (1u64 << w) - 1;
    let limit = 1u64 << n;
    while x < limit {
        out.push(x as u32);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// All `n`-bit masks of weight at most `r`, by increasing weight.
pub(crate) fn ball_masks(n: u32, r: u32) -> Vec<u32> {
    (0..=r.min(n)).flat_map(|w| sphere_masks(n, w)).collect()
}
