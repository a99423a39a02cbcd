use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Longest supported word.
pub const MAX_WORD_LEN: u32 = 256;

pub(crate) const LIMBS: usize = (MAX_WORD_LEN / 64) as usize;

/// A binary vector of fixed length `n ≤ 256`.
///
/// Coordinate 0 is the most significant: the derived ordering on words of
/// equal length is lexicographic on their `{0,1}` strings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u16,
    limbs: [u64; LIMBS],
}

impl Word {
    pub fn zeros(n: u32) -> Self {
        assert!(n <= MAX_WORD_LEN, "word length {n} exceeds {MAX_WORD_LEN}");
        Self {
            len: n as u16,
            limbs: [0; LIMBS],
        }
    }

    pub fn len(&self) -> u32 {
        self.len as u32
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn locate(i: u32) -> (usize, u32) {
        ((i / 64) as usize, 63 - i % 64)
    }

    pub fn get(&self, i: u32) -> bool {
        assert!(i < self.len(), "coordinate {i} out of range");
        let (limb, bit) = Self::locate(i);
        self.limbs[limb] >> bit & 1 == 1
    }

    pub fn set(&mut self, i: u32, value: bool) {
        assert!(i < self.len(), "coordinate {i} out of range");
        let (limb, bit) = Self::locate(i);
        if value {
            self.limbs[limb] |= 1 << bit;
        } else {
            self.limbs[limb] &= !(1 << bit);
        }
    }

    pub fn flip(&mut self, i: u32) {
        let v = self.get(i);
        self.set(i, !v);
    }

    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    pub fn distance(&self, other: &Word) -> u32 {
        assert_eq!(
            self.len, other.len,
            "distance between words of different lengths"
        );
        self.limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum()
    }

    pub fn xor(&self, other: &Word) -> Word {
        assert_eq!(self.len, other.len, "xor of words of different lengths");
        let mut out = *self;
        for (o, b) in out.limbs.iter_mut().zip(&other.limbs) {
            *o ^= b;
        }
        out
    }

    /// The word whose string is the `n`-bit binary expansion of `index`.
    pub fn from_index(n: u32, index: u64) -> Self {
        assert!(n <= 64, "index form needs n <= 64");
        let mut w = Self::zeros(n);
        if n > 0 {
            w.limbs[0] = index << (64 - n);
        }
        w
    }

    /// Inverse of [`Word::from_index`].
    pub fn to_index(&self) -> u64 {
        assert!(self.len <= 64, "index form needs n <= 64");
        if self.len == 0 {
            0
        } else {
            self.limbs[0] >> (64 - self.len)
        }
    }

    /// Concatenation `self ‖ tail`.
    pub fn concat(&self, tail: &Word) -> Word {
        let mut out = Word::zeros(self.len() + tail.len());
        for i in 0..self.len() {
            out.set(i, self.get(i));
        }
        for i in 0..tail.len() {
            out.set(self.len() + i, tail.get(i));
        }
        out
    }

    pub(crate) fn from_raw_limbs(n: u32, limbs: [u64; LIMBS]) -> Self {
        let mut w = Self {
            len: n as u16,
            limbs,
        };
        w.clear_tail();
        w
    }

    fn clear_tail(&mut self) {
        let n = self.len();
        for (k, limb) in self.limbs.iter_mut().enumerate() {
            let start = k as u32 * 64;
            if start >= n {
                *limb = 0;
            } else if n - start < 64 {
                *limb &= !(u64::MAX >> (n - start));
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.len();
        if n > MAX_WORD_LEN as usize {
            return Err(Error::InvalidParams(format!(
                "word of length {n} exceeds {MAX_WORD_LEN}"
            )));
        }
        let mut w = Word::zeros(n as u32);
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => w.set(i as u32, true),
                other => {
                    return Err(Error::InvalidParams(format!(
                        "invalid bit {other:?} in word {s:?}"
                    )))
                }
            }
        }
        Ok(w)
    }
}
