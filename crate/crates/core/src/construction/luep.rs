use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::code::UepCode;
use super::word::{LIMBS, MAX_WORD_LEN};
use super::Word;
use crate::combinatorics::ball_volume;
use crate::exact::{pow2, rational_from_counts, rational_to_f64, Count};
use crate::{Error, Result};

/// Largest `k_A + k_B` whose message set is enumerated.
pub const MAX_INFO_BITS: u32 = 24;

/// Random linear two-level code search parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSearchParams {
    pub n: u32,
    pub k_a: u32,
    pub k_b: u32,
    pub d_a: u32,
    pub d_b: u32,
    pub seed: u64,
    pub max_trials: u64,
}

impl LinearSearchParams {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_WORD_LEN {
            return Err(Error::InvalidParams(format!("n = {} out of range", self.n)));
        }
        if self.k_a + self.k_b > self.n {
            return Err(Error::InvalidParams(format!(
                "k_A + k_B = {} exceeds n = {}",
                self.k_a + self.k_b,
                self.n
            )));
        }
        if self.k_a + self.k_b > MAX_INFO_BITS {
            return Err(Error::CapExceeded {
                what: "information bits",
                value: (self.k_a + self.k_b) as u64,
                cap: MAX_INFO_BITS as u64,
            });
        }
        if self.d_a == 0 || self.d_b == 0 {
            return Err(Error::InvalidParams("distances must be at least 1".into()));
        }
        Ok(())
    }

    /// Expected number of bad messages times `2ⁿ`:
    /// `B(A−1)V(n,d_A−1) + (B−1)V(n,d_B−1)`.
    pub fn bad_volume(&self) -> Count {
        let a = pow2(self.k_a);
        let b = pow2(self.k_b);
        &b * (a - 1u8) * ball_volume(self.n, self.d_a - 1)
            + (b - 1u8) * ball_volume(self.n, self.d_b - 1)
    }

    /// Per-trial success probability lower bound `1 − bad_volume / 2ⁿ`
    /// (negative when the condition fails).
    pub fn success_lower_bound(&self) -> f64 {
        1.0 - rational_to_f64(&rational_from_counts(&self.bad_volume(), &pow2(self.n)))
    }
}

/// A linear code given by `k_A + k_B` generator rows; the first `k_A` rows
/// carry the class-A bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearUepCode {
    pub n: u32,
    pub k_a: u32,
    pub k_b: u32,
    pub rows: Vec<Word>,
}

impl LinearUepCode {
    fn k(&self) -> u32 {
        self.k_a + self.k_b
    }

    /// `uG` for `u = (a << k_B) | b`, the leading bit of `u` selecting row 0.
    pub fn encode(&self, u: u64) -> Word {
        let k = self.k();
        let mut w = Word::zeros(self.n);
        for (i, row) in self.rows.iter().enumerate() {
            if u >> (k - 1 - i as u32) & 1 == 1 {
                w = w.xor(row);
            }
        }
        w
    }

    /// Checks every nonzero message: weight `≥ d_A` when the class-A part is
    /// nonzero, `≥ d_B` otherwise. Returns the first failing message.
    pub fn first_violation(&self, d_a: u32, d_b: u32) -> Option<u64> {
        let k = self.k();
        let mut w = Word::zeros(self.n);
        // Gray-code walk: one row added per step
        for i in 1u64..1 << k {
            let bit = i.trailing_zeros();
            w = w.xor(&self.rows[(k - 1 - bit) as usize]);
            let u = i ^ (i >> 1);
            let need = if u >> self.k_b != 0 { d_a } else { d_b };
            if w.weight() < need {
                return Some(u);
            }
        }
        None
    }

    pub fn to_uep_code(&self) -> Result<UepCode> {
        let a = 1usize << self.k_a;
        let b = 1usize << self.k_b;
        let words = (0..(a * b) as u64).map(|u| self.encode(u)).collect();
        UepCode::new(self.n, vec![a, b], words)
    }
}

/// Draws the generator of trial `trial`: i.i.d. fair bits from a ChaCha8
/// stream keyed by `(seed, trial)`.
pub fn luep_trial(q: &LinearSearchParams, trial: u64) -> LinearUepCode {
    let mut rng = ChaCha8Rng::seed_from_u64(q.seed);
    rng.set_stream(trial);
    let rows = (0..q.k_a + q.k_b)
        .map(|_| {
            let mut limbs = [0u64; LIMBS];
            for limb in limbs.iter_mut().take(q.n.div_ceil(64) as usize) {
                *limb = rng.gen();
            }
            Word::from_raw_limbs(q.n, limbs)
        })
        .collect();
    LinearUepCode {
        n: q.n,
        k_a: q.k_a,
        k_b: q.k_b,
        rows,
    }
}

/// Result of a successful search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LuepFound {
    pub code: LinearUepCode,
    /// Index of the successful trial.
    pub trial: u64,
}

/// Tries seeded random generators until one meets `(d_A, d_B)`.
pub fn random_luep_search(q: &LinearSearchParams) -> Result<LuepFound> {
    q.validate()?;
    let bad = q.bad_volume();
    let space = pow2(q.n);
    if bad >= space {
        return Err(Error::Precondition(format!(
            "B(A-1)V(n,d_A-1) + (B-1)V(n,d_B-1) = {bad} is not below 2^n = {space}"
        )));
    }
    for trial in 0..q.max_trials {
        let code = luep_trial(q, trial);
        if code.first_violation(q.d_a, q.d_b).is_none() {
            return Ok(LuepFound { code, trial });
        }
    }
    Err(Error::NotFound {
        trials: q.max_trials,
        success_lower_bound: q.success_lower_bound(),
    })
}
