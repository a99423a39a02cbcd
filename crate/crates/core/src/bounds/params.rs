use num_traits::{One, Zero};

use crate::exact::{log2_count, pow2, Count};
use crate::{Error, Result};

/// A multi-level problem: message classes of sizes `A₁..A_m` with
/// per-class distances `d₁ ≥ … ≥ d_m ≥ 1` at blocklength `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UepParams {
    n: u32,
    sizes: Vec<Count>,
    distances: Vec<u32>,
}

impl UepParams {
    pub fn new(n: u32, sizes: Vec<Count>, distances: Vec<u32>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidParams(
                "at least one level is required".into(),
            ));
        }
        if sizes.len() != distances.len() {
            return Err(Error::InvalidParams(format!(
                "{} sizes but {} distances",
                sizes.len(),
                distances.len()
            )));
        }
        if sizes.iter().any(Zero::is_zero) {
            return Err(Error::InvalidParams("level sizes must be >= 1".into()));
        }
        if distances.contains(&0) {
            return Err(Error::InvalidParams("distances must be >= 1".into()));
        }
        if distances.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "distances must be nonincreasing, got {distances:?}"
            )));
        }
        Ok(Self {
            n,
            sizes,
            distances,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn levels(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[Count] {
        &self.sizes
    }

    pub fn distances(&self) -> &[u32] {
        &self.distances
    }
}

/// An `(n, A, B, d_A, d_B)` two-level problem with `d_A > d_B ≥ 1`; the size
/// `A` of the strongly protected class is what the bounds estimate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLevelParams {
    pub n: u32,
    pub b: Count,
    pub d_a: u32,
    pub d_b: u32,
}

impl TwoLevelParams {
    pub fn new(n: u32, b: Count, d_a: u32, d_b: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("blocklength must be >= 1".into()));
        }
        if b.is_zero() {
            return Err(Error::InvalidParams("B must be >= 1".into()));
        }
        if d_b == 0 || d_a <= d_b {
            return Err(Error::InvalidParams(format!(
                "need d_A > d_B >= 1, got d_A = {d_a}, d_B = {d_b}"
            )));
        }
        Ok(Self { n, b, d_a, d_b })
    }

    pub fn with_log2_b(n: u32, log2_b: u32, d_a: u32, d_b: u32) -> Result<Self> {
        Self::new(n, pow2(log2_b), d_a, d_b)
    }

    /// `R_B = log₂(B) / n`.
    pub fn rate_b(&self) -> f64 {
        log2_count(&self.b) / self.n as f64
    }

    /// `log₂(A) / n` for a given class-A size.
    pub fn rate_a(&self, a: &Count) -> f64 {
        log2_count(a) / self.n as f64
    }

    pub(crate) fn b_minus_one(&self) -> Count {
        &self.b - Count::one()
    }
}
