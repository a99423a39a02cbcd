use super::space::{check_cap, PointSet};
use super::Word;
use crate::{Error, Result};

/// A hosting region inside F₂ⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    /// An explicit point set.
    Explicit { n: u32, points: Vec<Word> },
    /// `{prefix} × F₂^{n_b}`.
    Cube { prefix: Word, n_b: u32 },
    /// Hamming ball `B(center, radius)`.
    Ball { center: Word, radius: u32 },
}

impl Region {
    pub fn explicit(n: u32, mut points: Vec<Word>) -> Result<Self> {
        if let Some(w) = points.iter().find(|w| w.len() != n) {
            return Err(Error::InvalidParams(format!(
                "point {w} does not have length {n}"
            )));
        }
        points.sort();
        points.dedup();
        Ok(Region::Explicit { n, points })
    }

    pub fn n(&self) -> u32 {
        match self {
            Region::Explicit { n, .. } => *n,
            Region::Cube { prefix, n_b } => prefix.len() + n_b,
            Region::Ball { center, .. } => center.len(),
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        if w.len() != self.n() {
            return false;
        }
        match self {
            Region::Explicit { points, .. } => points.binary_search(w).is_ok(),
            Region::Cube { prefix, .. } => (0..prefix.len()).all(|i| w.get(i) == prefix.get(i)),
            Region::Ball { center, radius } => center.distance(w) <= *radius,
        }
    }

    pub(crate) fn to_point_set(&self) -> Result<PointSet> {
        let n = self.n();
        check_cap(n)?;
        Ok(match self {
            Region::Explicit { points, .. } => PointSet::from_words(n, points),
            Region::Cube { prefix, n_b } => {
                let mut s = PointSet::empty(n);
                let base = (prefix.to_index() << n_b) as u32;
                for tail in 0..1u32 << n_b {
                    s.insert(base | tail);
                }
                s
            }
            Region::Ball { center, radius } => {
                let mut s = PointSet::empty(n);
                let c = center.to_index() as u32;
                for m in super::space::ball_masks(n, *radius) {
                    s.insert(c ^ m);
                }
                s
            }
        })
    }

    /// Points in lexicographic order. Requires `n` within the enumeration cap.
    pub fn points(&self) -> Result<Vec<Word>> {
        Ok(self.to_point_set()?.to_words())
    }

    pub fn size(&self) -> Result<u64> {
        Ok(self.to_point_set()?.len())
    }

    /// Every two points are joined by a unit-step path inside the region.
    pub fn is_connected(&self) -> Result<bool> {
        match self {
            Region::Cube { .. } | Region::Ball { .. } => Ok(true),
            Region::Explicit { .. } => Ok(self.to_point_set()?.is_connected()),
        }
    }
}

/// Cubes `{c} × F₂^{n_b}` for each word `c` of a class-A code.
pub fn cube_regions(class_a: &[Word], n_b: u32) -> Vec<Region> {
    class_a
        .iter()
        .map(|&prefix| Region::Cube { prefix, n_b })
        .collect()
}

pub fn ball_regions(centers: &[Word], radius: u32) -> Vec<Region> {
    centers
        .iter()
        .map(|&center| Region::Ball { center, radius })
        .collect()
}
