use num_traits::ToPrimitive;

use super::space::{ball_masks, PointSet};
use crate::bounds::TwoLevelParams;
use crate::{Error, Result};

/// Caps on the exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveLimits {
    pub max_n: u32,
    pub max_b: u64,
    /// Abort after this many search nodes.
    pub max_nodes: u64,
}

impl Default for ExhaustiveLimits {
    fn default() -> Self {
        Self {
            max_n: 14,
            max_b: 8,
            max_nodes: 50_000_000,
        }
    }
}

struct Search {
    b: usize,
    d_b: u32,
    /// Radius-`(d_A−1)` masks: a group's exclusion zone for other groups.
    a_masks: Vec<u32>,
    /// `conflict[x]`: points closer than `d_A` to `x`. Words of different
    /// groups never share a conflict clique.
    conflict: Vec<PointSet>,
    best: usize,
    nodes: u64,
    max_nodes: u64,
}

impl Search {
    /// Upper bound on the number of groups that fit in `avail`, from the
    /// word count and a greedy partition into conflict cliques. Stops early
    /// and returns `limit + 1` once the bound is known to exceed `limit`.
    fn bound(&self, avail: &PointSet, limit: usize) -> usize {
        let by_count = (avail.len() / self.b as u64) as usize;
        if by_count <= limit {
            return by_count;
        }
        let mut cliques: Vec<PointSet> = Vec::new();
        for x in avail.iter() {
            let conflict = &self.conflict[x as usize];
            if let Some(c) = cliques.iter_mut().find(|c| c.contains(x)) {
                c.intersect_with(conflict);
            } else if cliques.len() > limit {
                return limit + 1;
            } else {
                cliques.push(conflict.clone());
            }
        }
        cliques.len()
    }

    /// Whether `count` groups plus whatever fits in `avail` cannot beat the
    /// best found so far.
    fn hopeless(&self, avail: &PointSet, count: usize) -> bool {
        match self.best.checked_sub(count) {
            Some(room) => self.bound(avail, room) <= room,
            None => false,
        }
    }

    fn without_group(&self, avail: &PointSet, group: &[u32]) -> PointSet {
        let mut rest = avail.clone();
        for &w in group {
            rest.remove_ball(w, &self.a_masks);
        }
        rest
    }

    fn visit(&mut self, avail: PointSet, count: usize, forced: bool) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::CapExceeded {
                what: "search nodes",
                value: self.nodes,
                cap: self.max_nodes,
            });
        }
        self.best = self.best.max(count);
        let Some(v) = avail.first() else {
            return Ok(());
        };
        if self.hopeless(&avail, count) {
            return Ok(());
        }
        // branch 1: `v` starts a group, completed from larger points
        let mut candidates: Vec<u32> = avail
            .iter()
            .filter(|&x| x != v && (x ^ v).count_ones() >= self.d_b)
            .collect();
        candidates.sort_by_key(|&x| ((x ^ v).count_ones(), x));
        let mut group = vec![v];
        self.extend_group(&avail, &candidates, 0, &mut group, count)?;
        // branch 2: `v` is never used
        if !forced {
            let mut rest = avail;
            rest.remove(v);
            self.visit(rest, count, false)?;
        }
        Ok(())
    }

    fn extend_group(
        &mut self,
        avail: &PointSet,
        candidates: &[u32],
        from: usize,
        group: &mut Vec<u32>,
        count: usize,
    ) -> Result<()> {
        if group.len() == self.b {
            let rest = self.without_group(avail, group);
            return self.visit(rest, count + 1, false);
        }
        // any completion of `group` leaves at most this much room
        let rest = self.without_group(avail, group);
        if self.hopeless(&rest, count + 1) {
            return Ok(());
        }
        let mut checked_best = self.best;
        let missing = self.b - group.len();
        for i in from..candidates.len() {
            if candidates.len() - i < missing {
                break;
            }
            let x = candidates[i];
            if group.iter().all(|&w| (w ^ x).count_ones() >= self.d_b) {
                group.push(x);
                self.extend_group(avail, candidates, i + 1, group, count)?;
                group.pop();
            }
            if self.best > checked_best {
                if self.hopeless(&rest, count + 1) {
                    break;
                }
                checked_best = self.best;
            }
        }
        Ok(())
    }
}

/// The largest `A` for which an `(n, A, B, d_A, d_B)` two-level code exists,
/// by branch and bound. The first codeword is fixed to `0`.
///
/// Returns `0` when not even one group of `B` words at distance `d_B` fits.
pub fn exhaustive_optimum(p: &TwoLevelParams, limits: &ExhaustiveLimits) -> Result<usize> {
    if p.n > limits.max_n {
        return Err(Error::CapExceeded {
            what: "blocklength",
            value: p.n as u64,
            cap: limits.max_n as u64,
        });
    }
    let b =
        p.b.to_u64()
            .filter(|&b| b <= limits.max_b)
            .ok_or_else(|| Error::CapExceeded {
                what: "class-B size",
                value: p.b.to_u64().unwrap_or(u64::MAX),
                cap: limits.max_b,
            })?;
    let n = p.n;
    let a_masks = ball_masks(n, p.d_a - 1);
    let conflict = (0..1u32 << n)
        .map(|x| {
            let mut s = PointSet::empty(n);
            for m in &a_masks {
                s.insert(x ^ m);
            }
            s
        })
        .collect();
    let mut search = Search {
        b: b as usize,
        d_b: p.d_b,
        a_masks,
        conflict,
        best: 0,
        nodes: 0,
        max_nodes: limits.max_nodes,
    };
    search.visit(PointSet::full(n), 0, true)?;
    Ok(search.best)
}
