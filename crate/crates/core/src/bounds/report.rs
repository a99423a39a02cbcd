use std::fmt;

use crate::exact::{ceil_nonneg, floor_nonneg, log2_rational, Count, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Achievability,
    Converse,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Achievability => "achievability",
            Direction::Converse => "converse",
        }
    }
}

/// Which closed-form quantity a [`BoundReport`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    GvClassic,
    GvImproved,
    Union,
    Cube,
    Ball,
    Enlargement,
    Hamming,
    Eep,
    TimeSharingA,
    TimeSharingB,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::GvClassic => "gv_classic",
            BoundKind::GvImproved => "gv_improved",
            BoundKind::Union => "union",
            BoundKind::Cube => "cube",
            BoundKind::Ball => "ball",
            BoundKind::Enlargement => "enlargement",
            BoundKind::Hamming => "hamming",
            BoundKind::Eep => "eep",
            BoundKind::TimeSharingA => "ts_class_a",
            BoundKind::TimeSharingB => "ts_class_b",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bound with its exact value, the integer size it certifies, and its rate.
///
/// Achievability values round up (a code of size at least `x` has size at least
/// `⌈x⌉`), converse values round down.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub exact_value: Rational,
    pub guaranteed_size: Count,
    /// `log₂(exact_value) / n`; `-inf` when the value is not positive.
    pub log2_rate: f64,
    pub direction: Direction,
}

impl BoundReport {
    pub fn achievability(kind: BoundKind, exact_value: Rational, n: u32) -> Self {
        Self::build(kind, exact_value, n, Direction::Achievability)
    }

    pub fn converse(kind: BoundKind, exact_value: Rational, n: u32) -> Self {
        Self::build(kind, exact_value, n, Direction::Converse)
    }

    fn build(kind: BoundKind, exact_value: Rational, n: u32, direction: Direction) -> Self {
        let guaranteed_size = match direction {
            Direction::Achievability => ceil_nonneg(&exact_value),
            Direction::Converse => floor_nonneg(&exact_value),
        };
        let log2_rate = log2_rational(&exact_value) / n.max(1) as f64;
        Self {
            kind,
            exact_value,
            guaranteed_size,
            log2_rate,
            direction,
        }
    }
}
