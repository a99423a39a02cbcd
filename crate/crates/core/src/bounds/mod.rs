//! Achievability and converse bounds on the class-A size `A` of binary UEP codes.
//!
//! Bounds that are integral or rational are evaluated exactly; only rates,
//! entropies and the asymptotic conditions use floating point.

mod asymptotic;
mod gv;
mod length;
mod params;
mod report;
mod two_level;

pub use asymptotic::{
    asymptotic_check, ratio_fixed_distance, AsymptoticReport, FixedDistanceRatio,
};
pub use gv::{gv_classic, gv_improved, multilevel_budget, uep_union_bound};
pub use length::{min_length_ts, min_length_uep, ReferenceRow, TsGv, REFERENCE_ROWS};
pub use params::{TwoLevelParams, UepParams};
pub use report::{BoundKind, BoundReport, Direction};
pub use two_level::{
    eep_bound, hamming_converse, packing_plan, ts_allocation, ts_class_a, ts_gv, uep_ball_bound,
    uep_cube_bound, uep_enlargement_bound, PackingCount, PackingPlan, SplitRule, TsAllocation,
};
