//! Unequal error protection (UEP) codes over the binary field.
//!
//! * [`combinatorics`]: exact Hamming-ball volumes and intersections, plus the
//!   binary entropy helpers used by the asymptotic conditions.
//! * [`bounds`]: closed-form achievability and converse bounds on the size of
//!   the strongly protected message class, time-sharing baselines and the
//!   minimum-length searches.
//! * [`construction`]: explicit greedy / connected-set / ball-packing codes,
//!   random linear UEP search, the distance-profile verifier and the
//!   exhaustive small-instance optimum.

pub mod bounds;
pub mod combinatorics;
pub mod construction;
mod error;
pub mod exact;

pub use error::{Error, Result};
