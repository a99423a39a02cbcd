//! Command-line frontend over `uep_core`: bound reports, rate sweeps,
//! shortest-length searches, constructions, codebook verification and
//! asymptotic checks.

pub mod args;
pub mod bound;
pub mod construct;
pub mod error;
pub mod minlen;
pub mod output;
mod run;
pub mod sweep;

pub use run::run;
