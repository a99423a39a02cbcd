//! Explicit UEP codes over F₂ⁿ and exhaustive profile verification.
//!
//! Everything that enumerates the space is capped at
//! [`ENUMERATION_CAP`] coordinates.

mod assemble;
mod chain;
mod code;
mod exhaustive;
mod greedy;
mod luep;
mod region;
mod space;
mod word;

/// Largest blocklength for which constructions enumerate F₂ⁿ.
pub const ENUMERATION_CAP: u32 = 24;

pub use assemble::{
    assemble_two_level, ball_construction, cube_construction, union_volume, AssembledCode,
};
pub use chain::{chained_ball_packing, chained_greedy_code, connected_set_select};
pub use code::{read_codebook, verify_profile, write_codebook, LevelDistance, UepCode};
pub use exhaustive::{exhaustive_optimum, ExhaustiveLimits};
pub use greedy::{greedy_code, greedy_multilevel};
pub use luep::{
    luep_trial, random_luep_search, LinearSearchParams, LinearUepCode, LuepFound, MAX_INFO_BITS,
};
pub use region::{ball_regions, cube_regions, Region};
pub use word::{Word, MAX_WORD_LEN};
