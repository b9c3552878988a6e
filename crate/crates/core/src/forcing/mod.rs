//! Tiling enumeration, forcing sets and the excess lower bound.

mod enumerate;
mod excess;
mod peel;
mod search;
mod staircase;
mod upper;

pub use enumerate::{count_tilings, enumerate_tilings, for_each_tiling};
pub use excess::{excess, min_max_excess, neighborhood, ExcessReport};
pub use peel::{peel_unique_extension, PeelOutcome};
pub use search::{forcing_number, forcing_number_of_tiling, ForcingCertificate, Optimality, Verdict};
pub use staircase::{staircase_hexagon, staircase_square, Construction};
pub use upper::{forcing_upper_bound, greedy_forcing_set, recognize, KnownShape};

/// Size guards for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Most tilings an enumeration may visit.
    pub max_tilings: u64,
    /// Most tiles in a matching whose forcing number is searched.
    pub max_matching: usize,
    /// Most black cells for the excess dynamic programme.
    pub max_black: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_tilings: 10_000_000,
            max_matching: 28,
            max_black: 24,
        }
    }
}
