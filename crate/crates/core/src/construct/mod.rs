//! The two flag-transitive designs with block size seven, the matrix
//! action behind the first one and a base-block search.

mod c55;
mod candidate;
mod gl;
mod pg32;
mod search;

pub use c55::{a11_on_pairs, build_c55, seven_cycle_block};
pub use candidate::{verify_a7_candidate, CandidateReport};
pub use gl::{gl42_generators, glmatrix_action, BitMatrix};
pub use pg32::{build_pg32, pg32_planes};
pub use search::{search_base_block, search_base_block_with, ResumeToken, SearchOptions};

use crate::design::{FlagTransitivity, IncidenceStructure};
use crate::perm::PermGroup;

/// A verified design together with its group.
#[derive(Clone, Debug)]
pub struct Construction {
    pub name: &'static str,
    pub design: IncidenceStructure,
    pub group: PermGroup,
    pub base_block: Vec<u32>,
    pub lambda: u64,
    pub flag: FlagTransitivity,
    /// The base block came from search rather than the built-in model.
    pub via_search: bool,
}
