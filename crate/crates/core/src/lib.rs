//! Exact permutation-group computations, 2-design verification and
//! elimination sieves for flag-transitive 2-designs with block size seven.

pub mod construct;
pub mod design;
mod error;
pub mod perm;
pub mod sieve;

pub use construct::{build_c55, build_pg32, Construction};
pub use design::{derive_params, DesignParams, IncidenceStructure};
pub use error::{Error, Result};
pub use perm::{PermGroup, Permutation};
pub use sieve::{FactoredInt, SieveReport};
