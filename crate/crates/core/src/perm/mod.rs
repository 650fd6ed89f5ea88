//! Exact permutation-group machinery: permutations, groups given by
//! generators, stabilizer chains, orbits on points and on combinatorial
//! spaces, induced actions, subdegrees and primitivity.

mod chain;
mod group;
pub mod io;
mod orbit;
mod permutation;
mod primitivity;
mod space;

pub use chain::StabChain;
pub use group::{alternating_group, cyclic_group, symmetric_group, PermGroup};
pub use orbit::{
    induced_action, induced_action_with_caps, orbit, orbit_in_space, orbit_with, orbits,
    orbits_on_unordered_pairs, setwise_stabilizer, OrbitOptions, OrbitRecord,
};
pub(crate) use orbit::{pair_orbit_labels, pair_rank, set_orbit, stabilizer_from_tree, PairOrbits};
pub use permutation::Permutation;
pub use primitivity::{is_primitive, subdegrees, Primitivity};
pub use space::{binom, ActionSpace, Caps, SpaceKind};

use num_bigint::BigUint;

use crate::error::Result;

/// Exact group order; see [`PermGroup::order`].
pub fn group_order(g: &PermGroup) -> Result<BigUint> {
    g.order()
}

pub fn point_stabilizer(g: &PermGroup, x: usize) -> Result<PermGroup> {
    g.point_stabilizer(x)
}
