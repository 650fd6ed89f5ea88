//! 2-design parameters, incidence structures and their verification.

mod incidence;
pub mod io;
mod params;
mod verify;

pub use incidence::IncidenceStructure;
pub use params::{derive_params, DesignParams, Infeasibility};
pub use verify::{
    balance_profile, block_orbit_design, block_orbit_design_capped, counted_params,
    feasibility_filters, required_pair_counts, verify_2design, verify_flag_transitive,
    BalanceProfile, FilterVerdict, FlagTransitivity, PairBalance, PairOrbitBalance,
    BLOCK_ORBIT_CAP,
};
