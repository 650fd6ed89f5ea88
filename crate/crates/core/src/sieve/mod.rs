//! Exact elimination sieves over design parameters and group orders.

mod catalog;
mod factor;
mod filters;
mod report;
mod sieves;

pub use catalog::{parse_simple_groups, parse_table1, simple_groups, table1, CatalogLine, SimpleGroupEntry};
pub use factor::{factorial_factorization, FactoredInt};
pub use filters::{
    divisor_parameter_scan, divisor_parameter_scan_filtered, grid_two_path_check, order_bound,
    subdegree_divisibility, GridCheck, ParamTriple, ScanFilters,
};
pub use report::{Check, Eliminated, Params, SieveReport, Survivor};
pub use sieves::{
    diagonal_type_sieve, eliminate_253, imprimitive_sieve, intransitive_sieve, pair_orbit_lengths_253,
    product_type_sieve, table1_survey, uniform_partition_count, Group253,
};
