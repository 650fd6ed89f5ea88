use num_bigint::BigUint;

use super::gl::{gl42_generators, glmatrix_action};
use super::Construction;
use crate::design::{verify_2design, verify_flag_transitive, IncidenceStructure};
use crate::error::{Error, Result};

/// Planes of the projective space of rank 4 over the two-element field:
/// for each nonzero covector `c`, the nonzero `x` with `c·x = 0`. Point `x`
/// has index `x - 1`.
pub fn pg32_planes() -> Vec<Vec<u32>> {
    (1..16u32)
        .map(|c| {
            (1..16u32)
                .filter(|x| (x & c).count_ones() % 2 == 0)
                .map(|x| x - 1)
                .collect()
        })
        .collect()
}

/// The 2-(15,7,3) design of points and planes, with the full linear group
/// acting on it. Both are verified before returning.
pub fn build_pg32() -> Result<Construction> {
    let design = IncidenceStructure::new(15, pg32_planes())?;
    let group = glmatrix_action(&gl42_generators())?.with_known_order(BigUint::from(20160u32));
    group.order()?;
    let lambda = verify_2design(&design)
        .lambda()
        .ok_or_else(|| Error::Integrity("planes of PG(3,2) are not pairwise balanced".into()))?;
    if lambda != 3 {
        return Err(Error::Integrity(format!("PG(3,2) gave λ = {lambda}")));
    }
    let flag = verify_flag_transitive(&group, &design)?;
    if !flag.flag_transitive {
        return Err(Error::Integrity("linear group is not flag-transitive on PG(3,2)".into()));
    }
    Ok(Construction {
        name: "pg32",
        base_block: design.block(0).to_vec(),
        design,
        group,
        lambda,
        flag,
        via_search: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::is_primitive;

    #[test]
    fn planes_have_seven_points() {
        let planes = pg32_planes();
        assert_eq!(planes.len(), 15);
        assert!(planes.iter().all(|p| p.len() == 7));
    }

    /// Every pair of distinct points spans a line, which lies in 3 planes.
    #[test]
    fn every_pair_in_three_planes() {
        let planes = pg32_planes();
        for a in 0..15u32 {
            for b in a + 1..15 {
                let n = planes.iter().filter(|p| p.contains(&a) && p.contains(&b)).count();
                assert_eq!(n, 3, "pair ({a},{b})");
            }
        }
    }

    #[test]
    fn construction_certificate() {
        let c = build_pg32().unwrap();
        assert_eq!(c.lambda, 3);
        assert_eq!(c.design.num_blocks(), 15);
        assert_eq!(c.design.replication_numbers(), vec![7; 15]);
        assert_eq!(c.flag.block_stabilizer_order, BigUint::from(1344u32));
        assert_eq!(c.group.point_stabilizer(0).unwrap().order().unwrap(), BigUint::from(1344u32));
        assert!(is_primitive(&c.group).unwrap().is_primitive());
    }
}
