use num_bigint::BigUint;

use super::pg32::pg32_planes;
use crate::design::{verify_flag_transitive, FlagTransitivity, IncidenceStructure};
use crate::error::Result;
use crate::perm::{PermGroup, Permutation};

/// What a proposed group on the 15 points of PG(3,2) was found to be.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateReport {
    pub order: BigUint,
    pub transitive: bool,
    pub point_stabilizer_order: Option<BigUint>,
    pub flag: FlagTransitivity,
}

impl CandidateReport {
    /// Order 2520, transitive, point stabilizer of order 168 and
    /// flag-transitive on the planes.
    pub fn is_a7_certificate(&self) -> bool {
        self.order == BigUint::from(2520u32)
            && self.transitive
            && self.point_stabilizer_order == Some(BigUint::from(168u32))
            && self.flag.flag_transitive
    }
}

/// Checks user-supplied generators on the 15 points of PG(3,2) against the
/// properties of a transitive `A_7` with point stabilizer `PSL_3(2)`. The
/// generators must preserve the planes.
pub fn verify_a7_candidate(generators: Vec<Permutation>) -> Result<CandidateReport> {
    let group = PermGroup::new(15, generators)?;
    let design = IncidenceStructure::new(15, pg32_planes())?;
    let flag = verify_flag_transitive(&group, &design)?;
    let order = group.order()?;
    let transitive = group.is_transitive();
    let point_stabilizer_order = if transitive {
        Some(group.point_stabilizer(0)?.order()?)
    } else {
        None
    };
    Ok(CandidateReport {
        order,
        transitive,
        point_stabilizer_order,
        flag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{glmatrix_action, BitMatrix};
    use crate::error::Error;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_invertible(rng: &mut ChaCha8Rng) -> BitMatrix {
        loop {
            let m = BitMatrix {
                rows: [0; 4].map(|_| rng.random_range(0..16u8)),
            };
            if m.is_invertible() {
                return m;
            }
        }
    }

    #[test]
    fn full_linear_group_is_not_a7() {
        let g = glmatrix_action(&crate::construct::gl42_generators()).unwrap();
        let r = verify_a7_candidate(g.generators().to_vec()).unwrap();
        assert_eq!(r.order, BigUint::from(20160u32));
        assert!(!r.is_a7_certificate());
    }

    #[test]
    fn non_automorphism_rejected() {
        let p = Permutation::from_cycles(15, &[&[0, 1]]).unwrap();
        assert!(matches!(verify_a7_candidate(vec![p]), Err(Error::NotAutomorphism(_))));
    }

    /// Two random elements of the linear group generate a transitive
    /// subgroup of order 2520 reasonably often.
    #[test]
    fn a7_found_inside_linear_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let gens = vec![
                random_invertible(&mut rng).to_permutation().unwrap(),
                random_invertible(&mut rng).to_permutation().unwrap(),
            ];
            let g = PermGroup::new(15, gens.clone()).unwrap();
            if g.order().unwrap() != BigUint::from(2520u32) || !g.is_transitive() {
                continue;
            }
            let r = verify_a7_candidate(gens).unwrap();
            assert!(r.is_a7_certificate(), "{r:?}");
            assert_eq!(r.flag.block_stabilizer_order, BigUint::from(168u32));
            return;
        }
        panic!("no transitive subgroup of order 2520 found");
    }
}
