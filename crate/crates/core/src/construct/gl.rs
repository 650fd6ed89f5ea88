use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// A 4×4 matrix over the field of two elements, one 4-bit mask per row.
/// Vectors are row vectors: `x · M` is the XOR of the rows selected by the
/// bits of `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    pub rows: [u8; 4],
}

impl BitMatrix {
    pub const IDENTITY: BitMatrix = BitMatrix { rows: [1, 2, 4, 8] };

    pub fn new(rows: [u8; 4]) -> Result<Self> {
        if rows.iter().any(|&r| r > 0xF) {
            return Err(Error::invalid("rows must be 4-bit masks"));
        }
        Ok(BitMatrix { rows })
    }

    /// `x · M` for a 4-bit vector `x`.
    pub fn apply(&self, x: u8) -> u8 {
        (0..4)
            .filter(|i| x >> i & 1 == 1)
            .fold(0, |acc, i| acc ^ self.rows[i])
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows;
        let mut rank = 0;
        for bit in 0..4 {
            let Some(p) = (rank..4).find(|&i| rows[i] >> bit & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            for i in 0..4 {
                if i != rank && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == 4
    }

    /// The permutation of the 15 nonzero vectors, vector `x` having index
    /// `x - 1`.
    pub fn to_permutation(&self) -> Result<Permutation> {
        if !self.is_invertible() {
            return Err(Error::invalid(format!("singular matrix {:?}", self.rows)));
        }
        let images: Vec<u32> = (1..16u8).map(|x| self.apply(x) as u32 - 1).collect();
        Permutation::from_images(images)
    }
}

/// Permutation group on the 15 nonzero vectors induced by the matrices.
pub fn glmatrix_action(generators: &[BitMatrix]) -> Result<PermGroup> {
    let gens = generators
        .iter()
        .map(BitMatrix::to_permutation)
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        return Err(Error::invalid("need at least one matrix"));
    }
    PermGroup::new(15, gens)
}

/// The elementary transvection `e0 ↦ e0 + e1` and the cyclic permutation
/// matrix `e_i ↦ e_{i+1}`.
pub fn gl42_generators() -> [BitMatrix; 2] {
    [
        BitMatrix { rows: [3, 2, 4, 8] },
        BitMatrix {
            rows: [0, 1, 2, 3].map(|i| 1u8 << ((i + 1) % 4)),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn identity_and_singular() {
        let p = BitMatrix::IDENTITY.to_permutation().unwrap();
        assert!(p.is_identity());
        let singular = BitMatrix::new([1, 2, 3, 8]).unwrap();
        assert!(!singular.is_invertible());
        assert!(glmatrix_action(&[singular]).is_err());
        assert!(BitMatrix::new([16, 0, 0, 0]).is_err());
    }

    /// Every transvection `e_i ↦ e_i + e_j` fixes the 7 nonzero vectors of
    /// its fixed hyperplane.
    #[test]
    fn transvections_fix_seven_points() {
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    continue;
                }
                let mut rows = BitMatrix::IDENTITY.rows;
                rows[i] |= 1 << j;
                let p = BitMatrix { rows }.to_permutation().unwrap();
                assert_eq!(p.fixed_points(), 7);
                assert_eq!(p.order(), 2);
            }
        }
    }

    #[test]
    fn standard_generators_give_full_group() {
        let g = glmatrix_action(&gl42_generators()).unwrap();
        let expected: u32 = (15 * 14 * 12 * 8) as u32;
        assert_eq!(expected, 20160);
        assert_eq!(g.order().unwrap(), BigUint::from(expected));
    }

    #[test]
    fn matrix_action_is_linear() {
        let [a, b] = gl42_generators();
        for x in 1..16u8 {
            for y in 1..16u8 {
                assert_eq!(a.apply(x ^ y), a.apply(x) ^ a.apply(y));
                assert_eq!(b.apply(x ^ y), b.apply(x) ^ b.apply(y));
            }
        }
    }
}
