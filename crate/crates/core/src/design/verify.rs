use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{DesignParams, IncidenceStructure};
use crate::error::{Error, Result};
use crate::perm::{pair_orbit_labels, pair_rank, set_orbit, stabilizer_from_tree, PermGroup};

/// Outcome of pair counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairBalance {
    /// Every pair of distinct points lies in exactly `lambda` blocks.
    Balanced { lambda: u64 },
    /// The first two pairs (in colex order) with different counts.
    Unbalanced {
        first: ((u32, u32), u64),
        second: ((u32, u32), u64),
    },
}

impl PairBalance {
    pub fn lambda(&self) -> Option<u64> {
        match self {
            PairBalance::Balanced { lambda } => Some(*lambda),
            PairBalance::Unbalanced { .. } => None,
        }
    }
}

/// Counts, for every unordered pair of points, the blocks containing it.
pub fn verify_2design(s: &IncidenceStructure) -> PairBalance {
    let v = s.v();
    if v < 2 {
        return PairBalance::Balanced { lambda: 0 };
    }
    let mut counts = vec![0u32; v * (v - 1) / 2];
    for block in s.blocks() {
        for (i, &b) in block.iter().enumerate().skip(1) {
            let base = b as usize * (b as usize - 1) / 2;
            for &a in &block[..i] {
                counts[base + a as usize] += 1;
            }
        }
    }
    let lambda = counts[0];
    match counts.iter().position(|&c| c != lambda) {
        None => PairBalance::Balanced { lambda: lambda as u64 },
        Some(idx) => PairBalance::Unbalanced {
            first: ((0, 1), lambda as u64),
            second: (unrank_pair(idx), counts[idx] as u64),
        },
    }
}

fn unrank_pair(idx: usize) -> (u32, u32) {
    let mut b = ((1.0 + (1.0 + 8.0 * idx as f64).sqrt()) / 2.0) as usize;
    while b * (b - 1) / 2 > idx {
        b -= 1;
    }
    while (b + 1) * b / 2 <= idx {
        b += 1;
    }
    ((idx - b * (b - 1) / 2) as u32, b as u32)
}

/// Counts `(v, b, r, k, λ)` from a verified structure and checks them.
pub fn counted_params(s: &IncidenceStructure) -> Result<DesignParams> {
    let lambda = verify_2design(s)
        .lambda()
        .ok_or_else(|| Error::invalid("structure is not a 2-design"))?;
    let r = s.replication_numbers();
    if r.iter().any(|&x| x != r[0]) {
        return Err(Error::invalid("replication number is not constant"));
    }
    DesignParams::new(s.v() as u64, s.num_blocks() as u64, r[0] as u64, s.k() as u64, lambda)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagTransitivity {
    pub flag_transitive: bool,
    pub block_orbit_size: usize,
    pub num_blocks: usize,
    pub block_stabilizer_order: BigUint,
    /// Orbit lengths of the block stabilizer on the first block's points.
    pub stabilizer_orbits_on_block: Vec<usize>,
}

/// Flag-transitivity via block-transitivity plus transitivity of a block
/// stabilizer on its block.
pub fn verify_flag_transitive(g: &PermGroup, s: &IncidenceStructure) -> Result<FlagTransitivity> {
    if g.degree() != s.v() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: s.v(),
        });
    }
    let mut image = vec![0u32; s.k()];
    for block in s.blocks() {
        for gen in g.generators() {
            for (dst, &x) in image.iter_mut().zip(block) {
                *dst = gen.apply(x as usize) as u32;
            }
            image.sort_unstable();
            if !s.contains_block(&image) {
                return Err(Error::NotAutomorphism(format!(
                    "generator maps block {block:?} to non-block {image:?}"
                )));
            }
        }
    }
    let first = s.block(0).to_vec();
    let tree = set_orbit(g, &first, None)?;
    let gens = g.generators();
    let stab = stabilizer_from_tree(g, &tree, |gi, b: &Vec<u32>| {
        let mut img: Vec<u32> = b.iter().map(|&x| gens[gi].apply(x as usize) as u32).collect();
        img.sort_unstable();
        img
    })?;
    let on_block = orbits_within(&stab, &first);
    let block_transitive = tree.len() == s.num_blocks();
    Ok(FlagTransitivity {
        flag_transitive: block_transitive && on_block.len() == 1,
        block_orbit_size: tree.len(),
        num_blocks: s.num_blocks(),
        block_stabilizer_order: stab.order()?,
        stabilizer_orbits_on_block: on_block,
    })
}

fn orbits_within(g: &PermGroup, set: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; g.degree()];
    let mut lengths = Vec::new();
    for &start in set {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut queue = vec![start as usize];
        let mut i = 0;
        while i < queue.len() {
            for gen in g.generators() {
                let y = gen.apply(queue[i]);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        lengths.push(queue.len());
    }
    lengths.sort_unstable();
    lengths
}

/// Default cap on the number of blocks an orbit design may have.
pub const BLOCK_ORBIT_CAP: usize = 10_000_000;

/// The orbit of `base_block` under `g`, as an incidence structure.
pub fn block_orbit_design(g: &PermGroup, base_block: &[u32]) -> Result<IncidenceStructure> {
    block_orbit_design_capped(g, base_block, BLOCK_ORBIT_CAP)
}

pub fn block_orbit_design_capped(
    g: &PermGroup,
    base_block: &[u32],
    cap: usize,
) -> Result<IncidenceStructure> {
    let mut base = base_block.to_vec();
    base.sort_unstable();
    if base.is_empty() || base.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("base block must be a non-empty set"));
    }
    let tree = set_orbit(g, &base, Some(cap))?;
    IncidenceStructure::new(g.degree(), tree.nodes)
}

/// Per pair-orbit data of an orbit design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOrbitBalance {
    pub representative: (usize, usize),
    pub orbit_length: usize,
    /// Pairs of this orbit inside the base block.
    pub in_block: usize,
    /// `b · in_block / orbit_length`, exact.
    pub lambda: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceProfile {
    pub num_blocks: BigUint,
    pub orbits: Vec<PairOrbitBalance>,
}

impl BalanceProfile {
    /// Builds the profile from block count, pair-orbit lengths and the
    /// number of base-block pairs in each orbit.
    pub fn from_counts(num_blocks: BigUint, orbits: Vec<((usize, usize), usize, usize)>) -> Self {
        let b = BigInt::from(num_blocks.clone());
        let orbits = orbits
            .into_iter()
            .map(|(representative, orbit_length, in_block)| PairOrbitBalance {
                representative,
                orbit_length,
                in_block,
                lambda: BigRational::new(&b * BigInt::from(in_block), BigInt::from(orbit_length)),
            })
            .collect();
        BalanceProfile { num_blocks, orbits }
    }

    /// All `λ_i` coincide.
    pub fn is_balanced(&self) -> bool {
        self.orbits.windows(2).all(|w| w[0].lambda == w[1].lambda)
    }

    /// The common λ when balanced and integral.
    pub fn lambda(&self) -> Option<BigUint> {
        let first = &self.orbits.first()?.lambda;
        if !self.is_balanced() || !first.is_integer() || first.is_zero() {
            return None;
        }
        first.to_integer().to_biguint()
    }

    pub fn in_block_total(&self) -> usize {
        self.orbits.iter().map(|o| o.in_block).sum()
    }

    pub fn orbit_total(&self) -> usize {
        self.orbits.iter().map(|o| o.orbit_length).sum()
    }
}

/// Pair-orbit balance of the orbit design generated by `base_block`.
pub fn balance_profile(g: &PermGroup, base_block: &[u32]) -> Result<BalanceProfile> {
    g.require_transitive()?;
    let (labels, in_block) = pair_type_counts(g, base_block)?;
    let b = set_orbit(g, base_block, None)?.len();
    Ok(BalanceProfile::from_counts(
        BigUint::from(b),
        labels
            .orbits
            .iter()
            .zip(in_block)
            .map(|(o, n)| (o.representative, o.length, n))
            .collect(),
    ))
}

/// Pair-orbit labelling of `g` and, per orbit, how many pairs of `block`
/// fall in it.
pub(crate) fn pair_type_counts(
    g: &PermGroup,
    block: &[u32],
) -> Result<(crate::perm::PairOrbits, Vec<usize>)> {
    let labels = pair_orbit_labels(g)?;
    let mut in_block = vec![0usize; labels.orbits.len()];
    for (i, &a) in block.iter().enumerate() {
        for &b in &block[i + 1..] {
            in_block[labels.label[pair_rank(a as usize, b as usize)] as usize] += 1;
        }
    }
    Ok((labels, in_block))
}

/// `|O_i| · λ / b` for each pair-orbit length: the number of pairs of each
/// orbit a block would have to contain.
pub fn required_pair_counts(orbit_lengths: &[usize], lambda: &BigUint, b: &BigUint) -> Vec<BigRational> {
    orbit_lengths
        .iter()
        .map(|&len| {
            BigRational::new(
                BigInt::from(BigUint::from(len) * lambda),
                BigInt::from(b.clone()),
            )
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterVerdict {
    pub passes: bool,
    pub failed: Option<String>,
}

/// `r | |G_α|` and `r | λd` for every nontrivial subdegree `d`. One entry
/// equal to 1 in `subdegrees` is taken as the fixed point.
pub fn feasibility_filters(p: &DesignParams, stab_order: &BigUint, subdegrees: &[usize]) -> FilterVerdict {
    let r = BigUint::from(p.r);
    if !(stab_order % &r).is_zero() {
        return FilterVerdict {
            passes: false,
            failed: Some(format!("r = {} does not divide |G_α| = {stab_order}", p.r)),
        };
    }
    let mut rest = subdegrees.to_vec();
    if let Some(pos) = rest.iter().position(|&d| d == 1) {
        rest.remove(pos);
    }
    for d in rest {
        let ld = BigUint::from(p.lambda) * BigUint::from(d);
        if !(&ld % &r).is_zero() {
            return FilterVerdict {
                passes: false,
                failed: Some(format!("r = {} does not divide λd = {}·{d} = {ld}", p.r, p.lambda)),
            };
        }
    }
    FilterVerdict {
        passes: true,
        failed: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::perm::{cyclic_group, symmetric_group};

    #[test]
    fn complete_design_on_four_points() {
        let blocks = (0..4u32)
            .flat_map(|b| (0..b).map(move |a| vec![a, b]))
            .collect();
        let s = IncidenceStructure::new(4, blocks).unwrap();
        assert_eq!(verify_2design(&s), PairBalance::Balanced { lambda: 1 });
    }

    #[test]
    fn unbalanced_witness() {
        let s = IncidenceStructure::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        match verify_2design(&s) {
            PairBalance::Unbalanced { first, second } => {
                assert_eq!(first, ((0, 1), 2));
                assert_eq!(second, ((0, 2), 1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pair_unranking() {
        for b in 1..60usize {
            for a in 0..b {
                assert_eq!(unrank_pair(pair_rank(a, b)), (a as u32, b as u32));
            }
        }
    }

    #[test]
    fn orbit_design_of_two_transitive_group() {
        let g = symmetric_group(5).unwrap();
        let s = block_orbit_design(&g, &[0, 1]).unwrap();
        assert_eq!(s.num_blocks(), 10);
        let p = balance_profile(&g, &[0, 1]).unwrap();
        assert_eq!(p.orbits.len(), 1);
        assert_eq!(p.lambda(), Some(BigUint::one()));
    }

    #[test]
    fn fixed_block_gives_single_block() {
        let g = PermGroup::new(
            4,
            vec![crate::perm::Permutation::from_cycles(4, &[&[0, 1]]).unwrap()],
        )
        .unwrap();
        let s = block_orbit_design(&g, &[0, 1]).unwrap();
        assert_eq!(s.num_blocks(), 1);
    }

    #[test]
    fn trivial_group_is_not_flag_transitive() {
        let s = IncidenceStructure::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let ft = verify_flag_transitive(&PermGroup::trivial(4), &s).unwrap();
        assert!(!ft.flag_transitive);
        assert_eq!(ft.block_orbit_size, 1);
    }

    #[test]
    fn non_automorphism_detected() {
        let s = IncidenceStructure::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let c4 = cyclic_group(4).unwrap();
        assert!(matches!(
            verify_flag_transitive(&c4, &s),
            Err(Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn filters() {
        let p = DesignParams::new(15, 15, 7, 7, 3).unwrap();
        let stab = BigUint::from(168u32);
        assert!(!feasibility_filters(&p, &stab, &[1, 6, 8]).passes);
        assert!(feasibility_filters(&p, &stab, &[1, 14]).passes);
        let p = DesignParams::new(55, 118800, 15120, 7, 1680).unwrap();
        assert!(feasibility_filters(&p, &BigUint::from(362880u32), &[1, 18, 36]).passes);
        assert!(!feasibility_filters(&p, &BigUint::from(1680u32), &[1, 18, 36]).passes);
    }

    #[test]
    fn replication_one_always_passes() {
        let p = DesignParams {
            v: 3,
            b: 1,
            r: 1,
            k: 3,
            lambda: 1,
        };
        assert!(feasibility_filters(&p, &BigUint::from(5u32), &[1, 7, 9]).passes);
    }
}
