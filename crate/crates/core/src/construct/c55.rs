use super::search::search_base_block;
use super::Construction;
use crate::design::{block_orbit_design, verify_2design, verify_flag_transitive};
use crate::error::{Error, Result};
use crate::perm::{alternating_group, induced_action, ActionSpace, PermGroup};

/// `A_11` acting on the 55 unordered pairs of 11 letters.
pub fn a11_on_pairs() -> Result<PermGroup> {
    induced_action(&alternating_group(11)?, &ActionSpace::unordered_pairs(11)?)
}

/// The 55-point indices of the edges `{i, i+1 mod 7}` of a 7-cycle.
pub fn seven_cycle_block() -> Result<Vec<u32>> {
    let space = ActionSpace::unordered_pairs(11)?;
    let mut block = (0..7u32)
        .map(|i| {
            let (a, b) = (i, (i + 1) % 7);
            space.rank(&[a.min(b), a.max(b)]).map(|r| r as u32)
        })
        .collect::<Result<Vec<u32>>>()?;
    block.sort_unstable();
    Ok(block)
}

fn try_base_block(group: &PermGroup, base: &[u32]) -> Result<Option<Construction>> {
    let design = block_orbit_design(group, base)?;
    let Some(lambda) = verify_2design(&design).lambda() else {
        return Ok(None);
    };
    let flag = verify_flag_transitive(group, &design)?;
    if lambda != 1680 || !flag.flag_transitive || flag.block_stabilizer_order != 168u32.into() {
        return Ok(None);
    }
    Ok(Some(Construction {
        name: "c55",
        base_block: base.to_vec(),
        design,
        group: group.clone(),
        lambda,
        flag,
        via_search: false,
    }))
}

/// The orbit of the 7-cycle edge set under `A_11` on 55 points, checked to
/// be a flag-transitive 2-(55,7,1680) design. If the check fails, balanced
/// base blocks found by search are tried instead.
pub fn build_c55() -> Result<Construction> {
    let group = a11_on_pairs()?;
    if let Some(c) = try_base_block(&group, &seven_cycle_block()?)? {
        return Ok(c);
    }
    build_c55_by_search(&group)
}

pub(crate) fn build_c55_by_search(group: &PermGroup) -> Result<Construction> {
    for base in search_base_block(group, 7)? {
        if let Some(mut c) = try_base_block(group, &base)? {
            c.via_search = true;
            return Ok(c);
        }
    }
    Err(Error::Refutation(
        "no base block of size 7 gives a flag-transitive 2-(55,7,1680) design under A11".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::pair_orbit_labels;

    #[test]
    fn base_block_edge_pairs() {
        let g = a11_on_pairs().unwrap();
        let block = seven_cycle_block().unwrap();
        assert_eq!(block.len(), 7);
        let labels = pair_orbit_labels(&g).unwrap();
        let mut lengths: Vec<usize> = labels.orbits.iter().map(|o| o.length).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![495, 990]);
        let space = ActionSpace::unordered_pairs(11).unwrap();
        let mut sharing = 0;
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                let (ea, eb) = (space.unrank(a as u64), space.unrank(b as u64));
                if ea.iter().any(|x| eb.contains(x)) {
                    sharing += 1;
                }
            }
        }
        assert_eq!((sharing, 21 - sharing), (7, 14));
    }
}
