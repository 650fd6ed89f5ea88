use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::design::balance_profile;
use crate::error::{Error, Result};
use crate::perm::{pair_orbit_labels, pair_rank, PermGroup};

/// Where an interrupted search stopped: the canonical representatives of
/// all orbits of `level`-subsets that can still be extended.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResumeToken {
    pub level: usize,
    pub frontier: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of representatives kept at any level.
    pub cap_per_level: usize,
    pub resume: Option<ResumeToken>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap_per_level: 100_000,
            resume: None,
        }
    }
}

/// Base blocks of size `k`, one per orbit, whose orbit designs have all
/// pair-orbit multiplicities equal. Results are canonical (least in their
/// orbit) and sorted.
pub fn search_base_block(g: &PermGroup, k: usize) -> Result<Vec<Vec<u32>>> {
    search_base_block_with(g, k, &SearchOptions::default())
}

pub fn search_base_block_with(g: &PermGroup, k: usize, opts: &SearchOptions) -> Result<Vec<Vec<u32>>> {
    g.require_transitive()?;
    let n = g.degree();
    if !(2..=8).contains(&k) || k >= n {
        return Err(Error::invalid(format!("block size {k} outside 2..=8 or not below degree {n}")));
    }
    let labels = pair_orbit_labels(g)?;
    let total_pairs = n * (n - 1) / 2;
    let block_pairs = k * (k - 1) / 2;
    // A balanced block contains C(k,2)·|O_i|/C(n,2) pairs of orbit i.
    let mut target = Vec::with_capacity(labels.orbits.len());
    for o in &labels.orbits {
        if !(block_pairs * o.length).is_multiple_of(total_pairs) {
            return Ok(Vec::new());
        }
        target.push(block_pairs * o.length / total_pairs);
    }
    let within_target = |set: &[u32]| {
        let mut counts = vec![0usize; target.len()];
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                let l = labels.label[pair_rank(a as usize, b as usize)] as usize;
                counts[l] += 1;
                if counts[l] > target[l] {
                    return false;
                }
            }
        }
        true
    };

    let (mut level, mut frontier) = match &opts.resume {
        Some(token) => {
            if token.level == 0 || token.level > k {
                return Err(Error::invalid("resume token level out of range"));
            }
            (token.level, token.frontier.clone())
        }
        None => {
            let firsts: BTreeSet<Vec<u32>> = (0..n as u32).map(|x| g.min_set_image(&[x])).collect();
            (1, firsts.into_iter().collect())
        }
    };
    while level < k {
        let mut next = BTreeSet::new();
        for rep in &frontier {
            for x in 0..n as u32 {
                if rep.binary_search(&x).is_ok() {
                    continue;
                }
                let mut set = rep.clone();
                set.push(x);
                set.sort_unstable();
                if !within_target(&set) {
                    continue;
                }
                next.insert(g.min_set_image(&set));
            }
            if next.len() > opts.cap_per_level {
                return Err(Error::SearchCap {
                    token: ResumeToken { level, frontier },
                });
            }
        }
        frontier = next.into_iter().collect();
        level += 1;
    }
    let mut out = Vec::new();
    for rep in frontier {
        if balance_profile(g, &rep)?.is_balanced() {
            out.push(rep);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{induced_action, symmetric_group, ActionSpace, Permutation};

    #[test]
    fn two_transitive_group_takes_every_block() {
        let s5 = symmetric_group(5).unwrap();
        for k in 2..5 {
            assert_eq!(search_base_block(&s5, k).unwrap(), vec![(0..k as u32).collect::<Vec<_>>()]);
        }
    }

    #[test]
    fn single_pair_cannot_balance_two_orbits() {
        let s5 = symmetric_group(5).unwrap();
        let g = induced_action(&s5, &ActionSpace::unordered_pairs(5).unwrap()).unwrap();
        // 10 points, pair orbits of length 30 (sharing a letter) and 15.
        assert!(search_base_block(&g, 2).unwrap().is_empty());
        let found = search_base_block(&g, 3).unwrap();
        assert!(!found.is_empty());
        for b in &found {
            assert!(balance_profile(&g, b).unwrap().is_balanced());
        }
    }

    #[test]
    fn cap_and_resume() {
        let c = Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]).unwrap();
        let g = PermGroup::new(8, vec![c]).unwrap();
        let opts = SearchOptions {
            cap_per_level: 2,
            resume: None,
        };
        let token = match search_base_block_with(&g, 7, &opts) {
            Err(Error::SearchCap { token }) => token,
            other => panic!("{other:?}"),
        };
        assert_eq!(token.level, 1);
        let resumed = search_base_block_with(
            &g,
            7,
            &SearchOptions {
                cap_per_level: 1000,
                resume: Some(token),
            },
        )
        .unwrap();
        assert_eq!(resumed, search_base_block(&g, 7).unwrap());
        assert_eq!(resumed, vec![(0..7).collect::<Vec<u32>>()]);
    }

    #[test]
    fn rejects_intransitive_and_bad_k() {
        let g = PermGroup::trivial(5);
        assert!(matches!(search_base_block(&g, 3), Err(Error::Intransitive { .. })));
        let s5 = symmetric_group(5).unwrap();
        assert!(search_base_block(&s5, 5).is_err());
        assert!(search_base_block(&s5, 1).is_err());
    }
}
