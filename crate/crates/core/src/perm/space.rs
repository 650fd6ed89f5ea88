//! Combinatorial domains a group on `c` letters acts on, with a ranking
//! onto `0..size`.
//!
//! Subsets are ranked colexicographically: a sorted set `s_0 < .. < s_{k-1}`
//! has rank `Σ C(s_i, i+1)`. A uniform partition is stored as its classes,
//! each sorted, ordered by their minimum elements; its rank is the mixed-radix
//! number whose digits are the colex ranks of each class's non-minimum
//! elements among the letters not yet used.

use super::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    Points,
    Subsets { k: usize },
    UnorderedPairs,
    UniformPartitions { s: usize, t: usize },
}

/// Materialization limits for induced actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub subsets: u64,
    pub partitions: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subsets: 10_000_000,
            partitions: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpace {
    kind: SpaceKind,
    base_degree: usize,
    size: u64,
}

/// `C(n, k)`, or `None` past `u64`.
pub fn binom(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

fn binom_or_cap(n: u64, k: u64, what: &'static str) -> Result<u64> {
    binom(n, k).ok_or_else(|| Error::Capacity {
        what,
        size: format!("C({n},{k})"),
        cap: u64::MAX,
    })
}

fn colex_rank(sorted: &[u32]) -> u64 {
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| binom(x as u64, i as u64 + 1).expect("rank fits u64"))
        .sum()
}

fn colex_unrank(mut rank: u64, k: usize, n: usize) -> Vec<u32> {
    let mut out = vec![0u32; k];
    let mut hi = n as u64; // exclusive bound on the next element
    for i in (1..=k as u64).rev() {
        // largest x < hi with C(x, i) <= rank
        let (mut lo, mut top) = (i - 1, hi - 1);
        while lo < top {
            let mid = (lo + top).div_ceil(2);
            if binom(mid, i).unwrap_or(u64::MAX) <= rank {
                lo = mid;
            } else {
                top = mid - 1;
            }
        }
        out[i as usize - 1] = lo as u32;
        rank -= binom(lo, i).unwrap();
        hi = lo;
    }
    out
}

impl ActionSpace {
    pub fn points(n: usize) -> Self {
        ActionSpace {
            kind: SpaceKind::Points,
            base_degree: n,
            size: n as u64,
        }
    }

    pub fn subsets(c: usize, k: usize) -> Result<Self> {
        if k == 0 || k > c {
            return Err(Error::invalid(format!("no {k}-subsets of {c} letters")));
        }
        Ok(ActionSpace {
            kind: SpaceKind::Subsets { k },
            base_degree: c,
            size: binom_or_cap(c as u64, k as u64, "subset space")?,
        })
    }

    pub fn unordered_pairs(c: usize) -> Result<Self> {
        if c < 2 {
            return Err(Error::invalid("unordered pairs need at least 2 letters"));
        }
        Ok(ActionSpace {
            kind: SpaceKind::UnorderedPairs,
            base_degree: c,
            size: binom_or_cap(c as u64, 2, "pair space")?,
        })
    }

    /// Partitions of `s·t` letters into `t` classes of size `s`.
    pub fn uniform_partitions(s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::invalid("partition classes and counts must be positive"));
        }
        let c = s * t;
        let mut size: u64 = 1;
        for j in 1..=t {
            let f = binom_or_cap((j * s - 1) as u64, (s - 1) as u64, "partition space")?;
            size = size.checked_mul(f).ok_or(Error::Capacity {
                what: "partition space",
                size: format!("partitions of {c} into {t} classes"),
                cap: u64::MAX,
            })?;
        }
        Ok(ActionSpace {
            kind: SpaceKind::UniformPartitions { s, t },
            base_degree: c,
            size,
        })
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn base_degree(&self) -> usize {
        self.base_degree
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of letters in one object's encoding.
    pub fn object_len(&self) -> usize {
        match self.kind {
            SpaceKind::Points => 1,
            SpaceKind::Subsets { k } => k,
            SpaceKind::UnorderedPairs => 2,
            SpaceKind::UniformPartitions { s, t } => s * t,
        }
    }

    pub fn unrank(&self, index: u64) -> Vec<u32> {
        assert!(index < self.size, "index {index} outside space of size {}", self.size);
        match self.kind {
            SpaceKind::Points => vec![index as u32],
            SpaceKind::Subsets { k } => colex_unrank(index, k, self.base_degree),
            SpaceKind::UnorderedPairs => colex_unrank(index, 2, self.base_degree),
            SpaceKind::UniformPartitions { s, t } => self.unrank_partition(index, s, t),
        }
    }

    /// Rank of a canonical object; non-canonical input is rejected.
    pub fn rank(&self, obj: &[u32]) -> Result<u64> {
        if obj.len() != self.object_len() {
            return Err(Error::invalid(format!(
                "object has {} letters, expected {}",
                obj.len(),
                self.object_len()
            )));
        }
        if obj.iter().any(|&x| x as usize >= self.base_degree) {
            return Err(Error::invalid("letter outside the base degree"));
        }
        match self.kind {
            SpaceKind::Points => Ok(obj[0] as u64),
            SpaceKind::Subsets { .. } | SpaceKind::UnorderedPairs => {
                if obj.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::invalid("subset must be strictly increasing"));
                }
                Ok(colex_rank(obj))
            }
            SpaceKind::UniformPartitions { s, t } => self.rank_partition(obj, s, t),
        }
    }

    /// Puts an arbitrary encoding of an object into canonical form.
    pub fn canonicalize(&self, obj: &mut [u32]) {
        match self.kind {
            SpaceKind::Points => {}
            SpaceKind::Subsets { .. } | SpaceKind::UnorderedPairs => obj.sort_unstable(),
            SpaceKind::UniformPartitions { s, .. } => {
                let mut classes: Vec<Vec<u32>> = obj
                    .chunks(s)
                    .map(|c| {
                        let mut c = c.to_vec();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                classes.sort_unstable_by_key(|c| c[0]);
                for (dst, x) in obj.iter_mut().zip(classes.into_iter().flatten()) {
                    *dst = x;
                }
            }
        }
    }

    pub fn image(&self, g: &Permutation, obj: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = obj.iter().map(|&x| g.apply(x as usize) as u32).collect();
        self.canonicalize(&mut out);
        out
    }

    pub fn image_rank(&self, g: &Permutation, index: u64) -> u64 {
        let obj = self.unrank(index);
        self.rank(&self.image(g, &obj)).expect("image of a canonical object is canonical")
    }

    fn radices(&self, s: usize, t: usize) -> Vec<u64> {
        let c = s * t;
        (0..t)
            .map(|i| binom((c - i * s - 1) as u64, (s - 1) as u64).unwrap())
            .collect()
    }

    fn rank_partition(&self, obj: &[u32], s: usize, t: usize) -> Result<u64> {
        let mut remaining: Vec<u32> = (0..(s * t) as u32).collect();
        let mut rank: u64 = 0;
        for (class, radix) in obj.chunks(s).zip(self.radices(s, t)) {
            if class.windows(2).any(|w| w[0] >= w[1]) || class[0] != remaining[0] {
                return Err(Error::invalid("partition is not in canonical form"));
            }
            let mut positions = Vec::with_capacity(s - 1);
            for x in &class[1..] {
                match remaining[1..].binary_search(x) {
                    Ok(p) => positions.push(p as u32),
                    Err(_) => return Err(Error::invalid("partition repeats a letter")),
                }
            }
            rank = rank * radix + colex_rank(&positions);
            remaining.retain(|x| class.binary_search(x).is_err());
        }
        Ok(rank)
    }

    fn unrank_partition(&self, mut index: u64, s: usize, t: usize) -> Vec<u32> {
        let radices = self.radices(s, t);
        let mut digits = vec![0u64; t];
        for i in (0..t).rev() {
            digits[i] = index % radices[i];
            index /= radices[i];
        }
        let mut remaining: Vec<u32> = (0..(s * t) as u32).collect();
        let mut out = Vec::with_capacity(s * t);
        for &digit in &digits {
            let positions = colex_unrank(digit, s - 1, remaining.len() - 1);
            let mut class = vec![remaining[0]];
            class.extend(positions.iter().map(|&p| remaining[1 + p as usize]));
            remaining.retain(|x| class.binary_search(x).is_err());
            out.extend(class);
        }
        out
    }
}
