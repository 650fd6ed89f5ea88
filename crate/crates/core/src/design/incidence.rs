use crate::error::{Error, Result};

/// Points `0..v` and a list of distinct `k`-subsets, kept in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    k: usize,
    /// Flattened blocks, `k` entries each.
    blocks: Vec<u32>,
}

impl IncidenceStructure {
    /// Accepts blocks in any order; each block must already be strictly
    /// increasing. Repeated blocks are rejected.
    pub fn new(v: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let k = blocks
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::invalid("an incidence structure needs at least one block"))?;
        if k == 0 {
            return Err(Error::invalid("blocks must be non-empty"));
        }
        let mut blocks = blocks;
        for (i, b) in blocks.iter().enumerate() {
            if b.len() != k {
                return Err(Error::invalid(format!("block {i} has size {}, expected {k}", b.len())));
            }
            if b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid(format!("block {i} is not strictly increasing")));
            }
            if b[k - 1] as usize >= v {
                return Err(Error::invalid(format!("block {i} has a point outside 0..{v}")));
            }
        }
        blocks.sort_unstable();
        if let Some(w) = blocks.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("repeated block {:?}", w[0])));
        }
        Ok(IncidenceStructure {
            v,
            k,
            blocks: blocks.into_iter().flatten().collect(),
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len() / self.k
    }

    pub fn block(&self, i: usize) -> &[u32] {
        &self.blocks[i * self.k..(i + 1) * self.k]
    }

    pub fn blocks(&self) -> impl ExactSizeIterator<Item = &[u32]> {
        self.blocks.chunks_exact(self.k)
    }

    /// Binary search in the canonical block order.
    pub fn contains_block(&self, block: &[u32]) -> bool {
        if block.len() != self.k {
            return false;
        }
        let (mut lo, mut hi) = (0, self.num_blocks());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.block(mid).cmp(block) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Blocks through each point.
    pub fn replication_numbers(&self) -> Vec<usize> {
        let mut r = vec![0usize; self.v];
        for &x in &self.blocks {
            r[x as usize] += 1;
        }
        r
    }
}
