//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Level `i` holds a base point `b_i`, the strong generators fixing
//! `b_0..b_{i-1}`, the orbit of `b_i` under them, and for every orbit point
//! `p` a transversal element mapping `p` back to `b_i`. Each Schreier
//! generator is sifted through the deeper levels; trivial sifts are dropped
//! and non-trivial residues become new strong generators. Per orbit point we
//! remember how many generators have been processed so no Schreier generator
//! is sifted twice.

use num_bigint::BigUint;

use super::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<u32>,
    orbit: Vec<u32>,
    slot: Vec<u32>,
    u_inv: Vec<Permutation>,
    done: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut slot = vec![NONE; degree];
        slot[base] = 0;
        Level {
            base: base as u32,
            gens: Vec::new(),
            orbit: vec![base as u32],
            slot,
            u_inv: vec![Permutation::identity(degree)],
            done: vec![0],
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    strong: Vec<Permutation>,
    strong_inv: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        Self::with_base(degree, &[], gens)
    }

    /// Chain whose base starts with `prefix`; further base points are the
    /// smallest points moved by the residues that need them.
    pub fn with_base(degree: usize, prefix: &[usize], gens: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            strong: Vec::new(),
            strong_inv: Vec::new(),
            levels: prefix.iter().map(|&b| Level::new(degree, b)).collect(),
        };
        for g in gens {
            chain.insert(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Strong generators fixing the first `level` base points.
    pub fn level_generators(&self, level: usize) -> Vec<Permutation> {
        match self.levels.get(level) {
            Some(l) => l.gens.iter().map(|&i| self.strong[i as usize].clone()).collect(),
            None => Vec::new(),
        }
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// The chain of the stabilizer of the first `from` base points.
    pub fn tail(&self, from: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            strong: self.strong.clone(),
            strong_inv: self.strong_inv.clone(),
            levels: self.levels[from.min(self.levels.len())..].to_vec(),
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(0, g.clone()).1.is_identity()
    }

    /// Adds `g` to the group, completing the chain. Returns false when `g`
    /// was already a member.
    pub fn insert(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree, "generator degree mismatch");
        let (j, h) = self.sift(0, g.clone());
        if h.is_identity() {
            return false;
        }
        self.add_strong(h, 0, j);
        self.complete_from(j);
        true
    }

    fn sift(&self, start: usize, mut g: Permutation) -> (usize, Permutation) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let p = g.apply(level.base as usize);
            let pos = level.slot[p];
            if pos == NONE {
                return (l, g);
            }
            if pos != 0 {
                g = g.then(&level.u_inv[pos as usize]);
            }
        }
        (self.levels.len(), g)
    }

    fn add_strong(&mut self, h: Permutation, lo: usize, hi: usize) {
        let idx = self.strong.len() as u32;
        self.strong_inv.push(h.inverse());
        if hi == self.levels.len() {
            let base = h.first_moved().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, base));
        }
        self.strong.push(h);
        for l in lo..=hi {
            self.levels[l].gens.push(idx);
            self.extend_orbit(l);
        }
    }

    fn extend_orbit(&mut self, l: usize) {
        let level = &mut self.levels[l];
        let mut i = 0;
        while i < level.orbit.len() {
            let p = level.orbit[i] as usize;
            for &gi in &level.gens {
                let q = self.strong[gi as usize].apply(p);
                if level.slot[q] == NONE {
                    level.slot[q] = level.orbit.len() as u32;
                    level.orbit.push(q as u32);
                    let u = self.strong_inv[gi as usize].then(&level.u_inv[i]);
                    level.u_inv.push(u);
                    level.done.push(0);
                }
            }
            i += 1;
        }
    }

    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let l = i as usize;
            match self.next_residue(l) {
                Some((j, h)) => {
                    self.add_strong(h, l + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Sifts the unprocessed Schreier generators of level `l` until one
    /// leaves a non-trivial residue.
    fn next_residue(&mut self, l: usize) -> Option<(usize, Permutation)> {
        let n = self.degree;
        let mut pos = 0;
        while pos < self.levels[l].orbit.len() {
            while (self.levels[l].done[pos] as usize) < self.levels[l].gens.len() {
                let level = &self.levels[l];
                let gi = level.gens[level.done[pos] as usize] as usize;
                let p = level.orbit[pos] as usize;
                let q = self.strong[gi].apply(p);
                let q_pos = level.slot[q] as usize;
                // u_p * s * u_q^{-1}
                let u_inv_p = &level.u_inv[pos];
                let mut u_p = vec![0u32; n];
                for (x, &y) in u_inv_p.images().iter().enumerate() {
                    u_p[y as usize] = x as u32;
                }
                let s = &self.strong[gi];
                let u_inv_q = &level.u_inv[q_pos];
                let images: Vec<u32> = u_p
                    .iter()
                    .map(|&y| u_inv_q.images()[s.apply(y as usize)])
                    .collect();
                self.levels[l].done[pos] += 1;
                let schreier = Permutation::from_images_unchecked(images);
                if schreier.is_identity() {
                    continue;
                }
                let (j, h) = self.sift(l + 1, schreier);
                if !h.is_identity() {
                    return Some((j, h));
                }
            }
            pos += 1;
        }
        None
    }

    /// Lexicographically least image of the sorted set `set` under the
    /// group, using Linton's level-by-level refinement. The chain must have
    /// base `0, 1, .., n-1` (see [`StabChain::with_full_base`]).
    pub fn min_set_image(&self, set: &[u32]) -> Vec<u32> {
        let k = set.len();
        let mut candidates: Vec<Vec<u32>> = vec![sorted(set.to_vec())];
        let mut placed = 0usize;
        for (i, level) in self.levels.iter().enumerate() {
            debug_assert_eq!(level.base as usize, i);
            if placed == k {
                break;
            }
            if level.orbit.len() == 1 {
                if candidates.iter().any(|t| t.binary_search(&(i as u32)).is_ok()) {
                    candidates.retain(|t| t.binary_search(&(i as u32)).is_ok());
                    placed += 1;
                }
                continue;
            }
            let hit = candidates
                .iter()
                .any(|t| t.iter().any(|&p| level.slot[p as usize] != NONE));
            let mut next: Vec<Vec<u32>> = Vec::new();
            for t in &candidates {
                for (pos, &q) in level.orbit.iter().enumerate() {
                    if hit && t.binary_search(&q).is_err() {
                        continue;
                    }
                    let u = &level.u_inv[pos];
                    next.push(sorted(t.iter().map(|&x| u.images()[x as usize]).collect()));
                }
            }
            next.sort_unstable();
            next.dedup();
            candidates = next;
            if hit {
                placed += 1;
            }
        }
        candidates.into_iter().min().unwrap_or_default()
    }

    /// Chain with base `0, 1, .., n-1`, as needed by `min_set_image`.
    pub fn with_full_base(degree: usize, gens: &[Permutation]) -> Self {
        let prefix: Vec<usize> = (0..degree).collect();
        Self::with_base(degree, &prefix, gens)
    }
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_gens(n: usize) -> Vec<Permutation> {
        let cycle: Vec<usize> = (0..n).collect();
        vec![
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[&cycle]).unwrap(),
        ]
    }

    #[test]
    fn symmetric_orders() {
        let mut fact = BigUint::from(1u32);
        for n in 2..=9usize {
            fact *= BigUint::from(n);
            let chain = StabChain::new(n, &sym_gens(n));
            assert_eq!(chain.order(), fact, "S{n}");
        }
    }

    #[test]
    fn membership() {
        // <(0 1 2 3)> in S4
        let c4 = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let chain = StabChain::new(4, std::slice::from_ref(&c4));
        assert_eq!(chain.order(), BigUint::from(4u32));
        assert!(chain.contains(&c4.pow(2)));
        assert!(!chain.contains(&Permutation::from_cycles(4, &[&[0, 1]]).unwrap()));
    }

    #[test]
    fn base_prefix_is_respected() {
        let chain = StabChain::with_base(5, &[3], &sym_gens(5));
        assert_eq!(chain.base()[0], 3);
        assert_eq!(chain.orbit_lengths()[0], 5);
        assert_eq!(chain.tail(1).order(), BigUint::from(24u32));
    }

    #[test]
    fn trivial_group_has_empty_chain() {
        let chain = StabChain::new(3, &[Permutation::identity(3)]);
        assert_eq!(chain.order(), BigUint::from(1u32));
        assert!(chain.base().is_empty());
    }

    #[test]
    fn min_image_of_cyclic_group() {
        let c5 = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let chain = StabChain::with_full_base(5, &[c5]);
        assert_eq!(chain.min_set_image(&[2, 4]), vec![0, 2]);
        assert_eq!(chain.min_set_image(&[3, 4]), vec![0, 1]);
        assert_eq!(chain.min_set_image(&[1, 2, 4]), vec![0, 1, 3]);
    }
}
