use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;

use super::chain::StabChain;
use super::space::{ActionSpace, Caps, SpaceKind};
use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

const ROOT: u32 = u32::MAX;

/// Breadth-first Schreier tree of an orbit, in discovery order.
#[derive(Clone, Debug)]
pub(crate) struct Tree<K> {
    pub nodes: Vec<K>,
    pub parent: Vec<u32>,
    pub via: Vec<u32>,
    pub index: HashMap<K, u32>,
}

impl<K: Hash + Eq + Clone> Tree<K> {
    pub fn build(
        seed: K,
        ngens: usize,
        cap: Option<usize>,
        mut act: impl FnMut(usize, &K) -> K,
    ) -> Result<Self> {
        let mut tree = Tree {
            nodes: vec![seed.clone()],
            parent: vec![ROOT],
            via: vec![ROOT],
            index: HashMap::from([(seed, 0u32)]),
        };
        let mut i = 0;
        while i < tree.nodes.len() {
            for gi in 0..ngens {
                let image = act(gi, &tree.nodes[i]);
                if tree.index.contains_key(&image) {
                    continue;
                }
                if let Some(cap) = cap {
                    if tree.nodes.len() >= cap {
                        return Err(Error::Capacity {
                            what: "orbit",
                            size: format!("more than {cap}"),
                            cap: cap as u64,
                        });
                    }
                }
                tree.index.insert(image.clone(), tree.nodes.len() as u32);
                tree.nodes.push(image);
                tree.parent.push(i as u32);
                tree.via.push(gi as u32);
            }
            i += 1;
        }
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Generator indices leading from the root to node `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while self.parent[i] != ROOT {
            w.push(self.via[i] as usize);
            i = self.parent[i] as usize;
        }
        w.reverse();
        w
    }
}

fn word_product(gens: &[Permutation], degree: usize, word: &[usize]) -> Permutation {
    word.iter()
        .fold(Permutation::identity(degree), |acc, &gi| acc.then(&gens[gi]))
}

/// An orbit with its members sorted and a transversal word per member.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    representative: usize,
    members: Vec<usize>,
    words: Vec<Vec<u32>>,
    transversals: Option<Vec<Permutation>>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct OrbitOptions {
    /// Keep a full permutation per member instead of only its word.
    pub full_transversals: bool,
}

impl OrbitRecord {
    fn from_tree(g: &PermGroup, tree: Tree<u64>, opts: OrbitOptions) -> Self {
        let mut order: Vec<usize> = (0..tree.len()).collect();
        order.sort_unstable_by_key(|&i| tree.nodes[i]);
        let members = order.iter().map(|&i| tree.nodes[i] as usize).collect();
        let words: Vec<Vec<u32>> = order
            .iter()
            .map(|&i| tree.word(i).into_iter().map(|w| w as u32).collect())
            .collect();
        let transversals = opts.full_transversals.then(|| {
            words
                .iter()
                .map(|w| {
                    let w: Vec<usize> = w.iter().map(|&x| x as usize).collect();
                    word_product(g.generators(), g.degree(), &w)
                })
                .collect()
        });
        OrbitRecord {
            representative: tree.nodes[0] as usize,
            members,
            words,
            transversals,
        }
    }

    pub fn representative(&self) -> usize {
        self.representative
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Word over generator indices taking the representative to `x`.
    pub fn word(&self, x: usize) -> Option<Vec<usize>> {
        let i = self.members.binary_search(&x).ok()?;
        Some(self.words[i].iter().map(|&w| w as usize).collect())
    }

    /// Group element (on the base letters) taking the representative to `x`.
    pub fn transversal(&self, g: &PermGroup, x: usize) -> Option<Permutation> {
        let i = self.members.binary_search(&x).ok()?;
        if let Some(ts) = &self.transversals {
            return Some(ts[i].clone());
        }
        let w: Vec<usize> = self.words[i].iter().map(|&w| w as usize).collect();
        Some(word_product(g.generators(), g.degree(), &w))
    }
}

pub fn orbit(g: &PermGroup, seed: usize) -> Result<OrbitRecord> {
    orbit_with(g, seed, OrbitOptions::default())
}

pub fn orbit_with(g: &PermGroup, seed: usize, opts: OrbitOptions) -> Result<OrbitRecord> {
    if seed >= g.degree() {
        return Err(Error::invalid(format!("seed {seed} outside degree {}", g.degree())));
    }
    let gens = g.generators();
    let tree = Tree::build(seed as u64, gens.len(), None, |gi, &x| {
        gens[gi].apply(x as usize) as u64
    })?;
    Ok(OrbitRecord::from_tree(g, tree, opts))
}

/// Orbit of the object ranked `seed` in `space` under the group acting on
/// the space's letters. Nothing of size `space.size()` is materialized.
pub fn orbit_in_space(g: &PermGroup, space: &ActionSpace, seed: u64) -> Result<OrbitRecord> {
    if space.base_degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: space.base_degree(),
            right: g.degree(),
        });
    }
    if seed >= space.size() {
        return Err(Error::invalid(format!("seed {seed} outside space of size {}", space.size())));
    }
    let gens = g.generators();
    let tree = Tree::build(seed, gens.len(), None, |gi, &x| space.image_rank(&gens[gi], x))?;
    Ok(OrbitRecord::from_tree(g, tree, OrbitOptions::default()))
}

/// Points reachable from `seed`, in discovery order.
pub(crate) fn orbit_points(g: &PermGroup, seed: usize) -> Vec<usize> {
    let mut seen = vec![false; g.degree()];
    seen[seed] = true;
    let mut out = vec![seed];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for gen in g.generators() {
            let y = gen.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// Orbit partition of the domain; each orbit sorted, orbits ordered by
/// their least point.
pub fn orbits(g: &PermGroup) -> Vec<Vec<usize>> {
    orbits_of_gens(g.degree(), g.generators())
}

pub(crate) fn orbits_of_gens(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; degree];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..degree {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[start] = id;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for g in gens {
                let y = g.apply(x);
                if label[y] == usize::MAX {
                    label[y] = id;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// The group induced on `space`. Its degree is `space.size()`; the known
/// order, if any, is carried over.
pub fn induced_action(g: &PermGroup, space: &ActionSpace) -> Result<PermGroup> {
    induced_action_with_caps(g, space, Caps::default())
}

pub fn induced_action_with_caps(g: &PermGroup, space: &ActionSpace, caps: Caps) -> Result<PermGroup> {
    if space.base_degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: space.base_degree(),
            right: g.degree(),
        });
    }
    let (cap, what) = match space.kind() {
        SpaceKind::UniformPartitions { .. } => (caps.partitions, "partition action"),
        SpaceKind::Points => (u64::MAX, "point action"),
        _ => (caps.subsets, "subset action"),
    };
    if space.size() > cap || space.size() > u32::MAX as u64 {
        return Err(Error::Capacity {
            what,
            size: space.size().to_string(),
            cap,
        });
    }
    let n = space.size() as usize;
    let objects: Vec<Vec<u32>> = (0..n as u64).map(|i| space.unrank(i)).collect();
    let gens = g
        .generators()
        .iter()
        .map(|gen| {
            let images: Vec<u32> = objects
                .iter()
                .map(|obj| space.rank(&space.image(gen, obj)).map(|r| r as u32))
                .collect::<Result<_>>()?;
            Ok(Permutation::from_images_unchecked(images))
        })
        .collect::<Result<Vec<_>>>()?;
    let induced = PermGroup::new(n, gens)?;
    Ok(match g.known_order() {
        Some(order) => induced.with_known_order(order.clone()),
        None => induced,
    })
}

/// Orbits on unordered pairs of domain points: a representative pair and
/// the orbit length for each, ordered by representative rank.
pub fn orbits_on_unordered_pairs(g: &PermGroup) -> Result<Vec<((usize, usize), usize)>> {
    Ok(pair_orbit_labels(g)?
        .orbits
        .into_iter()
        .map(|o| (o.representative, o.length))
        .collect())
}

#[derive(Clone, Debug)]
pub(crate) struct PairOrbit {
    pub representative: (usize, usize),
    pub length: usize,
}

/// Orbit id of every unordered pair, indexed by colex pair rank.
#[derive(Clone, Debug)]
pub(crate) struct PairOrbits {
    pub label: Vec<u32>,
    pub orbits: Vec<PairOrbit>,
}

#[inline]
pub(crate) fn pair_rank(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    b * (b - 1) / 2 + a
}

pub(crate) fn pair_orbit_labels(g: &PermGroup) -> Result<PairOrbits> {
    let n = g.degree();
    if n < 2 {
        return Err(Error::invalid("pair orbits need degree at least 2"));
    }
    let total = n * (n - 1) / 2;
    let mut label = vec![u32::MAX; total];
    let mut orbits = Vec::new();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if label[pair_rank(a, b)] != u32::MAX {
                continue;
            }
            let id = orbits.len() as u32;
            label[pair_rank(a, b)] = id;
            queue.clear();
            queue.push((a, b));
            let mut i = 0;
            while i < queue.len() {
                let (x, y) = queue[i];
                for gen in g.generators() {
                    let (u, v) = (gen.apply(x), gen.apply(y));
                    let r = pair_rank(u, v);
                    if label[r] == u32::MAX {
                        label[r] = id;
                        queue.push((u, v));
                    }
                }
                i += 1;
            }
            orbits.push(PairOrbit {
                representative: (a, b),
                length: queue.len(),
            });
        }
    }
    Ok(PairOrbits { label, orbits })
}

/// Orbit of a sorted point set under the group, capped at `cap` sets.
pub(crate) fn set_orbit(g: &PermGroup, set: &[u32], cap: Option<usize>) -> Result<Tree<Vec<u32>>> {
    if set.iter().any(|&x| x as usize >= g.degree()) {
        return Err(Error::invalid("set contains a point outside the domain"));
    }
    let mut seed = set.to_vec();
    seed.sort_unstable();
    let gens = g.generators();
    Tree::build(seed, gens.len(), cap, |gi, s| {
        let mut img: Vec<u32> = s.iter().map(|&x| gens[gi].apply(x as usize) as u32).collect();
        img.sort_unstable();
        img
    })
}

/// Stabilizer of the tree's root, built from Schreier generators of the
/// orbit and stopped as soon as its order reaches `|G| / |orbit|`.
pub(crate) fn stabilizer_from_tree<K: Hash + Eq + Clone>(
    g: &PermGroup,
    tree: &Tree<K>,
    act: impl Fn(usize, &K) -> K,
) -> Result<PermGroup> {
    let order = g.order()?;
    let target = &order / BigUint::from(tree.len());
    let gens = g.generators();
    let degree = g.degree();
    let transversal = |i: usize| word_product(gens, degree, &tree.word(i));
    let mut chain = StabChain::new(degree, &[]);
    let mut stab_gens = Vec::new();
    'outer: for i in 0..tree.len() {
        if chain.order() == target {
            break;
        }
        let u_i = transversal(i);
        for (gi, gen) in gens.iter().enumerate() {
            let j = tree.index[&act(gi, &tree.nodes[i])] as usize;
            if tree.parent[j] == i as u32 && tree.via[j] == gi as u32 {
                continue;
            }
            let h = u_i.then(gen).then(&transversal(j).inverse());
            if chain.insert(&h) {
                stab_gens.push(h);
                if chain.order() == target {
                    break 'outer;
                }
            }
        }
    }
    if chain.order() != target {
        return Err(Error::Integrity(format!(
            "stabilizer order {} does not match |G|/|orbit| = {target}",
            chain.order()
        )));
    }
    Ok(g.subgroup(stab_gens)?.with_known_order(target).with_chain(chain))
}

/// Setwise stabilizer of `set` together with the length of its orbit.
pub fn setwise_stabilizer(g: &PermGroup, set: &[u32]) -> Result<(PermGroup, usize)> {
    let tree = set_orbit(g, set, None)?;
    let gens = g.generators();
    let stab = stabilizer_from_tree(g, &tree, |gi, s: &Vec<u32>| {
        let mut img: Vec<u32> = s.iter().map(|&x| gens[gi].apply(x as usize) as u32).collect();
        img.sort_unstable();
        img
    })?;
    Ok((stab, tree.len()))
}
