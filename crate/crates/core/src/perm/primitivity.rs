use super::orbit::orbits_of_gens;
use super::PermGroup;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    /// A non-trivial block system preserved by the group: classes sorted,
    /// ordered by least element.
    Imprimitive { blocks: Vec<Vec<usize>> },
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Primitivity::Primitive)
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }
}

/// Finest block system in which `0` and `y` share a block.
fn minimal_block_system(g: &PermGroup, y: usize) -> Vec<Vec<usize>> {
    let n = g.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = vec![(0usize, y)];
    let (r0, ry) = (uf.find(0), uf.find(y));
    uf.parent[ry.max(r0)] = ry.min(r0) as u32;
    while let Some((a, b)) = queue.pop() {
        for gen in g.generators() {
            let ra = uf.find(gen.apply(a));
            let rb = uf.find(gen.apply(b));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                uf.parent[hi] = lo as u32;
                queue.push((lo, hi));
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        let r = uf.find(x);
        classes[r].push(x);
    }
    classes.retain(|c| !c.is_empty());
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

/// Primitivity of a transitive group, by closing `{0, y}` under the
/// generators for every `y` in turn.
pub fn is_primitive(g: &PermGroup) -> Result<Primitivity> {
    g.require_transitive()?;
    let n = g.degree();
    // Only one y per orbit of the stabilizer of 0 needs checking, but the
    // stabilizer costs more than the closures at the degrees used here.
    for y in 1..n {
        let blocks = minimal_block_system(g, y);
        if blocks.len() > 1 {
            return Ok(Primitivity::Imprimitive { blocks });
        }
    }
    Ok(Primitivity::Primitive)
}

/// Lengths of the orbits of the stabilizer of `x`, ascending; the fixed
/// point contributes a 1.
pub fn subdegrees(g: &PermGroup, x: usize) -> Result<Vec<usize>> {
    g.require_transitive()?;
    let stab = g.point_stabilizer(x)?;
    let mut lengths: Vec<usize> = orbits_of_gens(g.degree(), stab.generators())
        .iter()
        .map(Vec::len)
        .collect();
    lengths.sort_unstable();
    Ok(lengths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::perm::{cyclic_group, symmetric_group, Permutation};

    #[test]
    fn cyclic_four_is_imprimitive() {
        let g = cyclic_group(4).unwrap();
        assert_eq!(
            is_primitive(&g).unwrap(),
            Primitivity::Imprimitive {
                blocks: vec![vec![0, 2], vec![1, 3]]
            }
        );
    }

    #[test]
    fn natural_symmetric_is_primitive() {
        assert!(is_primitive(&symmetric_group(5).unwrap()).unwrap().is_primitive());
        assert!(is_primitive(&cyclic_group(7).unwrap()).unwrap().is_primitive());
    }

    #[test]
    fn intransitive_rejected_with_orbits() {
        let g = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        match is_primitive(&g) {
            Err(Error::Intransitive { orbits }) => {
                assert_eq!(orbits, vec![vec![0, 1], vec![2], vec![3]])
            }
            other => panic!("{other:?}"),
        }
        assert!(subdegrees(&g, 0).is_err());
    }

    #[test]
    fn subdegrees_of_trivial_degree_one() {
        assert_eq!(subdegrees(&PermGroup::trivial(1), 0).unwrap(), vec![1]);
        assert_eq!(subdegrees(&symmetric_group(6).unwrap(), 3).unwrap(), vec![1, 5]);
    }
}
