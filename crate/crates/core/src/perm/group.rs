use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use super::chain::StabChain;
use super::orbit::{orbit_points, orbits};
use super::Permutation;
use crate::error::{Error, Result};

/// A permutation group given by generators, with an optional known order.
///
/// The stabilizer chain is built lazily on first use and cached.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    known_order: Option<BigUint>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::invalid("group degree must be at least 1"));
        }
        if generators.is_empty() {
            return Err(Error::invalid("a group needs at least one generator"));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            known_order: None,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, vec![Permutation::identity(degree)]).expect("valid trivial group")
    }

    pub fn with_known_order(mut self, order: BigUint) -> Self {
        self.known_order = Some(order);
        self
    }

    pub(crate) fn with_chain(self, chain: StabChain) -> Self {
        let _ = self.chain.set(chain);
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn known_order(&self) -> Option<&BigUint> {
        self.known_order.as_ref()
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    /// Exact order from the stabilizer chain; a disagreeing `known_order`
    /// is an integrity error.
    pub fn order(&self) -> Result<BigUint> {
        let order = self.chain().order();
        match &self.known_order {
            Some(known) if *known != order => Err(Error::Integrity(format!(
                "declared order {known} but the stabilizer chain gives {order}"
            ))),
            _ => Ok(order),
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_transitive(&self) -> bool {
        orbit_points(self, 0).len() == self.degree
    }

    pub(crate) fn require_transitive(&self) -> Result<()> {
        if self.is_transitive() {
            Ok(())
        } else {
            Err(Error::Intransitive {
                orbits: orbits(self),
            })
        }
    }

    /// Stabilizer of `x`, generated by the strong generators of a chain
    /// whose base starts at `x`. The returned group carries its order and
    /// its own chain.
    pub fn point_stabilizer(&self, x: usize) -> Result<PermGroup> {
        if x >= self.degree {
            return Err(Error::invalid(format!("point {x} outside degree {}", self.degree)));
        }
        let chain = StabChain::with_base(self.degree, &[x], &self.generators);
        let tail = chain.tail(1);
        let mut gens = chain.level_generators(1);
        if gens.is_empty() {
            gens.push(Permutation::identity(self.degree));
        }
        let order = tail.order();
        Ok(PermGroup::new(self.degree, gens)?
            .with_known_order(order)
            .with_chain(tail))
    }

    /// Subgroup generated by `gens` inside this group's degree.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        let gens = if gens.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            gens
        };
        PermGroup::new(self.degree, gens)
    }

    /// Lexicographically least image of a point set under the group.
    pub fn min_set_image(&self, set: &[u32]) -> Vec<u32> {
        StabChain::with_full_base(self.degree, &self.generators).min_set_image(set)
    }
}

fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `S_c` generated by `(0 1)` and `(0 1 .. c-1)`, with order `c!`.
pub fn symmetric_group(c: usize) -> Result<PermGroup> {
    if c == 0 {
        return Err(Error::invalid("symmetric group needs c >= 1"));
    }
    let gens = if c == 1 {
        vec![Permutation::identity(1)]
    } else {
        let cycle: Vec<usize> = (0..c).collect();
        vec![
            Permutation::from_cycles(c, &[&[0, 1]])?,
            Permutation::from_cycles(c, &[&cycle])?,
        ]
    };
    Ok(PermGroup::new(c, gens)?.with_known_order(factorial(c)))
}

/// `A_c` generated by `(0 1 2)` and the long cycle on `0..c` (odd `c`) or
/// on `1..c` (even `c`); order `c!/2`.
pub fn alternating_group(c: usize) -> Result<PermGroup> {
    if c < 3 {
        return Err(Error::invalid("alternating group generators need c >= 3"));
    }
    let long: Vec<usize> = if c % 2 == 1 { (0..c).collect() } else { (1..c).collect() };
    let gens = vec![
        Permutation::from_cycles(c, &[&[0, 1, 2]])?,
        Permutation::from_cycles(c, &[&long])?,
    ];
    Ok(PermGroup::new(c, gens)?.with_known_order(factorial(c) / 2u32))
}

pub fn cyclic_group(n: usize) -> Result<PermGroup> {
    let cycle: Vec<usize> = (0..n).collect();
    let g = if n == 1 {
        Permutation::identity(1)
    } else {
        Permutation::from_cycles(n, &[&cycle])?
    };
    Ok(PermGroup::new(n, vec![g])?.with_known_order(BigUint::from(n)))
}
