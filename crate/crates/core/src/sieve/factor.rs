use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A positive integer stored as its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactoredInt {
    factors: BTreeMap<u64, u32>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FactoredInt {
    pub fn one() -> Self {
        FactoredInt::default()
    }

    /// From explicit `(prime, exponent)` pairs; zero exponents are dropped
    /// and repeated primes are merged.
    pub fn from_factors(pairs: impl IntoIterator<Item = (u64, u32)>) -> Result<Self> {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(Error::invalid(format!("{p} is not prime")));
            }
            if e > 0 {
                *factors.entry(p).or_insert(0) += e;
            }
        }
        Ok(FactoredInt { factors })
    }

    /// Trial division. Intended for numbers whose prime factors are small,
    /// such as group orders.
    pub fn factor(n: u128) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("cannot factor zero"));
        }
        let mut n = n;
        let mut factors = BTreeMap::new();
        let mut p: u128 = 2;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *factors.entry(p as u64).or_insert(0) += 1;
                n /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > 1 {
            let n = u64::try_from(n).map_err(|_| Error::invalid("prime factor exceeds 64 bits"))?;
            *factors.entry(n).or_insert(0) += 1;
        }
        Ok(FactoredInt { factors })
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (&p, &e)| acc * BigUint::from(p).pow(e))
    }

    pub fn divisor_count(&self) -> u128 {
        self.factors.values().map(|&e| e as u128 + 1).product()
    }

    pub fn divides(&self, other: &FactoredInt) -> bool {
        self.factors.iter().all(|(&p, &e)| other.exponent(p) >= e)
    }

    /// All divisors, ascending.
    pub fn divisors(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::one()];
        for (&p, &e) in &self.factors {
            let p = BigUint::from(p);
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in &out {
                let mut x = d.clone();
                next.push(x.clone());
                for _ in 0..e {
                    x *= &p;
                    next.push(x.clone());
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }
}

impl std::ops::Mul for &FactoredInt {
    type Output = FactoredInt;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &FactoredInt) -> FactoredInt {
        let mut factors = self.factors.clone();
        for (&p, &e) in &rhs.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        FactoredInt { factors }
    }
}

impl fmt::Display for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" · "))
    }
}

/// `n!` by Legendre's formula; `halved` removes one factor of 2, giving
/// the order of the alternating group.
pub fn factorial_factorization(n: u64, halved: bool) -> Result<FactoredInt> {
    if n < 2 || (halved && n < 4) {
        return Err(Error::invalid(format!(
            "factorial factorization needs n >= {}, got {n}",
            if halved { 4 } else { 2 }
        )));
    }
    let mut factors = BTreeMap::new();
    for p in (2..=n).filter(|&p| is_prime(p)) {
        let (mut e, mut q) = (0u32, p);
        while q <= n {
            e += (n / q) as u32;
            q = match q.checked_mul(p) {
                Some(q) => q,
                None => break,
            };
        }
        factors.insert(p, e);
    }
    if halved {
        *factors.get_mut(&2).expect("n >= 4") -= 1;
    }
    Ok(FactoredInt { factors })
}
