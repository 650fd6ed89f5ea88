use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::FactoredInt;
use crate::error::{Error, Result};

/// `(v-1) | gcd(k-1, v-1) · d`.
pub fn subdegree_divisibility(v: &BigUint, k: u64, d: &BigUint) -> bool {
    let v1 = v - 1u32;
    if v1.is_zero() {
        return true;
    }
    let g = v1.gcd(&BigUint::from(k - 1));
    (g * d % &v1).is_zero()
}

/// `|G| <= gcd(k-1, v-1)|H|² + |H|`, where `v = |G|/|H|` must be exact.
pub fn order_bound(gorder: &BigUint, horder: &BigUint, v: &BigUint, k: u64) -> Result<bool> {
    if horder.is_zero() || &(v * horder) != gorder {
        return Err(Error::invalid(format!("v = {v} is not |G|/|H| = {gorder}/{horder}")));
    }
    let g = (v - 1u32).gcd(&BigUint::from(k - 1));
    let g = if g.is_zero() { BigUint::from(k - 1) } else { g };
    Ok(gorder <= &(g * horder * horder + horder))
}

/// `k(k-1)/(m+1)` and whether it is an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCheck {
    pub value: BigRational,
    pub integral: bool,
}

pub fn grid_two_path_check(k: u64, m: u64) -> Result<GridCheck> {
    if m < 1 {
        return Err(Error::invalid("grid check needs m >= 1"));
    }
    let value = BigRational::new(BigInt::from(k * (k - 1)), BigInt::from(m + 1));
    Ok(GridCheck {
        integral: value.is_integer(),
        value,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamTriple {
    pub b: BigUint,
    pub r: BigUint,
    pub lambda: BigUint,
}

/// Optional extra conditions on scanned triples. The defaults impose none.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanFilters {
    pub require_v_le_b: bool,
    pub min_lambda: Option<u64>,
}

/// Divisors `b` of the group order for which `r = bk/v` and
/// `λ = r(k-1)/(v-1)` are both positive integers, in increasing `b`.
pub fn divisor_parameter_scan(gorder: &FactoredInt, v: u64, k: u64) -> Result<Vec<ParamTriple>> {
    divisor_parameter_scan_filtered(gorder, v, k, ScanFilters::default())
}

pub fn divisor_parameter_scan_filtered(
    gorder: &FactoredInt,
    v: u64,
    k: u64,
    filters: ScanFilters,
) -> Result<Vec<ParamTriple>> {
    if v < k || k < 2 || v < 2 {
        return Err(Error::invalid(format!("need v >= k >= 2, got v={v} k={k}")));
    }
    let (vb, kb, v1, k1) = (
        BigUint::from(v),
        BigUint::from(k),
        BigUint::from(v - 1),
        BigUint::from(k - 1),
    );
    let mut out = Vec::new();
    for b in gorder.divisors() {
        let (r, rem) = (&b * &kb).div_rem(&vb);
        if !rem.is_zero() {
            continue;
        }
        let (lambda, rem) = (&r * &k1).div_rem(&v1);
        if !rem.is_zero() || lambda.is_zero() {
            continue;
        }
        if filters.require_v_le_b && b < vb {
            continue;
        }
        if filters.min_lambda.is_some_and(|m| lambda < BigUint::from(m)) {
            continue;
        }
        out.push(ParamTriple { b, r, lambda });
    }
    Ok(out)
}
