use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The reason a parameter set cannot belong to a 2-design, named by the
/// first condition that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Infeasibility {
    /// `λ(v-1)` is not divisible by `k-1`.
    ReplicationNotIntegral { lambda_v1: u128, k1: u64 },
    /// `vr` is not divisible by `k`.
    BlocksNotIntegral { vr: u128, k: u64 },
    /// Fisher: `k <= r` fails.
    ReplicationBelowBlockSize { r: u64, k: u64 },
    /// Fisher: `v <= b` fails.
    FewerBlocksThanPoints { b: u64, v: u64 },
    /// `λv < r²` fails.
    LambdaBound { lambda_v: u128, r_squared: u128 },
    /// A stated quintuple violates `r(k-1) = λ(v-1)` or `vr = bk`.
    Counting(String),
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasibility::ReplicationNotIntegral { lambda_v1, k1 } => {
                write!(f, "divisibility: r = {lambda_v1}/{k1} is not an integer")
            }
            Infeasibility::BlocksNotIntegral { vr, k } => {
                write!(f, "divisibility: b = {vr}/{k} is not an integer")
            }
            Infeasibility::ReplicationBelowBlockSize { r, k } => {
                write!(f, "Fisher: r = {r} < k = {k}")
            }
            Infeasibility::FewerBlocksThanPoints { b, v } => {
                write!(f, "Fisher: b = {b} < v = {v}")
            }
            Infeasibility::LambdaBound { lambda_v, r_squared } => {
                write!(f, "λv = {lambda_v} is not below r² = {r_squared}")
            }
            Infeasibility::Counting(msg) => write!(f, "counting: {msg}"),
        }
    }
}

/// A 2-design parameter set `(v, b, r, k, λ)` satisfying the counting
/// identities and the Fisher-type inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

impl DesignParams {
    /// Validates a full quintuple.
    pub fn new(v: u64, b: u64, r: u64, k: u64, lambda: u64) -> Result<Self> {
        if v < 2 || k < 2 || lambda < 1 {
            return Err(Error::invalid("need v >= 2, k >= 2, λ >= 1"));
        }
        let (v_, b_, r_, k_, l_) = (v as u128, b as u128, r as u128, k as u128, lambda as u128);
        if r_ * (k_ - 1) != l_ * (v_ - 1) {
            return Err(Error::Infeasible(Infeasibility::Counting(format!(
                "r(k-1) = {} but λ(v-1) = {}",
                r_ * (k_ - 1),
                l_ * (v_ - 1)
            ))));
        }
        if v_ * r_ != b_ * k_ {
            return Err(Error::Infeasible(Infeasibility::Counting(format!(
                "vr = {} but bk = {}",
                v_ * r_,
                b_ * k_
            ))));
        }
        let p = DesignParams { v, b, r, k, lambda };
        p.check_inequalities()?;
        Ok(p)
    }

    fn check_inequalities(&self) -> Result<()> {
        if self.r < self.k {
            return Err(Error::Infeasible(Infeasibility::ReplicationBelowBlockSize {
                r: self.r,
                k: self.k,
            }));
        }
        if self.b < self.v {
            return Err(Error::Infeasible(Infeasibility::FewerBlocksThanPoints {
                b: self.b,
                v: self.v,
            }));
        }
        let lambda_v = self.lambda as u128 * self.v as u128;
        let r_squared = self.r as u128 * self.r as u128;
        if lambda_v >= r_squared {
            return Err(Error::Infeasible(Infeasibility::LambdaBound { lambda_v, r_squared }));
        }
        Ok(())
    }

    /// `2 < k < v - 1`.
    pub fn is_nontrivial(&self) -> bool {
        2 < self.k && self.k + 1 < self.v
    }

    /// Number of incident point-block pairs, `vr = bk`.
    pub fn flag_count(&self) -> u128 {
        self.v as u128 * self.r as u128
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(v={}, b={}, r={}, k={}, λ={})",
            self.v, self.b, self.r, self.k, self.lambda
        )
    }
}

/// Derives `r = λ(v-1)/(k-1)` and `b = vr/k`, reporting the first failed
/// condition in the order: r integral, k ≤ r, b integral, v ≤ b, λv < r².
pub fn derive_params(v: u64, k: u64, lambda: u64) -> Result<DesignParams> {
    if !(v > k && k >= 2 && lambda >= 1) {
        return Err(Error::invalid(format!(
            "need v > k >= 2 and λ >= 1, got v={v} k={k} λ={lambda}"
        )));
    }
    let lambda_v1 = lambda as u128 * (v as u128 - 1);
    let k1 = k - 1;
    if !lambda_v1.is_multiple_of(k1 as u128) {
        return Err(Error::Infeasible(Infeasibility::ReplicationNotIntegral { lambda_v1, k1 }));
    }
    let r = u64::try_from(lambda_v1 / k1 as u128).map_err(|_| Error::invalid("r exceeds 64 bits"))?;
    if r < k {
        return Err(Error::Infeasible(Infeasibility::ReplicationBelowBlockSize { r, k }));
    }
    let vr = v as u128 * r as u128;
    if !vr.is_multiple_of(k as u128) {
        return Err(Error::Infeasible(Infeasibility::BlocksNotIntegral { vr, k }));
    }
    let b = u64::try_from(vr / k as u128).map_err(|_| Error::invalid("b exceeds 64 bits"))?;
    let p = DesignParams { v, b, r, k, lambda };
    p.check_inequalities()?;
    Ok(p)
}
