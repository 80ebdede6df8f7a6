//! Solutions of `x² + 2y² = z²` from `x = δ|k² − 2λ²|`, `y = 2δkλ`,
//! `z = δ(k² + 2λ²)` with `gcd(k, λ) = 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd_nonzero};
use crate::error::{Result, Violation};
use crate::partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSolution")]
pub struct TwoTwoSolution {
    x: u64,
    y: u64,
    z: u64,
}

#[derive(Deserialize)]
struct RawSolution {
    x: u64,
    y: u64,
    z: u64,
}

impl TryFrom<RawSolution> for TwoTwoSolution {
    type Error = crate::Error;

    fn try_from(raw: RawSolution) -> Result<Self> {
        TwoTwoSolution::new(raw.x, raw.y, raw.z)
    }
}

impl TwoTwoSolution {
    pub fn new(x: u64, y: u64, z: u64) -> Result<Self> {
        for (name, v) in [("x", x), ("y", y), ("z", z)] {
            if v == 0 {
                return Err(Violation::NonPositive(name).into());
            }
            arith::fits(v)?;
        }
        let lhs = arith::wide_add(arith::wide_sq(x)?, arith::wide_mul(2, arith::wide_sq(y)?)?)?;
        if lhs != arith::wide_sq(z)? {
            return Err(Violation::EquationFails {
                equation: "x² + 2y² = z²",
                values: vec![x, y, z],
            }
            .into());
        }
        Ok(Self { x, y, z })
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }
}

impl fmt::Display for TwoTwoSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoTwoParams {
    delta: u64,
    k: u64,
    lambda: u64,
}

impl TwoTwoParams {
    pub fn new(delta: u64, k: u64, lambda: u64) -> Result<Self> {
        for (name, v) in [("delta", delta), ("k", k), ("lambda", lambda)] {
            if v == 0 {
                return Err(Violation::NonPositive(name).into());
            }
        }
        if gcd_nonzero(k, lambda) != 1 {
            return Err(Violation::NotCoprime("k, lambda").into());
        }
        Ok(Self { delta, k, lambda })
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }
}

pub fn two_two_from_params(p: &TwoTwoParams) -> Result<TwoTwoSolution> {
    let k2 = arith::sq(p.k)?;
    let l2 = arith::mul(2, arith::sq(p.lambda)?)?;
    // √2 is irrational, so k² ≠ 2λ² and x is never zero.
    assert_ne!(k2, l2, "k² = 2λ² has no positive solutions");
    Ok(TwoTwoSolution {
        x: arith::mul(p.delta, k2.abs_diff(l2))?,
        y: arith::mul(p.delta, arith::mul(2, arith::mul(p.k, p.lambda)?)?)?,
        z: arith::mul(p.delta, arith::add(k2, l2)?)?,
    })
}

/// Every solution with `z ≤ max_z`, sorted by `(z, x)`. With `odd_k_only`
/// the generator is restricted to odd `k`.
pub fn enumerate_two_two(max_z: u64, odd_k_only: bool) -> Result<Vec<TwoTwoSolution>> {
    enumerate_two_two_with_jobs(max_z, odd_k_only, 1)
}

pub fn enumerate_two_two_with_jobs(
    max_z: u64,
    odd_k_only: bool,
    jobs: usize,
) -> Result<Vec<TwoTwoSolution>> {
    if max_z == 0 {
        return Err(Violation::NonPositive("max_z").into());
    }
    arith::sq(max_z)?;
    let k_max = arith::isqrt(max_z);
    let mut out = partition::flat_map_ordered(1..k_max + 1, jobs, |k| {
        let mut batch = Vec::new();
        if odd_k_only && k % 2 == 0 {
            return Ok(batch);
        }
        let lambda_max = arith::isqrt(max_z / 2);
        for lambda in 1..=lambda_max {
            let z0 = k * k + 2 * lambda * lambda;
            if z0 > max_z {
                break;
            }
            let Ok(p) = TwoTwoParams::new(1, k, lambda) else {
                continue;
            };
            for delta in 1..=max_z / z0 {
                batch.push(two_two_from_params(&TwoTwoParams { delta, ..p })?);
            }
        }
        Ok(batch)
    })?;
    out.sort_unstable_by_key(|s| (s.z, s.x, s.y));
    out.dedup();
    Ok(out)
}
