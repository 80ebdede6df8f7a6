//! Pythagorean boxes: integer edges `x, y, z` with integer space diagonal
//! `t`, `t² = x² + y² + z²`.
//!
//! The general family is `x = 2v`, `y = 2ℓ`, `z = (ℓ² + v² − n²)/n`,
//! `t = (ℓ² + v² + n²)/n` for a divisor `n` of `ℓ² + v²` with
//! `n² < ℓ² + v²`. It covers every solution up to the order of the edges:
//! modulo 4 at least two edges of any solution are even.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Result, Violation};
use crate::partition;
use crate::triples::{check_generator, TripleParams};
use crate::two_square::enumerate_two_two_with_jobs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBox")]
pub struct PythagoreanBox {
    x: u64,
    y: u64,
    z: u64,
    t: u64,
}

#[derive(Deserialize)]
struct RawBox {
    x: u64,
    y: u64,
    z: u64,
    t: u64,
}

impl TryFrom<RawBox> for PythagoreanBox {
    type Error = crate::Error;

    fn try_from(raw: RawBox) -> Result<Self> {
        PythagoreanBox::new(raw.x, raw.y, raw.z, raw.t)
    }
}

impl PythagoreanBox {
    pub fn new(x: u64, y: u64, z: u64, t: u64) -> Result<Self> {
        for (name, v) in [("x", x), ("y", y), ("z", z), ("t", t)] {
            if v == 0 {
                return Err(Violation::NonPositive(name).into());
            }
            arith::fits(v)?;
        }
        let sum = arith::wide_add(
            arith::wide_add(arith::wide_sq(x)?, arith::wide_sq(y)?)?,
            arith::wide_sq(z)?,
        )?;
        if sum != arith::wide_sq(t)? {
            return Err(Violation::EquationFails {
                equation: "t² = x² + y² + z²",
                values: vec![x, y, z, t],
            }
            .into());
        }
        Ok(Self { x, y, z, t })
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

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn edges(&self) -> [u64; 3] {
        [self.x, self.y, self.z]
    }

    /// Same box with edges in ascending order.
    pub fn sorted(&self) -> Self {
        let mut e = self.edges();
        e.sort_unstable();
        Self {
            x: e[0],
            y: e[1],
            z: e[2],
            t: self.t,
        }
    }
}

impl fmt::Display for PythagoreanBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.z, self.t)
    }
}

/// `(v, ℓ, n)` with `n | ℓ² + v²` and `n² < ℓ² + v²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxParams {
    v: u64,
    ell: u64,
    n: u64,
}

impl BoxParams {
    pub fn new(v: u64, ell: u64, n: u64) -> Result<Self> {
        for (name, val) in [("v", v), ("ell", ell), ("n", n)] {
            if val == 0 {
                return Err(Violation::NonPositive(name).into());
            }
        }
        let s = arith::add(arith::sq(ell)?, arith::sq(v)?)?;
        if s % n != 0 {
            return Err(Violation::NotDivisor {
                divisor: "n",
                dividend: "ell² + v²",
            }
            .into());
        }
        if arith::wide_sq(n)? >= s as u128 {
            return Err(Violation::NotGreater {
                larger: "ell² + v²",
                smaller: "n²",
            }
            .into());
        }
        Ok(Self { v, ell, n })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

pub fn box_from_params(p: &BoxParams) -> Result<PythagoreanBox> {
    let s = arith::add(arith::sq(p.ell)?, arith::sq(p.v)?)?;
    let n2 = arith::sq(p.n)?;
    let (lo, hi) = (s - n2, arith::add(s, n2)?);
    debug_assert!(lo % p.n == 0 && hi % p.n == 0);
    Ok(PythagoreanBox {
        x: arith::mul(2, p.v)?,
        y: arith::mul(2, p.ell)?,
        z: lo / p.n,
        t: hi / p.n,
    })
}

/// `(δ, m, k)` generating `v = δ(m² − k²)`, `ℓ = 2δmk`; same side
/// conditions as triple parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaceDiagonalParams {
    delta: u64,
    m: u64,
    k: u64,
}

impl FaceDiagonalParams {
    pub fn new(delta: u64, m: u64, k: u64) -> Result<Self> {
        check_generator("m", m, "k", k)?;
        if delta == 0 {
            return Err(Violation::NonPositive("delta").into());
        }
        Ok(Self { delta, m, k })
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k
    }
}

/// The `n = 1` box over `(v, ℓ)` from a Pythagorean pair, together with the
/// integral diagonal `d = 2δ(m² + k²)` of its `x × y` face.
pub fn face_diagonal_box(p: &FaceDiagonalParams) -> Result<(PythagoreanBox, u64)> {
    let legs = TripleParams::new(p.delta, p.m, p.k)?;
    let v = legs.difference_leg()?;
    let ell = legs.product_leg()?;
    let d = arith::mul(2, legs.hypotenuse()?)?;
    let b = box_from_params(&BoxParams::new(v, ell, 1)?)?;
    Ok((b, d))
}

/// Face-diagonal boxes for every valid `(δ, m, k)` with `δ, m ≤ max_param`
/// and `t ≤ max_t`, sorted by `(t, x, y)`.
pub fn enumerate_face_diagonal_boxes(
    max_param: u64,
    max_t: u64,
) -> Result<Vec<(PythagoreanBox, u64)>> {
    let mut out = Vec::new();
    for m in 2..=max_param {
        for k in 1..m {
            for delta in 1..=max_param {
                let Ok(p) = FaceDiagonalParams::new(delta, m, k) else {
                    break;
                };
                let (b, d) = face_diagonal_box(&p)?;
                if b.t > max_t {
                    break;
                }
                out.push((b, d));
            }
        }
    }
    out.sort_unstable_by_key(|(b, _)| (b.t, b.x, b.y));
    Ok(out)
}

/// Every box with `t ≤ max_t`, edges ascending, sorted by `(t, x, y)`.
pub fn enumerate_boxes(max_t: u64) -> Result<Vec<PythagoreanBox>> {
    enumerate_boxes_with_jobs(max_t, 1)
}

pub fn enumerate_boxes_with_jobs(max_t: u64, jobs: usize) -> Result<Vec<PythagoreanBox>> {
    if max_t == 0 {
        return Err(Violation::NonPositive("max_t").into());
    }
    let t2 = arith::sq(max_t)? as u128;
    let mut out = partition::flat_map_ordered(1..max_t / 2 + 1, jobs, |ell| {
        let mut batch = Vec::new();
        for v in 1..=ell {
            let s = arith::add(arith::sq(ell)?, arith::sq(v)?)?;
            // t = s/n + n ≥ 2√s
            if 4 * s as u128 > t2 {
                break;
            }
            for n in 1..=arith::isqrt(s) {
                if s % n != 0 || n * n >= s {
                    continue;
                }
                let b = box_from_params(&BoxParams { v, ell, n })?;
                if b.t <= max_t {
                    batch.push(b.sorted());
                }
            }
        }
        Ok(batch)
    })?;
    out.sort_unstable_by_key(|b| (b.t, b.x, b.y, b.z));
    out.dedup();
    Ok(out)
}

/// Boxes with two equal edges, read off `t² = z² + 2x²`: each solution
/// `(x₀, y₀, z₀)` of `x² + 2y² = z²` gives the box `(y₀, y₀, x₀, z₀)`.
/// Sorted by `(t, x, z)`.
pub fn equal_edge_boxes(max_t: u64) -> Result<Vec<PythagoreanBox>> {
    equal_edge_boxes_with_jobs(max_t, 1)
}

pub fn equal_edge_boxes_with_jobs(max_t: u64, jobs: usize) -> Result<Vec<PythagoreanBox>> {
    if max_t == 0 {
        return Err(Violation::NonPositive("max_t").into());
    }
    let mut out: Vec<_> = enumerate_two_two_with_jobs(max_t, false, jobs)?
        .into_iter()
        .map(|s| PythagoreanBox {
            x: s.y(),
            y: s.y(),
            z: s.x(),
            t: s.z(),
        })
        .collect();
    out.sort_unstable_by_key(|b| (b.t, b.x, b.z));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bx(x: u64, y: u64, z: u64, t: u64) -> PythagoreanBox {
        PythagoreanBox::new(x, y, z, t).unwrap()
    }

    fn brute_force(max_t: u64) -> Vec<PythagoreanBox> {
        let mut v = Vec::new();
        for t in 1..=max_t {
            for x in 1..t {
                for y in x..t {
                    for z in y..t {
                        if x * x + y * y + z * z == t * t {
                            v.push(bx(x, y, z, t));
                        }
                    }
                }
            }
        }
        v
    }

    #[test]
    fn from_params_examples() {
        let f = |v, l, n| box_from_params(&BoxParams::new(v, l, n).unwrap()).unwrap();
        assert_eq!(f(1, 1, 1), bx(2, 2, 1, 3));
        assert_eq!(f(1, 2, 1), bx(2, 4, 4, 6));
        assert_eq!(
            BoxParams::new(2, 3, 13),
            Err(Violation::NotGreater {
                larger: "ell² + v²",
                smaller: "n²"
            }
            .into())
        );
        assert!(BoxParams::new(2, 3, 2).is_err());
    }

    #[test]
    fn divisor_equal_to_root_rejected() {
        // ℓ² + v² = 25 = 5²: n = 5 would give z = 0.
        assert!(BoxParams::new(3, 4, 5).is_err());
        assert!(BoxParams::new(3, 4, 1).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_boxes(3).unwrap(), vec![bx(1, 2, 2, 3)]);
        assert_eq!(enumerate_boxes(2).unwrap(), vec![]);
        let nine = enumerate_boxes(9).unwrap();
        assert!(nine.contains(&bx(1, 4, 8, 9)));
        assert!(nine.contains(&bx(4, 4, 7, 9)));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        assert_eq!(enumerate_boxes(60).unwrap(), brute_force(60));
    }

    #[test]
    fn parallel_enumeration_matches() {
        let seq = enumerate_boxes(400).unwrap();
        assert_eq!(enumerate_boxes_with_jobs(400, 4).unwrap(), seq);
    }

    #[test]
    fn face_diagonal_examples() {
        let f = |d, m, k| face_diagonal_box(&FaceDiagonalParams::new(d, m, k).unwrap()).unwrap();
        assert_eq!(f(1, 2, 1), (bx(6, 8, 24, 26), 10));
        assert_eq!(f(1, 3, 2), (bx(10, 24, 168, 170), 26));
        // v = 6, ℓ = 8; 144 + 256 = 400 = 20².
        assert_eq!(f(2, 2, 1), (bx(12, 16, 99, 101), 20));
        assert!(FaceDiagonalParams::new(1, 3, 1).is_err());
    }

    #[test]
    fn face_diagonal_scaling_identity() {
        for delta in 1..=20u64 {
            for m in 2..=20u64 {
                for k in 1..m {
                    let Ok(p) = FaceDiagonalParams::new(delta, m, k) else {
                        continue;
                    };
                    let (b, d) = face_diagonal_box(&p).unwrap();
                    assert_eq!(b.x * b.x + b.y * b.y, d * d);
                    assert_eq!(d, 2 * delta * (m * m + k * k));
                }
            }
        }
    }

    #[test]
    fn face_diagonal_listing() {
        let listed = enumerate_face_diagonal_boxes(3, 200).unwrap();
        let boxes: Vec<_> = listed.iter().map(|&(b, d)| (b.t, d)).collect();
        assert_eq!(boxes, vec![(26, 10), (101, 20), (170, 26)]);
    }

    #[test]
    fn equal_edge_examples() {
        assert_eq!(equal_edge_boxes(3).unwrap(), vec![bx(2, 2, 1, 3)]);
        assert!(equal_edge_boxes(9).unwrap().contains(&bx(4, 4, 7, 9)));
        assert_eq!(equal_edge_boxes(2).unwrap(), vec![]);
    }

    #[test]
    fn equal_edge_matches_brute_force() {
        let mut want = Vec::new();
        for t in 1..=300u64 {
            for e in 1..t {
                for z in 1..t {
                    if 2 * e * e + z * z == t * t {
                        want.push(bx(e, e, z, t));
                    }
                }
            }
        }
        assert_eq!(equal_edge_boxes(300).unwrap(), want);
    }

    proptest! {
        #[test]
        fn params_divide_exactly(v in 1u64..2000, ell in 1u64..2000, pick in 0usize..64) {
            let s = ell * ell + v * v;
            let divisors: Vec<u64> = (1..=s.isqrt()).filter(|n| s % n == 0 && n * n < s).collect();
            let n = divisors[pick % divisors.len()];
            prop_assert_eq!((s - n * n) % n, 0);
            prop_assert_eq!((s + n * n) % n, 0);
            let b = box_from_params(&BoxParams::new(v, ell, n).unwrap()).unwrap();
            prop_assert!(PythagoreanBox::new(b.x, b.y, b.z, b.t).is_ok());
        }
    }
}
