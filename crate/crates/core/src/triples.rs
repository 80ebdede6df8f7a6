//! Pythagorean triples through the classical `(δ, m, n)` parametrization:
//! `a = δ(m² − n²)`, `b = 2δmn`, `c = δ(m² + n²)` with `m > n`,
//! `gcd(m, n) = 1` and `m + n` odd.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd_nonzero};
use crate::error::{Result, Violation};
use crate::partition;

/// A Pythagorean triple stored with its legs in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTriple")]
pub struct Triple {
    a: u64,
    b: u64,
    c: u64,
}

#[derive(Deserialize)]
struct RawTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl TryFrom<RawTriple> for Triple {
    type Error = crate::Error;

    fn try_from(raw: RawTriple) -> Result<Self> {
        Triple::new(raw.a, raw.b, raw.c)
    }
}

impl Triple {
    /// Validates `a² + b² = c²`; the legs may be given in either order.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if v == 0 {
                return Err(Violation::NonPositive(name).into());
            }
            arith::fits(v)?;
        }
        let lhs = arith::wide_add(arith::wide_sq(a)?, arith::wide_sq(b)?)?;
        if lhs != arith::wide_sq(c)? {
            return Err(Violation::EquationFails {
                equation: "a² + b² = c²",
                values: vec![a, b, c],
            }
            .into());
        }
        Ok(Self {
            a: a.min(b),
            b: a.max(b),
            c,
        })
    }

    /// Shorter leg.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Longer leg.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// Hypotenuse.
    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn legs(&self) -> [u64; 2] {
        [self.a, self.b]
    }

    pub fn scaled(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Violation::NonPositive("scale").into());
        }
        Ok(Self {
            a: arith::mul(self.a, k)?,
            b: arith::mul(self.b, k)?,
            c: arith::mul(self.c, k)?,
        })
    }

    fn sort_key(&self) -> (u64, u64) {
        (self.c, self.a)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// `(δ, m, n)` with `m > n ≥ 1`, `gcd(m, n) = 1` and `m + n` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTripleParams")]
pub struct TripleParams {
    delta: u64,
    m: u64,
    n: u64,
}

#[derive(Deserialize)]
struct RawTripleParams {
    delta: u64,
    m: u64,
    n: u64,
}

impl TryFrom<RawTripleParams> for TripleParams {
    type Error = crate::Error;

    fn try_from(raw: RawTripleParams) -> Result<Self> {
        TripleParams::new(raw.delta, raw.m, raw.n)
    }
}

impl TripleParams {
    pub fn new(delta: u64, m: u64, n: u64) -> Result<Self> {
        check_generator("m", m, "n", n)?;
        if delta == 0 {
            return Err(Violation::NonPositive("delta").into());
        }
        Ok(Self { delta, m, n })
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `δ(m² − n²)`, the odd-generator leg.
    pub fn difference_leg(&self) -> Result<u64> {
        arith::mul(
            self.delta,
            arith::sub(arith::sq(self.m)?, arith::sq(self.n)?)?,
        )
    }

    /// `2δmn`, the even-generator leg.
    pub fn product_leg(&self) -> Result<u64> {
        arith::mul(self.delta, arith::mul(2, arith::mul(self.m, self.n)?)?)
    }

    /// `δ(m² + n²)`.
    pub fn hypotenuse(&self) -> Result<u64> {
        arith::mul(
            self.delta,
            arith::add(arith::sq(self.m)?, arith::sq(self.n)?)?,
        )
    }
}

/// Checks the generator conditions on a pair `(big, small)`: `big > small ≥ 1`,
/// coprime, opposite parity. The names are used in the error.
pub(crate) fn check_generator(
    big_name: &'static str,
    big: u64,
    small_name: &'static str,
    small: u64,
) -> Result<()> {
    if small == 0 {
        return Err(Violation::NonPositive(small_name).into());
    }
    if big <= small {
        return Err(Violation::NotGreater {
            larger: big_name,
            smaller: small_name,
        }
        .into());
    }
    if gcd_nonzero(big, small) != 1 {
        return Err(Violation::NotCoprime(generator_pair(big_name)).into());
    }
    if (big + small).is_multiple_of(2) {
        return Err(Violation::SameParity(generator_pair(big_name)).into());
    }
    Ok(())
}

fn generator_pair(big_name: &'static str) -> &'static str {
    match big_name {
        "M" => "M, N",
        "k" => "m, k",
        _ => "m, n",
    }
}

pub fn triple_from_params(p: &TripleParams) -> Result<Triple> {
    let (x, y, c) = (p.difference_leg()?, p.product_leg()?, p.hypotenuse()?);
    Ok(Triple {
        a: x.min(y),
        b: x.max(y),
        c,
    })
}

pub fn is_primitive(t: &Triple) -> bool {
    gcd_nonzero(t.a, t.b) == 1
}

/// Canonical parameters of a triple together with whether its even leg
/// is the shorter one (i.e. sits first in canonical order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub params: TripleParams,
    pub leg_swap: bool,
}

/// Inverse of [`triple_from_params`] with `δ = gcd(a, b, c)`.
pub fn params_of(t: &Triple) -> Result<Decomposition> {
    let delta = gcd_nonzero(t.a, t.b);
    let (a, b, c) = (t.a / delta, t.b / delta, t.c / delta);
    let leg_swap = a % 2 == 0;
    let odd = if leg_swap { b } else { a };
    let broken = || Violation::EquationFails {
        equation: "a² + b² = c²",
        values: vec![t.a, t.b, t.c],
    };
    let m = arith::exact_sqrt((c + odd) / 2).ok_or_else(broken)?;
    let n = arith::exact_sqrt((c - odd) / 2).ok_or_else(broken)?;
    Ok(Decomposition {
        params: TripleParams::new(delta, m, n)?,
        leg_swap,
    })
}

/// All triples with `c ≤ max_c`, sorted by `(c, a)`.
pub fn enumerate_triples(max_c: u64, primitive_only: bool) -> Result<Vec<Triple>> {
    enumerate_triples_with_jobs(max_c, primitive_only, 1)
}

pub fn enumerate_triples_with_jobs(
    max_c: u64,
    primitive_only: bool,
    jobs: usize,
) -> Result<Vec<Triple>> {
    if max_c == 0 {
        return Err(Violation::NonPositive("max_c").into());
    }
    arith::sq(max_c)?;
    let m_max = arith::isqrt(max_c - 1);
    let mut out = partition::flat_map_ordered(2..m_max + 1, jobs, |m| {
        let mut batch = Vec::new();
        for n in 1..m {
            let c0 = m * m + n * n;
            if c0 > max_c {
                break;
            }
            let Ok(p) = TripleParams::new(1, m, n) else {
                continue;
            };
            let primitive = triple_from_params(&p)?;
            let deltas = if primitive_only { 1 } else { max_c / c0 };
            for delta in 1..=deltas {
                batch.push(primitive.scaled(delta)?);
            }
        }
        Ok(batch)
    })?;
    out.sort_unstable_by_key(Triple::sort_key);
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use proptest::prelude::*;

    fn t(a: u64, b: u64, c: u64) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    fn brute_force(max_c: u64) -> Vec<(u64, u64, u64)> {
        let mut v = Vec::new();
        for c in 1..=max_c {
            for a in 1..c {
                for b in a..c {
                    if a * a + b * b == c * c {
                        v.push((a, b, c));
                    }
                }
            }
        }
        v
    }

    #[test]
    fn from_params_examples() {
        let f = |d, m, n| triple_from_params(&TripleParams::new(d, m, n).unwrap()).unwrap();
        assert_eq!(f(1, 2, 1), t(3, 4, 5));
        assert_eq!(f(1, 3, 2), t(5, 12, 13));
        assert_eq!(f(2, 2, 1), t(6, 8, 10));
    }

    #[test]
    fn params_name_the_violation() {
        assert_eq!(
            TripleParams::new(1, 2, 2),
            Err(Violation::NotGreater {
                larger: "m",
                smaller: "n"
            }
            .into())
        );
        assert_eq!(
            TripleParams::new(1, 3, 1),
            Err(Violation::SameParity("m, n").into())
        );
        assert_eq!(
            TripleParams::new(1, 6, 3),
            Err(Violation::NotCoprime("m, n").into())
        );
        assert_eq!(
            TripleParams::new(0, 2, 1),
            Err(Violation::NonPositive("delta").into())
        );
        assert_eq!(
            TripleParams::new(1, 2, 0),
            Err(Violation::NonPositive("n").into())
        );
    }

    #[test]
    fn from_params_overflow() {
        let p = TripleParams::new(u64::MAX / 2, 2, 1).unwrap();
        assert!(matches!(triple_from_params(&p), Err(Error::Overflow(_))));
        let p = TripleParams::new(1, 1 << 32, 1).unwrap();
        assert!(matches!(triple_from_params(&p), Err(Error::Overflow(_))));
    }

    #[test]
    fn rejects_non_triples() {
        assert!(Triple::new(3, 4, 6).is_err());
        assert!(Triple::new(0, 4, 4).is_err());
        assert_eq!(t(4, 3, 5), t(3, 4, 5));
    }

    #[test]
    fn primitivity_examples() {
        assert!(is_primitive(&t(3, 4, 5)));
        assert!(!is_primitive(&t(6, 8, 10)));
        assert!(is_primitive(&t(5, 12, 13)));
    }

    #[test]
    fn primitivity_equals_pairwise_coprimality() {
        for tr in enumerate_triples(1000, false).unwrap() {
            let pairwise = [(tr.a, tr.b), (tr.b, tr.c), (tr.c, tr.a)]
                .iter()
                .all(|&(x, y)| gcd_nonzero(x, y) == 1);
            assert_eq!(is_primitive(&tr), pairwise, "{tr}");
        }
    }

    #[test]
    fn primitive_triples_have_one_even_leg() {
        for tr in enumerate_triples(1000, true).unwrap() {
            assert_eq!((tr.a % 2) + (tr.b % 2), 1, "{tr}");
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_triples(5, true).unwrap(), vec![t(3, 4, 5)]);
        assert_eq!(
            enumerate_triples(13, true).unwrap(),
            vec![t(3, 4, 5), t(5, 12, 13)]
        );
        assert_eq!(enumerate_triples(2, false).unwrap(), vec![]);
        assert_eq!(enumerate_triples(1, false).unwrap(), vec![]);
        assert!(enumerate_triples(0, false).is_err());
        assert!(matches!(
            enumerate_triples(1 << 32, false),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let got: Vec<_> = enumerate_triples(300, false)
            .unwrap()
            .iter()
            .map(|t| (t.a, t.b, t.c))
            .collect();
        let mut want = brute_force(300);
        want.sort_by_key(|&(a, _, c)| (c, a));
        assert_eq!(got, want);
    }

    #[test]
    fn parallel_enumeration_matches() {
        let seq = enumerate_triples(2000, false).unwrap();
        assert_eq!(enumerate_triples_with_jobs(2000, false, 4).unwrap(), seq);
    }

    #[test]
    fn decomposition_examples() {
        let d = params_of(&t(3, 4, 5)).unwrap();
        assert_eq!(d.params, TripleParams::new(1, 2, 1).unwrap());
        assert!(!d.leg_swap);
        let d = params_of(&t(9, 12, 15)).unwrap();
        assert_eq!(d.params, TripleParams::new(3, 2, 1).unwrap());
        let d = params_of(&t(20, 21, 29)).unwrap();
        assert_eq!(d.params, TripleParams::new(1, 5, 2).unwrap());
        assert!(d.leg_swap);
    }

    #[test]
    fn scaled_triples_are_not_primitive() {
        for (m, n) in [(2, 1), (3, 2), (4, 1), (5, 2), (7, 4)] {
            for delta in 1..6 {
                let tr = triple_from_params(&TripleParams::new(delta, m, n).unwrap()).unwrap();
                assert_eq!(is_primitive(&tr), delta == 1);
            }
        }
    }

    proptest! {
        #[test]
        fn params_round_trip(m in 2u64..700, n in 1u64..700, delta in 1u64..1000) {
            prop_assume!(n < m);
            let Ok(p) = TripleParams::new(delta, m, n) else { return Ok(()) };
            let tr = triple_from_params(&p).unwrap();
            prop_assume!(tr.c <= 1_000_000);
            prop_assert_eq!(params_of(&tr).unwrap().params, p);
        }
    }
}
