//! Pairs of Pythagorean triangles where the hypotenuse of the second is a
//! leg of the first.
//!
//! With triangle 1 built from `(δ, m, n)` and triangle 2 from `(d, M, N)`,
//! the hypotenuse `d(M² + N²)` must equal either the even leg `2δmn` or
//! the odd-generator leg `δ(m² − n²)`. Four explicit families satisfy
//! these conditions; all parameters are checked against the full
//! generator conditions on both triangles.

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd_nonzero};
use crate::error::{Result, Violation};
use crate::triples::{check_generator, triple_from_params, Triple, TripleParams};

/// Which leg of triangle 1 is shared with the hypotenuse of triangle 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SharedLeg {
    /// `2δmn = d(M² + N²)`
    EvenLeg,
    /// `δ(m² − n²) = d(M² + N²)`
    OddLeg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct TrianglePair {
    t1: Triple,
    t2: Triple,
    p1: TripleParams,
    p2: TripleParams,
    shared: u64,
    mode: SharedLeg,
}

#[derive(Deserialize)]
struct RawPair {
    t1: Triple,
    t2: Triple,
    p1: TripleParams,
    p2: TripleParams,
    shared: u64,
    mode: SharedLeg,
}

impl TryFrom<RawPair> for TrianglePair {
    type Error = crate::Error;

    fn try_from(r: RawPair) -> Result<Self> {
        let pair = TrianglePair {
            t1: r.t1,
            t2: r.t2,
            p1: r.p1,
            p2: r.p2,
            shared: r.shared,
            mode: r.mode,
        };
        pair.check()?;
        Ok(pair)
    }
}

impl TrianglePair {
    fn build(p1: TripleParams, p2: TripleParams, mode: SharedLeg) -> Result<Self> {
        let pair = TrianglePair {
            t1: triple_from_params(&p1)?,
            t2: triple_from_params(&p2)?,
            p1,
            p2,
            shared: p2.hypotenuse()?,
            mode,
        };
        pair.check()?;
        Ok(pair)
    }

    /// Re-derives both triangles from their parameters and checks that the
    /// shared length is the hypotenuse of triangle 2 and the designated leg
    /// of triangle 1.
    pub fn check(&self) -> Result<()> {
        let leg = match self.mode {
            SharedLeg::EvenLeg => self.p1.product_leg()?,
            SharedLeg::OddLeg => self.p1.difference_leg()?,
        };
        let consistent = triple_from_params(&self.p1)? == self.t1
            && triple_from_params(&self.p2)? == self.t2
            && self.t2.c() == self.shared
            && leg == self.shared
            && self.t1.legs().contains(&self.shared);
        if !consistent {
            return Err(Violation::EquationFails {
                equation: "hypotenuse of triangle 2 = shared leg of triangle 1",
                values: vec![self.shared, self.t2.c(), leg],
            }
            .into());
        }
        Ok(())
    }

    pub fn t1(&self) -> &Triple {
        &self.t1
    }

    pub fn t2(&self) -> &Triple {
        &self.t2
    }

    pub fn p1(&self) -> &TripleParams {
        &self.p1
    }

    pub fn p2(&self) -> &TripleParams {
        &self.p2
    }

    pub fn shared(&self) -> u64 {
        self.shared
    }

    pub fn mode(&self) -> SharedLeg {
        self.mode
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    F1 {
        big_m: u64,
        big_n: u64,
    },
    F2 {
        k: u64,
        m: u64,
        n: u64,
        big_m: u64,
        big_n: u64,
    },
    F3 {
        k: u64,
        m: u64,
        n: u64,
        big_m: u64,
        big_n: u64,
    },
    F4 {
        d: u64,
        big_m: u64,
        big_n: u64,
    },
}

impl FamilyParams {
    pub fn generate(&self) -> Result<TrianglePair> {
        match *self {
            FamilyParams::F1 { big_m, big_n } => family1(big_m, big_n),
            FamilyParams::F2 {
                k,
                m,
                n,
                big_m,
                big_n,
            } => family2(k, m, n, big_m, big_n),
            FamilyParams::F3 {
                k,
                m,
                n,
                big_m,
                big_n,
            } => family3(k, m, n, big_m, big_n),
            FamilyParams::F4 { d, big_m, big_n } => family4(d, big_m, big_n),
        }
    }
}

fn hypotenuse_generator(big_m: u64, big_n: u64) -> Result<u64> {
    check_generator("M", big_m, "N", big_n)?;
    arith::add(arith::sq(big_m)?, arith::sq(big_n)?)
}

fn positive(name: &'static str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Violation::NonPositive(name).into());
    }
    Ok(())
}

/// `d = 4`, `n = 2`, `δ = 1`, `m = M² + N²`.
pub fn family1(big_m: u64, big_n: u64) -> Result<TrianglePair> {
    let m = hypotenuse_generator(big_m, big_n)?;
    // M, N of opposite parity make m odd, so (m, 2) are valid generators.
    assert!(m % 2 == 1 && m > 2);
    let p1 = TripleParams::new(1, m, 2)?;
    let p2 = TripleParams::new(4, big_m, big_n)?;
    TrianglePair::build(p1, p2, SharedLeg::EvenLeg)
}

/// `δ = K(M² + N²)`, `d = 2Kmn`.
pub fn family2(k: u64, m: u64, n: u64, big_m: u64, big_n: u64) -> Result<TrianglePair> {
    positive("K", k)?;
    check_generator("m", m, "n", n)?;
    let s = hypotenuse_generator(big_m, big_n)?;
    let p1 = TripleParams::new(arith::mul(k, s)?, m, n)?;
    let d = arith::mul(k, arith::mul(2, arith::mul(m, n)?)?)?;
    let p2 = TripleParams::new(d, big_m, big_n)?;
    TrianglePair::build(p1, p2, SharedLeg::EvenLeg)
}

/// `δ = K(M² + N²)`, `d = K(m² − n²)`.
pub fn family3(k: u64, m: u64, n: u64, big_m: u64, big_n: u64) -> Result<TrianglePair> {
    positive("K", k)?;
    check_generator("m", m, "n", n)?;
    let s = hypotenuse_generator(big_m, big_n)?;
    let p1 = TripleParams::new(arith::mul(k, s)?, m, n)?;
    let d = arith::mul(k, arith::sub(arith::sq(m)?, arith::sq(n)?)?)?;
    let p2 = TripleParams::new(d, big_m, big_n)?;
    TrianglePair::build(p1, p2, SharedLeg::OddLeg)
}

/// `δ = 1`, `m = (d + M² + N²)/2`, `n = (d − (M² + N²))/2` for odd `d`
/// coprime to and larger than `M² + N²`.
pub fn family4(d: u64, big_m: u64, big_n: u64) -> Result<TrianglePair> {
    let s = hypotenuse_generator(big_m, big_n)?;
    if d.is_multiple_of(2) {
        return Err(Violation::NotOdd("d").into());
    }
    if d <= s {
        return Err(Violation::NotGreater {
            larger: "d",
            smaller: "M² + N²",
        }
        .into());
    }
    if gcd_nonzero(d, s) != 1 {
        return Err(Violation::NotCoprime("d, M² + N²").into());
    }
    let m = arith::add(d, s)? / 2;
    let n = (d - s) / 2;
    // m + n = d is odd and gcd(m, n) divides both d and M² + N².
    assert!(m > n && n >= 1);
    assert_eq!((m + n) % 2, 1);
    assert_eq!(gcd_nonzero(m, n), 1);
    let p1 = TripleParams::new(1, m, n)?;
    let p2 = TripleParams::new(d, big_m, big_n)?;
    TrianglePair::build(p1, p2, SharedLeg::OddLeg)
}

/// True if the longest leg of triangle 1 is the hypotenuse of triangle 2
/// and the shortest leg of triangle 1 is also a leg of triangle 2.
pub fn is_forbidden_configuration(pair: &TrianglePair) -> bool {
    pair.t1.b() == pair.t2.c() && pair.t2.legs().contains(&pair.t1.a())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn t(a: u64, b: u64, c: u64) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    #[test]
    fn family1_examples() {
        let p = family1(2, 1).unwrap();
        assert_eq!(
            (*p.t1(), *p.t2(), p.shared()),
            (t(20, 21, 29), t(12, 16, 20), 20)
        );
        assert_eq!(p.mode(), SharedLeg::EvenLeg);
        let p = family1(3, 2).unwrap();
        assert_eq!(
            (*p.t1(), *p.t2(), p.shared()),
            (t(52, 165, 173), t(20, 48, 52), 52)
        );
        assert_eq!(
            family1(2, 2),
            Err(Violation::NotGreater {
                larger: "M",
                smaller: "N"
            }
            .into())
        );
        assert_eq!(family1(3, 1), Err(Violation::SameParity("M, N").into()));
    }

    #[test]
    fn family2_examples() {
        let p = family2(1, 2, 1, 2, 1).unwrap();
        assert_eq!(
            (*p.t1(), *p.t2(), p.shared()),
            (t(15, 20, 25), t(12, 16, 20), 20)
        );
        let p = family2(2, 2, 1, 2, 1).unwrap();
        assert_eq!(
            (*p.t1(), *p.t2(), p.shared()),
            (t(30, 40, 50), t(24, 32, 40), 40)
        );
        assert!(matches!(family2(1, 2, 2, 2, 1), Err(Error::Domain(_))));
        assert!(matches!(family2(0, 2, 1, 2, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn family3_examples() {
        let p = family3(1, 2, 1, 2, 1).unwrap();
        assert_eq!(
            (*p.t1(), *p.t2(), p.shared()),
            (t(15, 20, 25), t(9, 12, 15), 15)
        );
        assert_eq!(p.mode(), SharedLeg::OddLeg);
        assert_eq!(family3(3, 2, 1, 2, 1).unwrap().shared(), 45);
        // m = 3, n = 1 are both odd.
        assert_eq!(
            family3(1, 3, 1, 2, 1),
            Err(Violation::SameParity("m, n").into())
        );
    }

    #[test]
    fn family4_examples() {
        let p = family4(7, 2, 1).unwrap();
        assert_eq!(
            (*p.t1(), *p.t2(), p.shared()),
            (t(12, 35, 37), t(21, 28, 35), 35)
        );
        assert_eq!((p.p1().m(), p.p1().n()), (6, 1));
        let p = family4(9, 2, 1).unwrap();
        assert_eq!(
            (*p.t1(), *p.t2(), p.shared()),
            (t(28, 45, 53), t(27, 36, 45), 45)
        );
        assert_eq!(
            family4(5, 2, 1),
            Err(Violation::NotGreater {
                larger: "d",
                smaller: "M² + N²"
            }
            .into())
        );
        assert_eq!(family4(8, 2, 1), Err(Violation::NotOdd("d").into()));
        assert_eq!(
            family4(15, 2, 1),
            Err(Violation::NotCoprime("d, M² + N²").into())
        );
    }

    #[test]
    fn family4_derived_generators_always_valid() {
        let mut count = 0;
        for d in 1..=99u64 {
            for big_m in 2..=6u64 {
                for big_n in 1..big_m {
                    let Ok(p) = family4(d, big_m, big_n) else {
                        continue;
                    };
                    let (m, n) = (p.p1().m(), p.p1().n());
                    assert!(m > n && n >= 1);
                    assert_eq!(gcd_nonzero(m, n), 1);
                    assert_eq!((m + n) % 2, 1);
                    count += 1;
                }
            }
        }
        assert!(count > 100);
    }

    #[test]
    fn generated_pairs_avoid_forbidden_configuration() {
        for big_m in 2..12u64 {
            for big_n in 1..big_m {
                for m in 2..12u64 {
                    for n in 1..m {
                        for k in 1..4 {
                            for pair in [
                                family2(k, m, n, big_m, big_n),
                                family3(k, m, n, big_m, big_n),
                            ]
                            .into_iter()
                            .flatten()
                            {
                                assert!(!is_forbidden_configuration(&pair));
                            }
                        }
                    }
                }
                if let Ok(pair) = family1(big_m, big_n) {
                    assert!(!is_forbidden_configuration(&pair));
                }
                for d in 1..200 {
                    if let Ok(pair) = family4(d, big_m, big_n) {
                        assert!(!is_forbidden_configuration(&pair));
                    }
                }
            }
        }
    }

    #[test]
    fn tampered_pair_fails_check() {
        let mut p = family1(2, 1).unwrap();
        p.shared = 21;
        assert!(p.check().is_err());
        let mut p = family3(1, 2, 1, 2, 1).unwrap();
        p.mode = SharedLeg::EvenLeg;
        assert!(p.check().is_err());
    }
}
