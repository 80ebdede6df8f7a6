//! Exact integer utilities.
//!
//! Every value lives in a single-width lane (64 bits by default) and every
//! fourth power or cross term lives in a double-width lane. The lane width
//! can be narrowed at runtime with [`set_lane_bits`] so that overflow paths
//! are reachable in tests; all checked helpers below respect it.

use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::{Error, Result, Violation};

static LANE_BITS: AtomicU32 = AtomicU32::new(64);

/// Narrows (or restores) the single-width lane. The double-width lane is
/// always twice as wide.
pub fn set_lane_bits(bits: u32) -> Result<()> {
    if !(8..=64).contains(&bits) {
        return Err(Violation::InvalidWidth(bits).into());
    }
    LANE_BITS.store(bits, Ordering::Relaxed);
    Ok(())
}

pub fn lane_bits() -> u32 {
    LANE_BITS.load(Ordering::Relaxed)
}

/// Largest value representable in the single-width lane.
pub fn lane_max() -> u64 {
    match lane_bits() {
        64 => u64::MAX,
        bits => (1u64 << bits) - 1,
    }
}

/// Largest value representable in the double-width lane.
pub fn wide_max() -> u128 {
    match lane_bits() {
        64 => u128::MAX,
        bits => (1u128 << (2 * bits)) - 1,
    }
}

fn narrow(value: Option<u128>, op: &'static str) -> Result<u64> {
    match value {
        Some(v) if v <= lane_max() as u128 => Ok(v as u64),
        _ => Err(Error::Overflow(op)),
    }
}

fn widen(value: Option<u128>, op: &'static str) -> Result<u128> {
    match value {
        Some(v) if v <= wide_max() => Ok(v),
        _ => Err(Error::Overflow(op)),
    }
}

/// Rejects a value that is already wider than the lane (e.g. parsed input).
pub fn fits(value: u64) -> Result<u64> {
    narrow(Some(value as u128), "input")
}

pub fn add(a: u64, b: u64) -> Result<u64> {
    narrow((a as u128).checked_add(b as u128), "add")
}

pub fn sub(a: u64, b: u64) -> Result<u64> {
    a.checked_sub(b).ok_or(Error::Overflow("sub"))
}

pub fn mul(a: u64, b: u64) -> Result<u64> {
    narrow((a as u128).checked_mul(b as u128), "mul")
}

pub fn sq(a: u64) -> Result<u64> {
    mul(a, a)
}

pub fn wide_add(a: u128, b: u128) -> Result<u128> {
    widen(a.checked_add(b), "wide add")
}

pub fn wide_mul(a: u128, b: u128) -> Result<u128> {
    widen(a.checked_mul(b), "wide mul")
}

pub fn wide_sq(a: u64) -> Result<u128> {
    wide_mul(a as u128, a as u128)
}

/// `a⁴` in the double-width lane.
pub fn pow4(a: u64) -> Result<u128> {
    let s = wide_sq(a)?;
    widen(s.checked_mul(s), "fourth power")
}

/// Greatest common divisor. `gcd(0, 0)` is rejected.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Violation::GcdOfZeros.into());
    }
    Ok(gcd_nonzero(a, b))
}

// Euclid; callers guarantee at least one argument is nonzero.
pub(crate) fn gcd_nonzero(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `⌊√n⌋` for the double-width lane.
///
/// Integer Newton iteration from an overestimate, followed by a correction
/// step so the result is exact even where the iteration stalls.
pub fn isqrt_wide(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x: u128 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    while x.checked_mul(x).is_none_or(|s| s > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|s| s <= n) {
        x += 1;
    }
    x
}

/// `⌊√n⌋`.
pub fn isqrt(n: u64) -> u64 {
    isqrt_wide(n as u128) as u64
}

pub fn is_perfect_square(n: u64) -> bool {
    exact_sqrt(n).is_some()
}

pub fn is_perfect_square_wide(n: u128) -> bool {
    exact_sqrt_wide(n).is_some()
}

/// `Some(r)` with `r² = n`, if `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    exact_sqrt_wide(n as u128).map(|r| r as u64)
}

pub fn exact_sqrt_wide(n: u128) -> Option<u128> {
    // Squares mod 16 are 0, 1, 4, 9.
    if (0x0213 & (1u16 << (n & 15))) == 0 {
        return None;
    }
    let r = isqrt_wide(n);
    (r * r == n).then_some(r)
}

/// Splits a coprime pair whose product is a square into its square roots:
/// returns `(a₁, b₁)` with `a₁² = a`, `b₁² = b`, `gcd(a₁, b₁) = 1`.
pub fn coprime_square_split(a: u64, b: u64) -> Result<(u64, u64)> {
    if a == 0 {
        return Err(Violation::NonPositive("a").into());
    }
    if b == 0 {
        return Err(Violation::NonPositive("b").into());
    }
    if gcd_nonzero(a, b) != 1 {
        return Err(Violation::NotCoprime("a, b").into());
    }
    let product = wide_mul(a as u128, b as u128)?;
    if !is_perfect_square_wide(product) {
        return Err(Violation::ProductNotSquare(product).into());
    }
    // A coprime pair with square product has square parts.
    let a1 = exact_sqrt(a).expect("coprime factor of a square is a square");
    let b1 = exact_sqrt(b).expect("coprime factor of a square is a square");
    Ok((a1, b1))
}
