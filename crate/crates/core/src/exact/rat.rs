//! The exact scalar type.
//!
//! `Rat` is an arbitrary-precision rational. `num_rational::Ratio` maintains
//! exactly the invariants we need: always reduced, denominator positive,
//! arithmetic exact. Denominators in the built-in catalog never exceed 12,
//! but nothing here assumes a bound.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on zero denominator.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `r * scale` when that product is an integer fitting in `i128`.
///
/// Used by the internal scaled-integer fast paths; `None` means the caller
/// has to stay on the general rational path.
pub fn rat_to_i128(r: &Rat, scale: &BigInt) -> Option<i128> {
    let scaled = r * Rat::from_integer(scale.clone());
    if !scaled.denom().is_one() {
        return None;
    }
    scaled.numer().to_i128()
}

/// Least common multiple of two positive big integers.
pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(a.is_positive() && b.is_positive());
    num_integer::Integer::lcm(a, b)
}

/// Smallest positive integer `d` with `d * r` integral.
pub fn denom_of(r: &Rat) -> BigInt {
    r.denom().clone()
}

/// True when `r` has denominator 1.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact floor as a big integer.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Fractional part in `[0, 1)`.
pub fn fract(r: &Rat) -> Rat {
    r - r.floor()
}

/// Sign of a rational as `-1`, `0`, or `1`.
pub fn signum(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
