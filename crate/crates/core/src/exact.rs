//! Exact number types shared by all bound computations.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Nonnegative count of words; arbitrary precision.
pub type Count = BigUint;

/// Exact signed rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn pow2(n: u32) -> Count {
    Count::from(1u8) << n as usize
}

pub fn rational(num: BigInt, den: &Count) -> Rational {
    Rational::new(num, BigInt::from_biguint(Sign::Plus, den.clone()))
}

pub fn rational_from_counts(num: &Count, den: &Count) -> Rational {
    rational(BigInt::from(num.clone()), den)
}

pub fn to_signed(c: &Count) -> BigInt {
    BigInt::from(c.clone())
}

/// `ceil(max(x, 0))`: the smallest code size certified by "a code of size at least x exists".
pub fn ceil_nonneg(x: &Rational) -> Count {
    if !x.is_positive() {
        return Count::zero();
    }
    let (q, r) = x.numer().div_rem(x.denom());
    let q = if r.is_zero() { q } else { q + 1 };
    q.to_biguint().expect("positive quotient")
}

/// `floor(max(x, 0))`: the largest size allowed by "every code has size at most x".
pub fn floor_nonneg(x: &Rational) -> Count {
    if !x.is_positive() {
        return Count::zero();
    }
    x.numer()
        .div_floor(x.denom())
        .to_biguint()
        .expect("positive quotient")
}

/// `max(x, 0)`.
pub fn clamp_nonneg(x: Rational) -> Rational {
    if x.is_negative() {
        Rational::zero()
    } else {
        x
    }
}

/// Base-2 logarithm of a positive integer, accurate to double precision for any size.
pub fn log2_count(c: &Count) -> f64 {
    if c.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = c.bits();
    if bits <= 64 {
        return c.to_u64().expect("fits").to_f64().expect("finite").log2();
    }
    let shift = bits - 64;
    let top = (c >> shift as usize).to_u64().expect("64 bits");
    (top as f64).log2() + shift as f64
}

/// Base-2 logarithm of a rational; `-inf` for nonpositive values.
pub fn log2_rational(x: &Rational) -> f64 {
    if !x.is_positive() {
        return f64::NEG_INFINITY;
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    log2_count(num) - log2_count(den)
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    sign * log2_rational(&x.abs()).exp2()
}
