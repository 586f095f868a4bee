//! Exact rational helpers. Every density predicate in this crate is decided
//! over arbitrary-precision rationals; floats appear only in root-finding
//! and curve output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Exact fraction `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Edge density of a bipartite pair: `edges / (nx * ny)`, zero when a side
/// is empty.
pub fn density(edges: usize, nx: usize, ny: usize) -> Rat {
    if nx == 0 || ny == 0 {
        return Rat::zero();
    }
    Rat::new(BigInt::from(edges), BigInt::from(nx) * BigInt::from(ny))
}

pub fn to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn zero() -> Rat {
    Rat::zero()
}

/// True when `r` lies in the closed unit interval.
pub fn in_unit_interval(r: &Rat) -> bool {
    !r.is_negative() && *r <= Rat::one()
}
