//! Scalar abstraction for exact counts.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, ToPrimitive, Zero};

use crate::{Error, Result};

/// An exact, nonnegative count type with checked arithmetic.
///
/// Implemented for every type that provides the underlying `num-traits`
/// operations: `u32`, `u64`, `u128`, `usize` and `BigUint` among them.
pub trait CountScalar:
    Clone
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
}

impl<T> CountScalar for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

pub(crate) fn from_u64<C: CountScalar>(v: u64, ctx: &'static str) -> Result<C> {
    C::from_u64(v).ok_or(Error::Overflow(ctx))
}

pub(crate) fn add<C: CountScalar>(a: &C, b: &C, ctx: &'static str) -> Result<C> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn sub<C: CountScalar>(a: &C, b: &C, ctx: &'static str) -> Result<C> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn mul<C: CountScalar>(a: &C, b: &C, ctx: &'static str) -> Result<C> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

/// `base^exp` with overflow detection.
pub(crate) fn pow<C: CountScalar>(base: u64, exp: u64, ctx: &'static str) -> Result<C> {
    let base: C = from_u64(base, ctx)?;
    let exp = usize::try_from(exp).map_err(|_| Error::Overflow(ctx))?;
    num_traits::checked_pow(base, exp).ok_or(Error::Overflow(ctx))
}

/// Lossy conversion used only for reports.
pub(crate) fn to_f64<C: CountScalar>(v: &C) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn pow_overflow_is_an_error() {
        assert_eq!(pow::<u8>(2, 7, "t"), Ok(128));
        assert_eq!(pow::<u8>(2, 8, "t"), Err(Error::Overflow("t")));
        assert_eq!(pow::<BigUint>(2, 100, "t").unwrap(), BigUint::from(1u8) << 100usize);
    }

    #[test]
    fn sub_below_zero_is_an_error() {
        assert!(sub::<u64>(&1, &2, "t").is_err());
    }
}
