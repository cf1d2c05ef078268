//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Scalar`]. The trait only
//! admits exact fields: pivot selection and vanishing tests compare against
//! zero with `==`, which is meaningless for floating point.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact field of characteristic zero.
pub trait Scalar:
    Clone + Debug + Display + Eq + Hash + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Parses `"p"` or `"p/q"`.
    fn parse(s: &str) -> Option<Self>;

    /// Numerator and denominator as big integers, denominator positive.
    fn to_big(&self) -> BigRational;

    /// Converts back from a big rational; `None` if it does not fit.
    fn from_big(v: &BigRational) -> Option<Self>;
}

impl<T> Scalar for Ratio<T>
where
    T: Integer
        + Clone
        + Signed
        + Debug
        + Display
        + Hash
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Into<BigInt>
        + TryFrom<BigInt>
        + Send
        + Sync
        + 'static,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p = p.trim().parse::<T>().ok()?;
                let q = q.trim().parse::<T>().ok()?;
                if q.is_zero() {
                    None
                } else {
                    Some(Ratio::new(p, q))
                }
            }
            None => s.parse::<T>().ok().map(Ratio::from_integer),
        }
    }

    fn to_big(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }

    fn from_big(v: &BigRational) -> Option<Self> {
        let p = T::try_from(v.numer().clone()).ok()?;
        let q = T::try_from(v.denom().clone()).ok()?;
        Some(Ratio::new(p, q))
    }
}
