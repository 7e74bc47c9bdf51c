//! Exact scalar fields.
//!
//! Everything below the irreducibility engine is written against [`Field`],
//! which is implemented for every `num_rational::Ratio<I>` with a signed
//! integer `I`. Floating point types are deliberately not fields here: pivot
//! selection and invariant-subspace verdicts compare against exact zero.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, Zero};

use crate::error::{Error, Result};

/// An exact field of characteristic zero.
pub trait Field:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// The image of an integer under the canonical embedding `Z -> F`.
    fn from_int(n: i64) -> Self;

    /// Parses `"p/q"` or `"n"`.
    fn parse(s: &str) -> Result<Self>;

    /// Sign of the value: -1, 0 or 1.
    fn signum_i8(&self) -> i8;
}

impl<I> Field for Ratio<I>
where
    I: Integer + Clone + Signed + FromPrimitive + Debug + Display + FromStr + Send + Sync + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(I::from_i64(n).expect("integer type holds every i64"))
    }

    fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("malformed rational `{s}`"));
        let valid = !t.is_empty()
            && t
                .chars()
                .all(|c| c.is_ascii_digit() || c == '-' || c == '+' || c == '/');
        if !valid {
            return Err(bad());
        }
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        let num: I = num.parse().map_err(|_| bad())?;
        let den: I = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Ratio::new(num, den))
    }

    fn signum_i8(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }
}
