//! Scalar abstractions.
//!
//! Every exact structure in the crate (cyclotomic integers, enumerator
//! polynomials, Krawtchouk coefficients) is generic over an integer
//! coefficient type. [`num_bigint::BigInt`] is the default used by the
//! aliases at the crate root; fixed-width types such as `i64` and `i128` work
//! wherever the values are known to stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer coefficient.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("coefficient type too narrow")
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("coefficient type too narrow")
    }
}

impl<T> Coeff for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial<T: Coeff>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_usize(n - i).unwrap();
        acc = acc / T::from_usize(i + 1).unwrap();
    }
    acc
}

pub(crate) fn pow<T: Coeff>(base: &T, exp: usize) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn binomials() {
        assert_eq!(binomial::<i64>(0, 0), 1);
        assert_eq!(binomial::<i64>(5, 2), 10);
        assert_eq!(binomial::<i64>(2, 3), 0);
        assert_eq!(
            binomial::<BigInt>(60, 30),
            "118264581564861424".parse().unwrap()
        );
    }
}
