//! Integer scalar abstraction.
//!
//! All counting and linear algebra in this crate is exact. The machinery is
//! generic over the scalar so small fixtures can run on machine integers
//! while the default aliases at the crate root use arbitrary precision.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};

/// Exact integer scalar: `i64`, `i128`, or `num_bigint::BigInt`.
pub trait IntScalar:
    num_integer::Integer + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
}

impl<T> IntScalar for T where
    T: num_integer::Integer
        + Signed
        + FromPrimitive
        + Clone
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Binomial coefficient C(n, k), exactly; zero outside the Pascal triangle.
pub fn binomial<T: IntScalar>(n: i64, k: i64) -> T {
    if k < 0 || n < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 1..=k {
        // exact at every step: acc holds C(n, i-1) * (n-k+i .. ) pattern
        acc = acc * T::from_i64(n - k + i).unwrap() / T::from_i64(i).unwrap();
    }
    acc
}
