//! Exact arithmetic kernels: big integers, reduced rationals, sparse Laurent
//! polynomials and truncated power series.

mod laurent;
mod series;

pub use laurent::LaurentPoly;
pub use series::TruncSeries;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Neg, Sub};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Rational number kept in lowest terms with a positive denominator.
pub type ExactRat = BigRational;

/// Coefficient ring usable inside a [`TruncSeries`].
pub trait Coefficient:
    Clone + PartialEq + Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// Canonical text form, used for coefficient-wise reporting.
    fn canonical(&self) -> String;
}

impl Coefficient for ExactRat {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn canonical(&self) -> String {
        rat_to_string(self)
    }
}

/// `num` or `num/den`.
pub fn rat_to_string(r: &ExactRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat(n: i64) -> ExactRat {
    ExactRat::from_integer(BigInt::from(n))
}

pub fn int_to_rat(n: &ExactInt) -> ExactRat {
    ExactRat::from_integer(n.clone())
}

/// `(-1)^e` as a small integer.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// Ordinary binomial coefficient, 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient with an arbitrary integer upper index:
/// `r (r-1) ... (r-k+1) / k!` for `k >= 0`, and 0 for `k < 0`.
pub fn binomial_general(r: i64, k: i64) -> ExactInt {
    if k < 0 {
        return ExactInt::zero();
    }
    if r >= 0 {
        return binomial(r as u64, k as u64);
    }
    // C(r, k) = (-1)^k C(k - r - 1, k) for r < 0
    let v = binomial((k - r - 1) as u64, k as u64);
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Rising factorial `x (x+1) ... (x+n-1)` at an integer point.
pub fn rising_at(x: i64, n: u64) -> ExactInt {
    (0..n as i64).fold(ExactInt::one(), |acc, i| acc * (x + i))
}

/// Falling factorial `x (x-1) ... (x-n+1)` at an integer point.
pub fn falling_at(x: i64, n: u64) -> ExactInt {
    (0..n as i64).fold(ExactInt::one(), |acc, i| acc * (x - i))
}

pub fn int_pow(base: i64, e: u32) -> ExactInt {
    num_traits::pow(ExactInt::from(base), e as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let r = ExactRat::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(rat_to_string(&r), "-3/2");
        assert_eq!(rat_to_string(&rat(0)), "0");
        assert_eq!(*ExactRat::new(0.into(), 7.into()).denom(), BigInt::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(2, 5), 0.into());
        assert_eq!(binomial_general(-1, 3), (-1).into());
        assert_eq!(binomial_general(-3, 2), 6.into());
        assert_eq!(binomial_general(4, -1), 0.into());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), 1.into());
        assert_eq!(factorial(20).to_string(), "2432902008176640000");
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
        assert_eq!(rising_at(2, 3), 24.into());
        assert_eq!(falling_at(4, 2), 12.into());
        assert_eq!(falling_at(-2, 2), 6.into());
    }
}
