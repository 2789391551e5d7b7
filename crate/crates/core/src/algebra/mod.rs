//! The coefficient tower: rationals, polynomials in α and reduced rational functions in α.

mod poly;
mod ratfunc;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use poly::{AlphaPolynomial, IntPoly};
pub use ratfunc::AlphaRational;

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `"p/q"` with the denominator omitted when it is 1.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A commutative ring with unit, as needed by the cumulant machinery.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Q) -> Self;

    fn scale_int(&self, c: i64) -> Self {
        self.scale(&q(c))
    }

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

/// A ring in which non-zero elements can be inverted.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
}

/// A ring that is also a `ℚ(α)`-algebra: elements can be multiplied by rational functions.
pub trait AlphaAlgebra: Ring {
    fn scale_alpha(&self, c: &AlphaRational) -> Self;
}

impl AlphaAlgebra for AlphaRational {
    fn scale_alpha(&self, c: &AlphaRational) -> Self {
        self.mul(c)
    }
}

/// Objects whose coefficients live in `ℚ(α)`, with the α-adic valuation at zero.
///
/// For vector-like objects this is the minimum over coefficients; `None` means zero.
pub trait AlphaValued {
    fn alpha_valuation(&self) -> Option<i64>;

    /// `O(α^k)`: zero, or valuation at least `k`.
    fn is_big_o(&self, k: i64) -> bool {
        self.alpha_valuation().is_none_or(|v| v >= k)
    }

    /// A coefficient attaining the valuation, for failure reports.
    fn valuation_witness(&self) -> Option<crate::report::Witness> {
        None
    }
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Q) -> Self {
        self * c
    }
}

impl Field for Q {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}
