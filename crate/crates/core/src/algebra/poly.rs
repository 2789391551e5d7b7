use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{fmt_q, parse_q, q, AlphaValued, Q};
use crate::error::{Error, Result};

/// A polynomial in α with rational coefficients, lowest degree first.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is non-zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPolynomial {
    coeffs: Vec<Q>,
}

impl AlphaPolynomial {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        AlphaPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        AlphaPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(q(1))
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn constant_int(c: i64) -> Self {
        Self::constant(q(c))
    }

    pub fn alpha() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `c0 + c1·α`.
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::from_ints(&[c0, c1])
    }

    /// `α^k`.
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Coefficient of `α^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    /// Order at α = 0: the smallest exponent with a non-zero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        AlphaPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlphaPolynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&q(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `α^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Q::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        AlphaPolynomial { coeffs }
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// `p(α + c)`, by repeated synthetic division.
    pub fn taylor_shift(&self, c: &Q) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        Self::new(a)
    }

    /// Rewrites a polynomial in α as a polynomial in β = α − 1.
    pub fn to_beta(&self) -> Self {
        self.taylor_shift(&q(1))
    }

    /// Inverse of [`AlphaPolynomial::to_beta`]: substitutes β = α − 1.
    pub fn from_beta(&self) -> Self {
        self.taylor_shift(&q(-1))
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division known to be exact.
    pub(crate) fn exact_div(&self, divisor: &Self) -> Self {
        if divisor.is_one() {
            return self.clone();
        }
        let (quot, rem) = self.div_rem(divisor).expect("non-zero divisor");
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        quot
    }

    /// Splits `self = c · P` with `P` an integer polynomial of content 1 and positive
    /// leading coefficient. Zero maps to `(0, 0)`.
    pub fn rational_content(&self) -> (Q, IntPoly) {
        if self.is_zero() {
            return (Q::zero(), IntPoly::zero());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let ip = IntPoly::new(ints);
        let (content, prim) = ip.content_primitive();
        (BigRational::new(content, lcm), prim)
    }

    /// Monic-free gcd over ℚ[α], returned with integer coefficients, content 1 and
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (_, a) = self.rational_content();
        let (_, b) = other.rational_content();
        a.gcd(&b).to_alpha()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Renders in the variable `var`, highest degree first: `2*a^2 + a - 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&fmt_q(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", fmt_q(&abs), mono));
            }
        }
        out
    }

    /// Number of non-zero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl AlphaValued for AlphaPolynomial {
    fn alpha_valuation(&self) -> Option<i64> {
        self.order().map(|k| k as i64)
    }
}

impl fmt::Display for AlphaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a"))
    }
}

impl fmt::Debug for AlphaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.render("a"))
    }
}

impl Serialize for AlphaPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(fmt_q).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| parse_q(s))
            .collect::<Result<Vec<Q>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(AlphaPolynomial::new(coeffs))
    }
}

impl super::Ring for AlphaPolynomial {
    fn zero() -> Self {
        AlphaPolynomial::zero()
    }
    fn one() -> Self {
        AlphaPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        AlphaPolynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        AlphaPolynomial::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        AlphaPolynomial::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        AlphaPolynomial::mul(self, other)
    }
    fn neg(&self) -> Self {
        AlphaPolynomial::neg(self)
    }
    fn scale(&self, c: &Q) -> Self {
        AlphaPolynomial::scale(self, c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $T:ty) => {
        impl ::std::ops::$tr<&$T> for &$T {
            type Output = $T;
            fn $m(self, rhs: &$T) -> $T {
                <$T>::$m(self, rhs)
            }
        }
        impl ::std::ops::$tr<$T> for $T {
            type Output = $T;
            fn $m(self, rhs: $T) -> $T {
                <$T>::$m(&self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Add, add, AlphaPolynomial);
forward_binop!(Sub, sub, AlphaPolynomial);
forward_binop!(Mul, mul, AlphaPolynomial);

impl std::ops::Neg for AlphaPolynomial {
    type Output = AlphaPolynomial;
    fn neg(self) -> AlphaPolynomial {
        AlphaPolynomial::neg(&self)
    }
}

/// Integer polynomial, lowest degree first; used for gcd computations.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn to_alpha(&self) -> AlphaPolynomial {
        AlphaPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// `(content, primitive part)` with the primitive part's leading coefficient positive.
    pub fn content_primitive(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let mut g = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.coeffs.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        };
        (g, prim)
    }

    fn primitive(&self) -> IntPoly {
        self.content_primitive().1
    }

    /// Pseudo-remainder `lc(b)^{deg a − deg b + 1} · a mod b`.
    fn prem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("non-zero divisor");
        let lb = &b.coeffs[db];
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= lb;
            }
            let shift = dr - db;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly::new(r)
    }

    /// Primitive gcd with positive leading coefficient, via a primitive remainder sequence.
    /// Common powers of α are split off first since they dominate in practice.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (oa, ob) = (self.order(), other.order());
        let k = oa.min(ob);
        let mut a = IntPoly::new(self.coeffs[oa..].to_vec()).primitive();
        let mut b = IntPoly::new(other.coeffs[ob..].to_vec()).primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                a = IntPoly::new(vec![BigInt::one()]);
                break;
            }
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(a.primitive().coeffs);
        IntPoly::new(coeffs)
    }
}
