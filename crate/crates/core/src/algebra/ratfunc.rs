use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::forward_binop;
use super::{AlphaPolynomial, AlphaValued, Q};
use crate::error::{Error, Result};

/// A reduced rational function in α.
///
/// Canonical form: `gcd(num, den) = 1`; `den` has integer coefficients, content 1 and a
/// positive leading coefficient; zero is `0/1`. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAlphaRational")]
pub struct AlphaRational {
    num: AlphaPolynomial,
    den: AlphaPolynomial,
}

#[derive(Deserialize)]
struct RawAlphaRational {
    num: AlphaPolynomial,
    den: AlphaPolynomial,
}

impl TryFrom<RawAlphaRational> for AlphaRational {
    type Error = Error;

    fn try_from(raw: RawAlphaRational) -> Result<Self> {
        let x = AlphaRational::new(raw.num.clone(), raw.den.clone())?;
        if x.num != raw.num || x.den != raw.den {
            return Err(Error::Parse(String::from(
                "rational function not in canonical form",
            )));
        }
        Ok(x)
    }
}

impl AlphaRational {
    pub fn new(num: AlphaPolynomial, den: AlphaPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        Ok(Self::with_den_normalized(
            num.exact_div(&g),
            den.exact_div(&g),
        ))
    }

    /// Makes `den` primitive integral with positive leading coefficient; `num` and `den`
    /// must already be coprime.
    fn with_den_normalized(num: AlphaPolynomial, den: AlphaPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (c, prim) = den.rational_content();
        let num = if c.is_one() {
            num
        } else {
            num.scale(&c.recip())
        };
        AlphaRational {
            num,
            den: prim.to_alpha(),
        }
    }

    pub fn zero() -> Self {
        AlphaRational {
            num: AlphaPolynomial::zero(),
            den: AlphaPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(AlphaPolynomial::one())
    }

    pub fn from_poly(p: AlphaPolynomial) -> Self {
        AlphaRational {
            num: p,
            den: AlphaPolynomial::one(),
        }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(AlphaPolynomial::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(AlphaPolynomial::constant_int(c))
    }

    pub fn alpha() -> Self {
        Self::from_poly(AlphaPolynomial::alpha())
    }

    /// `α^k` for any integer `k`.
    pub fn alpha_pow(k: i64) -> Self {
        let m = AlphaPolynomial::monomial(Q::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            AlphaRational {
                num: AlphaPolynomial::one(),
                den: m,
            }
        }
    }

    pub fn num(&self) -> &AlphaPolynomial {
        &self.num
    }

    pub fn den(&self) -> &AlphaPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&AlphaPolynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        // Henrici: only the common factor of the denominators can cancel.
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::with_den_normalized(num, self.den.mul(&other.den));
        }
        let b1 = self.den.exact_div(&g);
        let d1 = other.den.exact_div(&g);
        let t = self.num.mul(&d1).add(&other.num.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let h = t.gcd(&g);
        let num = t.exact_div(&h);
        let den = b1.mul(&other.den.exact_div(&h));
        Self::with_den_normalized(num, den)
    }

    pub fn neg(&self) -> Self {
        AlphaRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let num = self.num.exact_div(&g1).mul(&other.num.exact_div(&g2));
        let den = self.den.exact_div(&g2).mul(&other.den.exact_div(&g1));
        Self::with_den_normalized(num, den)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlphaRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &AlphaPolynomial) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::with_den_normalized(
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(Self::one(), |acc, _| acc.mul(&base)))
    }

    /// `ord_α(num) − ord_α(den)`; `None` for zero.
    pub fn valuation_at_zero(&self) -> Option<i64> {
        let n = self.num.order()? as i64;
        let d = self.den.order().unwrap_or(0) as i64;
        Some(n - d)
    }

    /// `x = O(α^k)`: zero, or `x·α^{−k}` has no pole at 0.
    pub fn is_big_o(&self, k: i64) -> bool {
        self.valuation_at_zero().is_none_or(|v| v >= k)
    }

    /// Value at a rational point; errors at a pole.
    pub fn eval(&self, x: &Q) -> Result<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// The same function written as a polynomial in β = α − 1, when it is a polynomial.
    pub fn to_beta_polynomial(&self) -> Result<AlphaPolynomial> {
        match self.as_polynomial() {
            Some(p) => Ok(p.to_beta()),
            None => Err(Error::NotPolynomial(self.den.to_string())),
        }
    }

    /// Coefficient of `α^j` in the power-series expansion at α = 0.
    ///
    /// Defined only when there is no pole at zero.
    pub fn coefficient_of_alpha(&self, j: i64) -> Result<Q> {
        let Some(v) = self.valuation_at_zero() else {
            return Ok(Q::zero());
        };
        if v < 0 {
            return Err(Error::PoleAtZero {
                valuation: v,
                requested: j,
            });
        }
        if j < 0 {
            return Ok(Q::zero());
        }
        if self.den.is_one() {
            return Ok(self.num.coeff(j as usize));
        }
        // den(0) ≠ 0 here; expand num/den as a power series up to order j.
        let d = self.den.coeffs();
        let d0 = &d[0];
        let mut series: Vec<Q> = Vec::with_capacity(j as usize + 1);
        for k in 0..=(j as usize) {
            let mut acc = self.num.coeff(k);
            for (i, s) in series.iter().enumerate() {
                let di = k - i;
                if di < d.len() {
                    acc -= &d[di] * s;
                }
            }
            series.push(acc / d0);
        }
        Ok(series.pop().unwrap_or_else(Q::zero))
    }

    /// Renders with `a` as the variable: `a + 1`, `(a - 1)/(2*a)`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.to_string();
        }
        let num = if self.num.term_count() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        let den = if self.den.term_count() > 1 || !self.den.leading().is_some_and(One::is_one) {
            format!("({})", self.den)
        } else {
            self.den.to_string()
        };
        format!("{num}/{den}")
    }
}

impl AlphaValued for AlphaRational {
    fn alpha_valuation(&self) -> Option<i64> {
        self.valuation_at_zero()
    }

    fn valuation_witness(&self) -> Option<crate::report::Witness> {
        self.valuation_at_zero()
            .map(|valuation| crate::report::Witness {
                term: String::from("1"),
                coefficient: self.render(),
                valuation,
            })
    }
}

impl fmt::Display for AlphaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for AlphaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.render())
    }
}

impl Default for AlphaRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<AlphaPolynomial> for AlphaRational {
    fn from(p: AlphaPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl super::Ring for AlphaRational {
    fn zero() -> Self {
        AlphaRational::zero()
    }
    fn one() -> Self {
        AlphaRational::one()
    }
    fn is_zero(&self) -> bool {
        AlphaRational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        AlphaRational::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        AlphaRational::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        AlphaRational::mul(self, other)
    }
    fn neg(&self) -> Self {
        AlphaRational::neg(self)
    }
    fn scale(&self, c: &Q) -> Self {
        AlphaRational::scale(self, c)
    }
}

impl super::Field for AlphaRational {
    fn inv(&self) -> Result<Self> {
        AlphaRational::inv(self)
    }
}

forward_binop!(Add, add, AlphaRational);
forward_binop!(Sub, sub, AlphaRational);
forward_binop!(Mul, mul, AlphaRational);

impl std::ops::Div<&AlphaRational> for &AlphaRational {
    type Output = AlphaRational;

    /// Panics on division by zero; use [`AlphaRational::checked_div`] to handle it.
    fn div(self, rhs: &AlphaRational) -> AlphaRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl std::ops::Neg for AlphaRational {
    type Output = AlphaRational;
    fn neg(self) -> AlphaRational {
        AlphaRational::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, q_frac};

    fn poly(c: &[i64]) -> AlphaPolynomial {
        AlphaPolynomial::from_ints(c)
    }

    fn rat(n: &[i64], d: &[i64]) -> AlphaRational {
        AlphaRational::new(poly(n), poly(d)).unwrap()
    }

    #[test]
    fn cancellation_examples() {
        assert_eq!(rat(&[0, 1], &[0, 1]), AlphaRational::one());
        assert_eq!(
            rat(&[-1, 0, 1], &[1, 1]),
            AlphaRational::from_poly(poly(&[-1, 1]))
        );
        assert_eq!(
            AlphaRational::constant(q_frac(1, 2)).add(&AlphaRational::constant(q_frac(1, 3))),
            AlphaRational::constant(q_frac(5, 6))
        );
        assert!(AlphaRational::new(poly(&[1]), AlphaPolynomial::zero()).is_err());
        assert!(AlphaRational::zero().inv().is_err());
    }

    #[test]
    fn canonical_denominator() {
        let x = rat(&[1], &[0, -2]);
        assert_eq!(x.den(), &poly(&[0, 1]));
        assert_eq!(x.num(), &AlphaPolynomial::constant(q_frac(-1, 2)));
    }

    #[test]
    fn big_o_examples() {
        let a_times_p = AlphaRational::from_poly(poly(&[0, 3, 1]));
        assert!(a_times_p.is_big_o(1));
        assert!(!a_times_p.is_big_o(2));
        let inv_a = rat(&[1], &[0, 1]);
        assert!(!inv_a.is_big_o(0));
        let x = rat(&[-1, 1], &[0, 2]);
        assert_eq!(x.valuation_at_zero(), Some(-1));
        assert!(x.is_big_o(-1));
        assert!(!x.is_big_o(0));
        assert!(AlphaRational::zero().is_big_o(100));
    }

    #[test]
    fn beta_polynomial_examples() {
        assert_eq!(
            AlphaRational::from_poly(poly(&[-1, 1]))
                .to_beta_polynomial()
                .unwrap(),
            poly(&[0, 1])
        );
        assert_eq!(
            AlphaRational::from_poly(poly(&[0, 0, 1]))
                .to_beta_polynomial()
                .unwrap(),
            poly(&[1, 2, 1])
        );
        assert!(matches!(
            rat(&[1], &[0, 1]).to_beta_polynomial(),
            Err(Error::NotPolynomial(_))
        ));
    }

    #[test]
    fn coefficient_extraction_examples() {
        let a = AlphaRational::alpha();
        assert_eq!(a.coefficient_of_alpha(0).unwrap(), q(0));
        assert_eq!(a.coefficient_of_alpha(1).unwrap(), q(1));
        let geometric = rat(&[1], &[1, 1]);
        assert_eq!(geometric.coefficient_of_alpha(1).unwrap(), q(-1));
        assert_eq!(geometric.coefficient_of_alpha(4).unwrap(), q(1));
        assert!(matches!(
            rat(&[1], &[0, 1]).coefficient_of_alpha(0),
            Err(Error::PoleAtZero { .. })
        ));
        // α²/(α(1−α)) = α + α² + ...
        let y = rat(&[0, 0, 1], &[0, 1, -1]);
        assert_eq!(y.coefficient_of_alpha(0).unwrap(), q(0));
        assert_eq!(y.coefficient_of_alpha(3).unwrap(), q(1));
    }

    #[test]
    fn render_forms() {
        assert_eq!(rat(&[-1, 1], &[0, 2]).render(), "(1/2*a - 1/2)/a");
        assert_eq!(rat(&[1], &[1, 1]).render(), "1/(a + 1)");
        assert_eq!(AlphaRational::from_poly(poly(&[1, 1])).render(), "a + 1");
    }

    #[test]
    fn serde_shape_and_canonical_check() {
        let x = rat(&[1, 1], &[0, 2]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"num":["1/2","1/2"],"den":["0","1"]}"#);
        assert_eq!(serde_json::from_str::<AlphaRational>(&s).unwrap(), x);
        assert!(
            serde_json::from_str::<AlphaRational>(r#"{"num":["1","1"],"den":["0","2"]}"#).is_err()
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = AlphaPolynomial> {
            proptest::collection::vec(-5i64..6, 0..5).prop_map(|c| AlphaPolynomial::from_ints(&c))
        }

        fn arb_rat() -> impl Strategy<Value = AlphaRational> {
            (arb_poly(), arb_poly())
                .prop_filter("non-zero denominator", |(_, d)| !d.is_zero())
                .prop_map(|(n, d)| AlphaRational::new(n, d).unwrap())
        }

        proptest! {
            #[test]
            fn normalization_is_idempotent(x in arb_rat()) {
                let again = AlphaRational::new(x.num().clone(), x.den().clone()).unwrap();
                prop_assert_eq!(again, x);
            }

            #[test]
            fn valuation_is_additive(x in arb_rat(), y in arb_rat()) {
                prop_assume!(!x.is_zero() && !y.is_zero());
                let v = x.mul(&y).valuation_at_zero().unwrap();
                prop_assert_eq!(v, x.valuation_at_zero().unwrap() + y.valuation_at_zero().unwrap());
            }

            #[test]
            fn field_axioms(x in arb_rat(), y in arb_rat(), z in arb_rat()) {
                prop_assert_eq!(x.add(&y), y.add(&x));
                prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
                prop_assert_eq!(x.add(&y).sub(&y), x.clone());
                if !y.is_zero() {
                    prop_assert_eq!(x.mul(&y).checked_div(&y).unwrap(), x.clone());
                }
            }

            #[test]
            fn evaluation_is_a_homomorphism(x in arb_rat(), y in arb_rat(), t in -20i64..20) {
                let t = q_frac(t, 7);
                if let (Ok(a), Ok(b)) = (x.eval(&t), y.eval(&t)) {
                    if let Ok(s) = x.add(&y).eval(&t) { prop_assert_eq!(s, &a + &b); }
                    if let Ok(p) = x.mul(&y).eval(&t) { prop_assert_eq!(p, &a * &b); }
                }
            }
        }
    }
}
