//! Symmetric functions as sparse expansions in the monomial, power-sum or elementary basis,
//! with coefficients in `ℚ(α)`.

mod operators;
mod orbit;
mod transition;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlphaAlgebra, AlphaRational, AlphaValued, Ring, Q};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub use operators::{
    apply_d1, apply_d12, apply_d2, apply_dalpha, eigenvalue, mixed_pairing, OperatorMatrices,
};
pub use transition::{m_product, Transition, MAX_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "e")]
    Elementary,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::Elementary => "e",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::Monomial),
            "p" => Ok(Basis::PowerSum),
            "e" => Ok(Basis::Elementary),
            _ => Err(Error::Parse(format!(
                "unknown basis {s:?} (expected m, p or e)"
            ))),
        }
    }
}

/// A symmetric function `Σ c_λ b_λ` in one basis; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, AlphaRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    /// The basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, AlphaRational::one())
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: AlphaRational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, coeff);
        f
    }

    pub fn m(lambda: Partition) -> Self {
        Self::basis_element(Basis::Monomial, lambda)
    }

    pub fn p(lambda: Partition) -> Self {
        Self::basis_element(Basis::PowerSum, lambda)
    }

    pub fn e(lambda: Partition) -> Self {
        Self::basis_element(Basis::Elementary, lambda)
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, AlphaRational)>,
    ) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, AlphaRational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, AlphaRational> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> AlphaRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(AlphaRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·b_λ` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, lambda: Partition, c: AlphaRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// The degrees of the terms present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    /// `Some(n)` when every term has degree `n`; `None` for zero; error when mixed.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        match self.degrees().as_slice() {
            [] => Ok(None),
            [n] => Ok(Some(*n)),
            _ => Err(Error::NotHomogeneous),
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().last().copied().unwrap_or(0)
    }

    /// The homogeneous component of degree `n`.
    pub fn component(&self, n: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    fn aligned(&self, other: &SymFunc) -> Result<SymFunc> {
        if other.basis == self.basis {
            Ok(other.clone())
        } else {
            other.to_basis(self.basis)
        }
    }

    /// Sum; the result is in `self`'s basis (the other operand is converted if needed).
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = self.aligned(other)?;
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &AlphaRational) -> SymFunc {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn scale_q(&self, c: &Q) -> SymFunc {
        self.map_coeffs(|x| x.scale(c))
    }

    /// Applies `f` to every coefficient, dropping the ones that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&AlphaRational) -> AlphaRational) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter_map(|(l, c)| {
                    let v = f(c);
                    (!v.is_zero()).then(|| (l.clone(), v))
                })
                .collect(),
        }
    }

    /// Fallible coefficient map, e.g. evaluation at a rational α.
    pub fn try_map_coeffs(
        &self,
        f: impl Fn(&AlphaRational) -> Result<AlphaRational>,
    ) -> Result<SymFunc> {
        let mut out = Self::zero(self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Specializes α to a rational number.
    pub fn eval_alpha(&self, a: &Q) -> Result<SymFunc> {
        self.try_map_coeffs(|c| Ok(AlphaRational::constant(c.eval(a)?)))
    }

    /// Product; the result is in `self`'s basis.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = self.aligned(other)?;
        match self.basis {
            Basis::PowerSum | Basis::Elementary => Ok(self.multiplicative_product(&other)),
            Basis::Monomial => self.m_multiply(&other),
        }
    }

    /// `b_λ·b_μ = b_{λ∪μ}` extended bilinearly (valid in the p- and e-bases).
    fn multiplicative_product(&self, other: &SymFunc) -> SymFunc {
        let mut out = Self::zero(self.basis);
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                out.add_term(l1.union(l2), c1.mul(c2));
            }
        }
        out
    }

    /// Product of two p-basis expansions.
    pub fn p_multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        self.expect_basis(Basis::PowerSum)?;
        other.expect_basis(Basis::PowerSum)?;
        Ok(self.multiplicative_product(other))
    }

    /// Product of two m-basis expansions.
    pub fn m_multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        self.expect_basis(Basis::Monomial)?;
        other.expect_basis(Basis::Monomial)?;
        let mut acc: BTreeMap<Partition, AlphaRational> = BTreeMap::new();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                let c = c1.mul(c2);
                for (kappa, k) in m_product(l1, l2).iter() {
                    let v = c.scale(&Q::from_integer((*k).into()));
                    let e = acc.entry(kappa.clone()).or_insert_with(AlphaRational::zero);
                    *e = e.add(&v);
                }
            }
        }
        Ok(Self::from_terms(Basis::Monomial, acc))
    }

    pub fn pow(&self, e: u32) -> Result<SymFunc> {
        (0..e).try_fold(Self::one(self.basis), |acc, _| acc.mul(self))
    }

    pub fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::BasisMismatch {
                expected: basis.symbol(),
                found: self.basis.symbol(),
            });
        }
        Ok(())
    }

    /// Re-expresses the same function in `target`; exact and invertible.
    pub fn to_basis(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let mut out = Self::zero(target);
        for n in self.degrees() {
            let t = Transition::get(n)?;
            for (lambda, c) in self.component(n).terms {
                for (mu, k) in t.row(self.basis, target, &lambda) {
                    out.add_term(mu.clone(), c.scale(k));
                }
            }
        }
        Ok(out)
    }

    /// `⟨f, g⟩_α` with `⟨p_λ, p_μ⟩ = δ_{λμ} α^{ℓ(λ)} z_λ`.
    pub fn scalar_product(&self, other: &SymFunc) -> Result<AlphaRational> {
        let f = self.to_basis(Basis::PowerSum)?;
        let g = other.to_basis(Basis::PowerSum)?;
        let mut acc = AlphaRational::zero();
        for (lambda, c) in &f.terms {
            if let Some(d) = g.terms.get(lambda) {
                let w = AlphaRational::alpha_pow(lambda.len() as i64)
                    .scale(&Q::from_integer(lambda.z().into()));
                acc = acc.add(&c.mul(d).mul(&w));
            }
        }
        Ok(acc)
    }

    /// The witness term of lowest α-valuation, if any.
    pub fn min_valuation_term(&self) -> Option<(&Partition, &AlphaRational, i64)> {
        self.terms
            .iter()
            .filter_map(|(l, c)| c.valuation_at_zero().map(|v| (l, c, v)))
            .min_by_key(|&(_, _, v)| v)
    }

    /// Human-readable rendering: `p[1,1] + a*p[2]`, terms in ascending graded order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let (negative, body) = render_coeff(c);
            let basis_part = if lambda.is_empty() {
                None
            } else {
                let parts: Vec<String> = lambda.parts().iter().map(ToString::to_string).collect();
                Some(format!("{}[{}]", self.basis.symbol(), parts.join(",")))
            };
            let term = match (body.as_str(), basis_part) {
                (b, None) => b.to_string(),
                ("1", Some(p)) => p,
                (b, Some(p)) => format!("{b}*{p}"),
            };
            match (i, negative) {
                (0, false) => out.push_str(&term),
                (0, true) => {
                    out.push('-');
                    out.push_str(&term);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&term);
                }
            }
        }
        out
    }
}

/// Splits a coefficient into sign and a body suitable for `body*basis` rendering.
pub(crate) fn render_coeff(c: &AlphaRational) -> (bool, String) {
    if let Some(p) = c.as_polynomial() {
        if p.term_count() == 1 {
            let lead_negative = p.leading().is_some_and(|l| l < &Q::from_integer(0.into()));
            let abs = if lead_negative { p.neg() } else { p.clone() };
            return (lead_negative, abs.to_string());
        }
        return (false, format!("({p})"));
    }
    (false, format!("({})", c.render()))
}

impl AlphaValued for SymFunc {
    fn alpha_valuation(&self) -> Option<i64> {
        self.terms
            .values()
            .filter_map(AlphaRational::valuation_at_zero)
            .min()
    }

    fn valuation_witness(&self) -> Option<crate::report::Witness> {
        self.min_valuation_term()
            .map(|(l, c, valuation)| crate::report::Witness {
                term: format!("{}[{l}]", self.basis.symbol()),
                coefficient: c.render(),
                valuation,
            })
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({})", self.render())
    }
}

/// Symmetric functions form a ring; products of mismatched bases convert the right operand.
///
/// The ring operations here panic only if a basis conversion exceeds [`MAX_DEGREE`]; the
/// cumulant machinery stays far below it. Fallible variants are the inherent methods.
impl Ring for SymFunc {
    fn zero() -> Self {
        SymFunc::zero(Basis::PowerSum)
    }
    fn one() -> Self {
        SymFunc::one(Basis::PowerSum)
    }
    fn is_zero(&self) -> bool {
        SymFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        SymFunc::add(self, other).expect("degree within conversion bound")
    }
    fn sub(&self, other: &Self) -> Self {
        SymFunc::sub(self, other).expect("degree within conversion bound")
    }
    fn mul(&self, other: &Self) -> Self {
        SymFunc::mul(self, other).expect("degree within conversion bound")
    }
    fn neg(&self) -> Self {
        SymFunc::neg(self)
    }
    fn scale(&self, c: &Q) -> Self {
        SymFunc::scale_q(self, c)
    }
}

impl AlphaAlgebra for SymFunc {
    fn scale_alpha(&self, c: &AlphaRational) -> Self {
        self.scale(c)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    mu: Partition,
    coeff: AlphaRational,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRecord {
    basis: Basis,
    terms: Vec<TermRecord>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncRecord {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(mu, coeff)| TermRecord {
                    mu: mu.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = SymFuncRecord::deserialize(d)?;
        Ok(SymFunc::from_terms(
            rec.basis,
            rec.terms.into_iter().map(|t| (t.mu, t.coeff)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, q_frac, AlphaPolynomial};
    use crate::part;

    fn a() -> AlphaRational {
        AlphaRational::alpha()
    }

    fn int(n: i64) -> AlphaRational {
        AlphaRational::from_int(n)
    }

    #[test]
    fn product_examples() {
        let p = SymFunc::p(part![2])
            .p_multiply(&SymFunc::p(part![1]))
            .unwrap();
        assert_eq!(p, SymFunc::p(part![2, 1]));
        let m = SymFunc::m(part![1])
            .m_multiply(&SymFunc::m(part![1]))
            .unwrap();
        assert_eq!(
            m,
            SymFunc::from_terms(Basis::Monomial, [(part![2], int(1)), (part![1, 1], int(2))])
        );
        let f = SymFunc::from_terms(Basis::Monomial, [(part![2, 1], a()), (part![3], int(2))]);
        assert_eq!(f.mul(&SymFunc::one(Basis::Monomial)).unwrap(), f);
        assert!(SymFunc::m(part![1])
            .p_multiply(&SymFunc::p(part![1]))
            .is_err());
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(
            SymFunc::p(part![2]).to_basis(Basis::Monomial).unwrap(),
            SymFunc::m(part![2])
        );
        let m11 = SymFunc::m(part![1, 1]).to_basis(Basis::PowerSum).unwrap();
        let expected = SymFunc::from_terms(
            Basis::PowerSum,
            [
                (part![1, 1], AlphaRational::constant(q_frac(1, 2))),
                (part![2], AlphaRational::constant(q_frac(-1, 2))),
            ],
        );
        assert_eq!(m11, expected);
        assert_eq!(
            SymFunc::e(part![2]).to_basis(Basis::Monomial).unwrap(),
            SymFunc::m(part![1, 1])
        );
    }

    #[test]
    fn scalar_product_examples() {
        let sp = |f: &SymFunc, g: &SymFunc| f.scalar_product(g).unwrap();
        assert_eq!(
            sp(&SymFunc::p(part![2]), &SymFunc::p(part![2])),
            a().scale(&q(2))
        );
        assert!(sp(&SymFunc::p(part![1, 1]), &SymFunc::p(part![2])).is_zero());
        let j2 = SymFunc::from_terms(Basis::PowerSum, [(part![1, 1], int(1)), (part![2], a())]);
        let expected = AlphaRational::from_poly(AlphaPolynomial::from_ints(&[0, 0, 2, 2]));
        assert_eq!(sp(&j2, &j2), expected);
        let hooks = part![2].hook().mul(&part![2].hook_prime());
        assert_eq!(sp(&j2, &j2), AlphaRational::from_poly(hooks));
    }

    #[test]
    fn rendering() {
        let j2 = SymFunc::from_terms(Basis::PowerSum, [(part![1, 1], int(1)), (part![2], a())]);
        assert_eq!(j2.render(), "p[1,1] + a*p[2]");
        assert_eq!(
            SymFunc::term(Basis::Monomial, part![1, 1], int(2)).render(),
            "2*m[1,1]"
        );
        assert_eq!(SymFunc::one(Basis::Monomial).render(), "1");
        let f = SymFunc::from_terms(
            Basis::PowerSum,
            [
                (part![1, 1], int(-1)),
                (
                    part![2],
                    AlphaRational::from_poly(AlphaPolynomial::from_ints(&[1, 1])),
                ),
            ],
        );
        assert_eq!(f.render(), "-p[1,1] + (a + 1)*p[2]");
        assert_eq!(SymFunc::zero(Basis::PowerSum).render(), "0");
    }

    #[test]
    fn mixed_degree_sums_convert_per_degree() {
        let f = SymFunc::from_terms(
            Basis::PowerSum,
            [(part![1], int(3)), (part![2, 1], a()), (part![], int(1))],
        );
        let back = f
            .to_basis(Basis::Elementary)
            .unwrap()
            .to_basis(Basis::PowerSum)
            .unwrap();
        assert_eq!(back, f);
        assert!(f.homogeneous_degree().is_err());
        assert_eq!(f.degrees(), vec![0, 1, 3]);
    }

    #[test]
    fn serde_round_trip() {
        let f = SymFunc::from_terms(Basis::Monomial, [(part![2], a()), (part![1, 1], int(2))]);
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with(r#"{"basis":"m","terms":[{"mu":[1,1]"#));
        assert_eq!(serde_json::from_str::<SymFunc>(&s).unwrap(), f);
    }
}
