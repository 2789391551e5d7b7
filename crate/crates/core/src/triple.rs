//! Symmetric functions in three independent alphabets `x, y, z`, expanded over `p ⊗ p ⊗ p`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{AlphaAlgebra, AlphaRational, AlphaValued, Ring, Q};
use crate::error::Result;
use crate::partition::Partition;
use crate::report::Witness;
use crate::symfunc::{render_coeff, Basis, SymFunc};

/// Index of a triple power sum `p_τ(x) p_μ(y) p_ν(z)`.
pub type Triple = (Partition, Partition, Partition);

/// `Σ c_{τ,μ,ν} p_τ(x) p_μ(y) p_ν(z)`; products merge partitions slot by slot.
#[derive(Clone, Default, PartialEq)]
pub struct TripleSym {
    terms: BTreeMap<Triple, AlphaRational>,
}

impl TripleSym {
    pub fn zero() -> Self {
        TripleSym::default()
    }

    pub fn one() -> Self {
        Self::term(
            (Partition::empty(), Partition::empty(), Partition::empty()),
            AlphaRational::one(),
        )
    }

    pub fn term(index: Triple, coeff: AlphaRational) -> Self {
        let mut t = TripleSym::zero();
        t.add_term(index, coeff);
        t
    }

    /// `f(x) g(y) h(z)`, each factor expanded in power sums first.
    pub fn tensor(f: &SymFunc, g: &SymFunc, h: &SymFunc) -> Result<Self> {
        let (f, g, h) = (
            f.to_basis(Basis::PowerSum)?,
            g.to_basis(Basis::PowerSum)?,
            h.to_basis(Basis::PowerSum)?,
        );
        let mut out = TripleSym::zero();
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                let cab = ca.mul(cb);
                for (c, cc) in h.terms() {
                    out.add_term((a.clone(), b.clone(), c.clone()), cab.mul(cc));
                }
            }
        }
        Ok(out)
    }

    /// The same function in all three alphabets: `f(x) f(y) f(z)`.
    pub fn diagonal(f: &SymFunc) -> Result<Self> {
        Self::tensor(f, f, f)
    }

    pub fn terms(&self) -> &BTreeMap<Triple, AlphaRational> {
        &self.terms
    }

    pub fn coeff(&self, index: &Triple) -> AlphaRational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(AlphaRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: Triple, c: AlphaRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
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

    pub fn scale(&self, c: &AlphaRational) -> Self {
        if c.is_zero() {
            return TripleSym::zero();
        }
        TripleSym {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Reorders the alphabets: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|((a, b, c), v)| {
                let slots = [a, b, c];
                (
                    (
                        slots[perm[0]].clone(),
                        slots[perm[1]].clone(),
                        slots[perm[2]].clone(),
                    ),
                    v.clone(),
                )
            })
            .collect();
        TripleSym { terms }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn try_map_coeffs(
        &self,
        f: impl Fn(&AlphaRational) -> Result<AlphaRational>,
    ) -> Result<Self> {
        let mut out = TripleSym::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v)?);
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, ((a, b, c), coeff)) in self.terms.iter().enumerate() {
            let (negative, body) = render_coeff(coeff);
            let slot = |l: &Partition, var: char| (!l.is_empty()).then(|| format!("p[{l}]({var})"));
            let monomial: Vec<String> = [slot(a, 'x'), slot(b, 'y'), slot(c, 'z')]
                .into_iter()
                .flatten()
                .collect();
            let term = match (body.as_str(), monomial.is_empty()) {
                (b, true) => b.to_string(),
                ("1", false) => monomial.join("*"),
                (b, false) => format!("{b}*{}", monomial.join("*")),
            };
            let sep = match (i, negative) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sep);
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for TripleSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TripleSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TripleSym({})", self.render())
    }
}

impl Ring for TripleSym {
    fn zero() -> Self {
        TripleSym::zero()
    }
    fn one() -> Self {
        TripleSym::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        Ring::add(self, &Ring::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = TripleSym::zero();
        for ((a1, b1, c1), v1) in &self.terms {
            for ((a2, b2, c2), v2) in &other.terms {
                out.add_term((a1.union(a2), b1.union(b2), c1.union(c2)), v1.mul(v2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        TripleSym {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.neg()))
                .collect(),
        }
    }
    fn scale(&self, c: &Q) -> Self {
        self.scale(&AlphaRational::constant(c.clone()))
    }
}

impl AlphaAlgebra for TripleSym {
    fn scale_alpha(&self, c: &AlphaRational) -> Self {
        self.scale(c)
    }
}

impl AlphaValued for TripleSym {
    fn alpha_valuation(&self) -> Option<i64> {
        self.terms
            .values()
            .filter_map(AlphaRational::valuation_at_zero)
            .min()
    }

    fn valuation_witness(&self) -> Option<Witness> {
        self.terms
            .iter()
            .filter_map(|(k, c)| c.valuation_at_zero().map(|v| (k, c, v)))
            .min_by_key(|&(_, _, v)| v)
            .map(|((a, b, c), coeff, valuation)| Witness {
                term: format!("p[{a}](x)*p[{b}](y)*p[{c}](z)"),
                coefficient: coeff.render(),
                valuation,
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn products_merge_slotwise() {
        let x = TripleSym::term((part![1], part![2], part![]), AlphaRational::alpha());
        let y = TripleSym::term((part![1], part![], part![3]), AlphaRational::from_int(2));
        let xy = Ring::mul(&x, &y);
        assert_eq!(xy.len(), 1);
        assert_eq!(
            xy.coeff(&(part![1, 1], part![2], part![3])),
            AlphaRational::alpha().scale(&crate::algebra::q(2))
        );
        assert_eq!(Ring::mul(&x, &TripleSym::one()), x);
        assert!(Ring::sub(&x, &x).is_empty());
    }

    #[test]
    fn tensor_and_render() {
        let p2 = SymFunc::p(part![2]);
        let t =
            TripleSym::tensor(&SymFunc::p(part![1]), &p2, &SymFunc::one(Basis::PowerSum)).unwrap();
        assert_eq!(t.render(), "p[1](x)*p[2](y)");
        assert_eq!(t.permute([2, 0, 1]).render(), "p[1](y)*p[2](z)");
        assert_eq!(TripleSym::one().render(), "1");
        assert_eq!(
            t.scale(&AlphaRational::alpha().neg()).render(),
            "-a*p[1](x)*p[2](y)"
        );
    }
}
