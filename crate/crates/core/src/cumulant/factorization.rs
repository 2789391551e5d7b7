//! Strong-factorization and small-cumulant verdicts for Jack, hook and affine families.

use serde::Serialize;

use super::family::{submasks, IndexedFamily};
use crate::algebra::{AlphaRational, AlphaValued, Ring};
use crate::error::{Error, Result};
use crate::jack::JackEngine;
use crate::partition::{oplus_mask, Partition};
use crate::report::{Check, ValuationVerdict};
use crate::setpart::{full_mask, mask_string};
use crate::symfunc::SymFunc;
use crate::triple::TripleSym;

/// Largest `r` for which the product form of strong factorization is checked directly.
pub const T_FORM_MAX_R: usize = 3;

/// Cumulant verdict plus, for small `r`, the product-form verdicts and their agreement.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub cumulant: ValuationVerdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub t_form: Vec<ValuationVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Check>,
}

impl FactorizationReport {
    pub fn pass(&self) -> bool {
        self.cumulant.pass
            && self.t_form.iter().all(|v| v.pass)
            && self.agreement.as_ref().is_none_or(|c| c.pass)
    }
}

/// `(λ¹), (λ²), …` for reports.
pub fn describe(lambdas: &[Partition]) -> String {
    lambdas
        .iter()
        .map(|l| format!("({l})"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Checks `κ_{[r]} = (∏ u_i)·O(α^{r−1})`, and for `r ≤ 3` also `T_H = O(α^{|H|−1})` for every
/// `|H| ≥ 2` together with the subset-by-subset equivalence of the two properties.
pub fn family_factorization<R: Ring + AlphaValued>(
    fam: &IndexedFamily<R>,
    label: &str,
) -> Result<FactorizationReport> {
    let r = fam.r();
    let top = full_mask(r);
    let kappa = fam.partial_cumulant(top)?;
    let achieved = fam.relative_cumulant_valuation(top)?;
    let cumulant = ValuationVerdict::new(
        format!("kappa({label})"),
        r as i64 - 1,
        achieved,
        kappa.valuation_witness(),
    );
    let (t_form, agreement) = if (2..=T_FORM_MAX_R).contains(&r) {
        let mut verdicts = Vec::new();
        for h in proper_masks(r) {
            let (even, odd) = fam.alternating_products(h)?;
            let v = fam.t_valuation(h)?;
            verdicts.push(ValuationVerdict::new(
                format!("T_{}({label})", mask_string(h)),
                h.count_ones() as i64 - 1,
                v,
                even.sub(&odd).valuation_witness(),
            ));
        }
        (verdicts, Some(factorization_agreement(fam, label)?))
    } else {
        (Vec::new(), None)
    };
    Ok(FactorizationReport {
        cumulant,
        t_form,
        agreement,
    })
}

/// Masks of subsets of `[r]` with at least two elements, by increasing size.
fn proper_masks(r: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..=full_mask(r)).filter(|m| m.count_ones() >= 2).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

/// For each `H`, "`T_G = O(α^{|G|−1})` for all `G ⊆ H`" holds iff
/// "`κ_G = (∏ u_g) O(α^{|G|−1})` for all `G ⊆ H`" holds.
///
/// Requires every `u_{i}` and its inverse to be `O(1)`, i.e. valuation exactly 0.
pub fn factorization_agreement<R: Ring + AlphaValued>(
    fam: &IndexedFamily<R>,
    label: &str,
) -> Result<Check> {
    let r = fam.r();
    for i in 0..r {
        if fam.get(1 << i)?.alpha_valuation() != Some(0) {
            return Err(Error::HypothesisNotSatisfied(format!(
                "u_{{{}}} and its inverse must be O(1)",
                i + 1
            )));
        }
    }
    let masks = proper_masks(r);
    let mut t_ok = vec![true; 1 << r];
    let mut k_ok = vec![true; 1 << r];
    for &g in &masks {
        let need = g.count_ones() as i64 - 1;
        t_ok[g as usize] = fam.t_valuation(g)?.is_none_or(|v| v >= need);
        k_ok[g as usize] = fam
            .relative_cumulant_valuation(g)?
            .is_none_or(|v| v >= need);
    }
    let disagreements: Vec<String> = masks
        .iter()
        .filter(|&&h| {
            let sf = submasks(h).all(|g| t_ok[g as usize]);
            let sc = submasks(h).all(|g| k_ok[g as usize]);
            sf != sc
        })
        .map(|&h| mask_string(h))
        .collect();
    Ok(Check::from_bool(
        format!("factorization/cumulant agreement ({label})"),
        disagreements.is_empty(),
        || format!("verdicts differ on {}", disagreements.join(", ")),
    ))
}

/// `u_I = J_{λ^I}` in the p-basis, with `λ^I = ⊕_{i∈I} λ^i`.
pub fn jack_family(engine: &JackEngine, lambdas: &[Partition]) -> Result<IndexedFamily<SymFunc>> {
    IndexedFamily::from_fn(lambdas.len(), |m| {
        Ok(engine.jack_p(&oplus_mask(lambdas, m))?.function)
    })
}

/// `κ^J(λ¹, …, λ^r)` in the p-basis.
pub fn jack_cumulant(engine: &JackEngine, lambdas: &[Partition]) -> Result<SymFunc> {
    jack_family(engine, lambdas)?.partial_cumulant(full_mask(lambdas.len()))
}

/// Strong factorization of Jack polynomials for one tuple of partitions.
pub fn verify_strong_factorization(
    engine: &JackEngine,
    lambdas: &[Partition],
) -> Result<FactorizationReport> {
    family_factorization(&jack_family(engine, lambdas)?, &describe(lambdas))
}

/// `F(λ) = J_λ(x) J_λ(y) J_λ(z) / (hook(λ)·hook″(λ))` in three independent alphabets.
pub fn small_cumulant_value(engine: &JackEngine, lambda: &Partition) -> Result<TripleSym> {
    let j = engine.jack_p(lambda)?.function;
    let norm = AlphaRational::from_poly(lambda.hook().mul(&lambda.hook_dprime()));
    Ok(TripleSym::diagonal(&j)?.scale(&norm.inv()?))
}

/// `u_I = F(λ^I)` for the three-alphabet function [`small_cumulant_value`].
pub fn small_cumulant_family(
    engine: &JackEngine,
    lambdas: &[Partition],
) -> Result<IndexedFamily<TripleSym>> {
    IndexedFamily::from_fn(lambdas.len(), |m| {
        small_cumulant_value(engine, &oplus_mask(lambdas, m))
    })
}

/// Which hook product builds a hook family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HookVariant {
    /// `∏ (αa + ℓ + 1)`.
    Hook,
    /// `∏ (αa + ℓ + α)` over boxes with non-zero leg.
    HookDoublePrime,
}

impl HookVariant {
    pub fn name(self) -> &'static str {
        match self {
            HookVariant::Hook => "hook",
            HookVariant::HookDoublePrime => "hook''",
        }
    }

    pub fn evaluate(self, lambda: &Partition) -> AlphaRational {
        AlphaRational::from_poly(match self {
            HookVariant::Hook => lambda.hook(),
            HookVariant::HookDoublePrime => lambda.hook_dprime(),
        })
    }
}

/// `u_I = hook(λ^I)` (or `hook″`).
pub fn hook_family(
    lambdas: &[Partition],
    variant: HookVariant,
) -> Result<IndexedFamily<AlphaRational>> {
    IndexedFamily::from_fn(lambdas.len(), |m| {
        Ok(variant.evaluate(&oplus_mask(lambdas, m)))
    })
}

/// `T_{[r]}` of a hook family is `O(α^{r−1})`; needs `r ≥ 2`.
pub fn verify_hook_factorization(
    lambdas: &[Partition],
    variant: HookVariant,
) -> Result<ValuationVerdict> {
    let fam = hook_family(lambdas, variant)?;
    let top = full_mask(lambdas.len());
    let t = fam.t_error(top)?;
    Ok(ValuationVerdict::new(
        format!("T({}; {})", variant.name(), describe(lambdas)),
        lambdas.len() as i64 - 1,
        t.valuation_at_zero(),
        t.valuation_witness(),
    ))
}

/// For `v_I = C + α Σ_{i∈I} c_i` with `C, C⁻¹, c_i = O(1)`: `T_H(v) = O(α^{|H|})`.
///
/// `h` is a bitmask over the indices of `cs` and must have at least two elements. A violated
/// precondition is reported as [`Error::HypothesisNotSatisfied`], never as a failed verdict.
pub fn verify_affine_lemma(
    c: &AlphaRational,
    cs: &[AlphaRational],
    h: u32,
) -> Result<ValuationVerdict> {
    if c.valuation_at_zero() != Some(0) {
        return Err(Error::HypothesisNotSatisfied(format!(
            "C = {} and its inverse must be O(1)",
            c.render()
        )));
    }
    if let Some((i, ci)) = cs.iter().enumerate().find(|(_, ci)| !ci.is_big_o(0)) {
        return Err(Error::HypothesisNotSatisfied(format!(
            "c_{} = {} is not O(1)",
            i + 1,
            ci.render()
        )));
    }
    let alpha = AlphaRational::alpha();
    let fam = IndexedFamily::from_fn(cs.len(), |m| {
        let sum = (0..cs.len())
            .filter(|i| m & (1 << i) != 0)
            .fold(AlphaRational::zero(), |acc, i| acc.add(&cs[i]));
        Ok(c.add(&alpha.mul(&sum)))
    })?;
    let t = fam.t_error(h)?;
    Ok(ValuationVerdict::new(
        format!("T_{}(affine)", mask_string(h)),
        h.count_ones() as i64,
        t.valuation_at_zero(),
        t.valuation_witness(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, AlphaPolynomial};
    use crate::part;

    fn ar(coeffs: &[i64]) -> AlphaRational {
        AlphaRational::from_poly(AlphaPolynomial::from_ints(coeffs))
    }

    #[test]
    fn jack_cumulant_examples() {
        let e = JackEngine::new();
        let k = jack_cumulant(&e, &[part![1], part![1]]).unwrap();
        assert_eq!(
            k,
            SymFunc::term(
                crate::symfunc::Basis::PowerSum,
                part![2],
                AlphaRational::alpha()
            )
        );
        let k = jack_cumulant(&e, &[part![1], part![1], part![1]]).unwrap();
        assert_eq!(k.render(), "2*a^2*p[3]");
        let k = jack_cumulant(&e, &[part![2], part![1]]).unwrap();
        assert_eq!(k.render(), "2*a*p[2,1] + 2*a^2*p[3]");
        assert_eq!(
            jack_cumulant(&e, &[part![2, 1]]).unwrap(),
            e.jack_p(&part![2, 1]).unwrap().function
        );
    }

    #[test]
    fn strong_factorization_examples() {
        let e = JackEngine::new();
        for (lambdas, val) in [
            (vec![part![1], part![1]], 1),
            (vec![part![1], part![1], part![1]], 2),
            (vec![part![2], part![1]], 1),
        ] {
            let rep = verify_strong_factorization(&e, &lambdas).unwrap();
            assert!(rep.pass(), "{rep:?}");
            assert_eq!(rep.cumulant.achieved_valuation, Some(val));
            assert_eq!(rep.t_form.len(), (1 << lambdas.len()) - lambdas.len() - 1);
        }
    }

    #[test]
    fn three_alphabet_family_factorizes() {
        let e = JackEngine::new();
        let fam = small_cumulant_family(&e, &[part![1], part![1]]).unwrap();
        assert!(fam.unit_empty());
        let rep = family_factorization(&fam, "triple").unwrap();
        assert!(rep.pass(), "{rep:?}");
    }

    #[test]
    fn hook_examples() {
        let v = verify_hook_factorization(&[part![1], part![1]], HookVariant::Hook).unwrap();
        assert_eq!(v.achieved_valuation, Some(1));
        assert!(v.pass);
        let v =
            verify_hook_factorization(&[part![1], part![1], part![1]], HookVariant::Hook).unwrap();
        assert!(v.pass && v.achieved_valuation >= Some(2));
        assert!(verify_hook_factorization(&[part![2]], HookVariant::Hook).is_err());
    }

    #[test]
    fn affine_examples() {
        let one = AlphaRational::one();
        let v = verify_affine_lemma(&one, &[one.clone(), one.clone()], 0b11).unwrap();
        assert!(v.pass);
        // (1)(1 + 2α)/(1 + α)² − 1 = −α²/(1 + α)².
        let expected = ar(&[1, 2])
            .checked_div(&ar(&[1, 1]).pow(2).unwrap())
            .unwrap()
            .sub(&one);
        assert_eq!(expected.valuation_at_zero(), Some(2));
        assert_eq!(v.achieved_valuation, Some(2));
        assert!(matches!(
            verify_affine_lemma(
                &AlphaRational::from_int(2),
                &[AlphaRational::from_int(3)],
                0b1
            ),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            verify_affine_lemma(&AlphaRational::alpha(), &[one.clone(), one.clone()], 0b11),
            Err(Error::HypothesisNotSatisfied(_))
        ));
        let pole = AlphaRational::alpha().inv().unwrap();
        assert!(matches!(
            verify_affine_lemma(&one, &[pole, one.clone()], 0b11),
            Err(Error::HypothesisNotSatisfied(_))
        ));
    }

    #[test]
    fn agreement_detects_both_outcomes() {
        // u_12 = 1 + α: both properties hold; u_12 = 2: both fail, and they still agree.
        for u12 in [ar(&[1, 1]), ar(&[2])] {
            let one = AlphaRational::one();
            let fam = IndexedFamily::new(2, vec![one.clone(), one.clone(), one, u12]).unwrap();
            assert!(factorization_agreement(&fam, "demo").unwrap().pass);
        }
        let fam = IndexedFamily::new(
            2,
            vec![q(1), q(1), q(1), q(2)]
                .into_iter()
                .map(AlphaRational::constant)
                .collect(),
        )
        .unwrap();
        assert!(!family_factorization(&fam, "demo").unwrap().pass());
    }
}
