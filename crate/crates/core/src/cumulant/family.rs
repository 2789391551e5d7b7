//! Families indexed by subsets of `[r]`, their partial cumulants and factorization errors.

use crate::algebra::{AlphaValued, Field, Ring};
use crate::error::{Error, Result};
use crate::setpart::{full_mask, mask_string, mobius_to_top, partitions_of_mask};

/// Largest ground set for which families are materialized (all `2^r` subsets are stored).
pub const MAX_FAMILY_SIZE: usize = 5;

/// A family `(u_I)_{I ⊆ [r]}` with values in a commutative ring, indexed by bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexedFamily<R> {
    r: usize,
    values: Vec<R>,
    unit_empty: bool,
}

impl<R: Ring> IndexedFamily<R> {
    /// `values[mask]` is `u_I` for the subset with bitmask `mask`.
    pub fn new(r: usize, values: Vec<R>) -> Result<Self> {
        check_ground(r)?;
        if values.len() != 1 << r {
            return Err(Error::InvalidSubset(format!(
                "expected {} values for r = {r}, got {}",
                1 << r,
                values.len()
            )));
        }
        let unit_empty = values[0] == R::one();
        Ok(IndexedFamily {
            r,
            values,
            unit_empty,
        })
    }

    pub fn from_fn(r: usize, mut f: impl FnMut(u32) -> Result<R>) -> Result<Self> {
        check_ground(r)?;
        let values = (0..1u32 << r).map(&mut f).collect::<Result<Vec<R>>>()?;
        Self::new(r, values)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// Whether `u_∅ = 1`, as the factorization errors require.
    pub fn unit_empty(&self) -> bool {
        self.unit_empty
    }

    pub fn get(&self, mask: u32) -> Result<&R> {
        self.check_subset(mask)?;
        Ok(&self.values[mask as usize])
    }

    fn check_subset(&self, mask: u32) -> Result<()> {
        if mask & !full_mask(self.r) != 0 {
            return Err(Error::InvalidSubset(format!(
                "{} is not a subset of [{}]",
                mask_string(mask),
                self.r
            )));
        }
        Ok(())
    }

    fn check_nonempty(&self, h: u32) -> Result<()> {
        self.check_subset(h)?;
        if h == 0 {
            return Err(Error::InvalidSubset(String::from(
                "cumulants are indexed by non-empty subsets",
            )));
        }
        Ok(())
    }

    fn check_error_domain(&self, h: u32) -> Result<()> {
        self.check_subset(h)?;
        if h.count_ones() < 2 {
            return Err(Error::InvalidSubset(format!(
                "factorization errors need |H| >= 2, got {}",
                mask_string(h)
            )));
        }
        Ok(())
    }

    /// `κ_H = Σ_{π ∈ P(H)} μ(π, {H}) ∏_{B∈π} u_B`.
    pub fn partial_cumulant(&self, h: u32) -> Result<R> {
        self.check_nonempty(h)?;
        let mut acc = R::zero();
        for blocks in partitions_of_mask(h) {
            let prod = blocks
                .iter()
                .fold(R::one(), |p, &b| p.mul(&self.values[b as usize]));
            acc = acc.add(&prod.scale_int(mobius_to_top(blocks.len())));
        }
        Ok(acc)
    }

    /// All partial cumulants, indexed by mask; the empty slot is `None`.
    pub fn cumulants(&self) -> Result<Vec<Option<R>>> {
        (0..1u32 << self.r)
            .map(|h| {
                if h == 0 {
                    Ok(None)
                } else {
                    self.partial_cumulant(h).map(Some)
                }
            })
            .collect()
    }

    /// The two alternating products `E = ∏ u_G` over `|H∖G|` even and `O` over `|H∖G|` odd;
    /// the factorization error is `T_H = E/O − 1`.
    pub fn alternating_products(&self, h: u32) -> Result<(R, R)> {
        self.check_error_domain(h)?;
        let (mut even, mut odd) = (R::one(), R::one());
        for g in submasks(h) {
            let v = &self.values[g as usize];
            if (h & !g).count_ones().is_multiple_of(2) {
                even = even.mul(v);
            } else {
                odd = odd.mul(v);
            }
        }
        Ok((even, odd))
    }
}

impl<R: Field> IndexedFamily<R> {
    /// `T_H = ∏_{G ⊆ H} u_G^{(−1)^{|H|−|G|}} − 1`.
    ///
    /// The alternating product includes `u_∅`, so this is meaningful even when `u_∅ ≠ 1`
    /// (as for affine families); the recursive form below requires `u_∅ = 1`.
    pub fn t_error(&self, h: u32) -> Result<R> {
        let (even, odd) = self.alternating_products(h)?;
        Ok(even.div(&odd)?.sub(&R::one()))
    }

    /// All `T_G` (`|G| ≥ 2`) from the recursive definition
    /// `u_G = ∏_{g∈G} u_g · ∏_{H ⊆ G, |H| ≥ 2} (1 + T_H)`, indexed by mask.
    pub fn t_errors_inductive(&self) -> Result<Vec<Option<R>>> {
        if !self.unit_empty {
            return Err(Error::HypothesisNotSatisfied(String::from(
                "u_{} must equal 1",
            )));
        }
        let n = 1usize << self.r;
        let mut one_plus_t: Vec<Option<R>> = vec![None; n];
        let mut masks: Vec<u32> = (0..n as u32).filter(|m| m.count_ones() >= 2).collect();
        masks.sort_by_key(|m| m.count_ones());
        for g in masks {
            let mut denom = R::one();
            for i in 0..self.r {
                if g & (1 << i) != 0 {
                    denom = denom.mul(&self.values[1 << i]);
                }
            }
            for h in submasks(g) {
                if h != g {
                    if let Some(f) = &one_plus_t[h as usize] {
                        denom = denom.mul(f);
                    }
                }
            }
            one_plus_t[g as usize] = Some(self.values[g as usize].div(&denom)?);
        }
        Ok(one_plus_t
            .into_iter()
            .map(|f| f.map(|f| f.sub(&R::one())))
            .collect())
    }
}

impl<R: Ring + AlphaValued> IndexedFamily<R> {
    /// α-valuation of `T_H = (E − O)/O`, computed without forming the quotient.
    ///
    /// The valuation is multiplicative on `ℚ(α)` and on `Λ ⊗ ℚ(α)` alike, so this is
    /// `val(E − O) − val(O)`; `None` means `T_H = 0`.
    pub fn t_valuation(&self, h: u32) -> Result<Option<i64>> {
        let (even, odd) = self.alternating_products(h)?;
        let denom = odd.alpha_valuation().ok_or_else(|| {
            Error::NotInvertible(format!(
                "alternating product over {} vanishes",
                mask_string(h)
            ))
        })?;
        Ok(even.sub(&odd).alpha_valuation().map(|v| v - denom))
    }

    /// `val(κ_H) − Σ_{h∈H} val(u_h)`: the exponent `k` in `κ_H = (∏ u_h)·O(α^k)`.
    pub fn relative_cumulant_valuation(&self, h: u32) -> Result<Option<i64>> {
        let kappa = self.partial_cumulant(h)?;
        let mut base = 0;
        for i in 0..self.r {
            if h & (1 << i) != 0 {
                base += self.values[1 << i]
                    .alpha_valuation()
                    .ok_or_else(|| Error::NotInvertible(format!("u_{{{}}} vanishes", i + 1)))?;
            }
        }
        Ok(kappa.alpha_valuation().map(|v| v - base))
    }
}

/// `u_H = Σ_{π ∈ P(H)} ∏_{B∈π} κ_B`, from cumulants indexed by mask.
pub fn moments_from_cumulants<R: Ring>(cumulants: &[Option<R>], h: u32) -> Result<R> {
    if h == 0 {
        return Ok(R::one());
    }
    let mut acc = R::zero();
    for blocks in partitions_of_mask(h) {
        let mut prod = R::one();
        for b in blocks {
            let k = cumulants
                .get(b as usize)
                .and_then(Option::as_ref)
                .ok_or_else(|| {
                    Error::InvalidSubset(format!("missing cumulant for {}", mask_string(b)))
                })?;
            prod = prod.mul(k);
        }
        acc = acc.add(&prod);
    }
    Ok(acc)
}

/// All submasks of `mask`, including `0` and `mask`.
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & mask);
        Some(cur)
    })
}

fn check_ground(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidSubset(String::from("families need r >= 1")));
    }
    if r > MAX_FAMILY_SIZE {
        return Err(Error::BoundExceeded {
            what: "family size r",
            value: r,
            bound: MAX_FAMILY_SIZE,
        });
    }
    Ok(())
}
