//! The differential operators `D₁`, `D₂`, `D_α = D₁ + αD₂` and the mixed operator `D_{1,2}`,
//! realized on `N`-variable restrictions.
//!
//! `D₁` and `D₂` act through per-`(degree, N)` matrices in the m-basis, built once by expanding
//! each `m_μ` into explicit monomials in `N` variables and applying the operator term by term.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::orbit::{for_each_rearrangement, orbit_pair_sum};
use super::{Basis, SymFunc};
use crate::algebra::{AlphaPolynomial, AlphaRational, Q};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Sparse integer rows: row `μ` lists `(ν, [m_ν] D m_μ)`.
type IntRow = Vec<(Partition, i64)>;
type IntRows = Vec<IntRow>;
type OperatorCache = RwLock<HashMap<(u32, usize), Arc<OperatorMatrices>>>;

/// `D₁` and `D₂` in the m-basis of one degree, restricted to `N` variables.
#[derive(Debug)]
pub struct OperatorMatrices {
    degree: u32,
    vars: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    d1: IntRows,
    d2: IntRows,
}

static OPERATORS: OnceLock<OperatorCache> = OnceLock::new();

/// The eigenvalue `α·b(λ) − b(λ^t) + (N−1)|λ|` of `D_α` on `J_λ` in `N` variables.
pub fn eigenvalue(lambda: &Partition, vars: usize) -> AlphaPolynomial {
    let c0 = (vars as i64 - 1) * i64::from(lambda.size()) - lambda.conjugate().b() as i64;
    AlphaPolynomial::linear(c0, lambda.b() as i64)
}

fn check_vars(degree: u32, vars: usize) -> Result<()> {
    if vars < degree as usize {
        return Err(Error::TooFewVariables { vars, degree });
    }
    Ok(())
}

impl OperatorMatrices {
    pub fn get(degree: u32, vars: usize) -> Result<Arc<OperatorMatrices>> {
        check_vars(degree, vars)?;
        let cache = OPERATORS.get_or_init(Default::default);
        if let Some(hit) = cache
            .read()
            .expect("operator cache poisoned")
            .get(&(degree, vars))
        {
            return Ok(hit.clone());
        }
        let built = Arc::new(Self::build(degree, vars)?);
        Ok(cache
            .write()
            .expect("operator cache poisoned")
            .entry((degree, vars))
            .or_insert(built)
            .clone())
    }

    fn build(degree: u32, vars: usize) -> Result<Self> {
        let parts = partitions_of(degree)?;
        let index = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut d1 = Vec::with_capacity(parts.len());
        let mut d2 = Vec::with_capacity(parts.len());
        for mu in &parts {
            let (r1, r2) = brute_force_rows(mu, vars);
            d1.push(r1);
            d2.push(r2);
        }
        Ok(OperatorMatrices {
            degree,
            vars,
            parts,
            index,
            d1,
            d2,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    /// `[m_ν] D₁ m_μ` for all `ν`.
    pub fn d1_row(&self, mu: &Partition) -> &[(Partition, i64)] {
        &self.d1[self.index[mu]]
    }

    /// `[m_ν] D₂ m_μ` for all `ν`.
    pub fn d2_row(&self, mu: &Partition) -> &[(Partition, i64)] {
        &self.d2[self.index[mu]]
    }

    /// `[m_ν] D_α m_μ` as a polynomial in α.
    pub fn dalpha_entry(&self, mu: &Partition, nu: &Partition) -> AlphaPolynomial {
        let find =
            |row: &[(Partition, i64)]| row.iter().find(|(p, _)| p == nu).map_or(0, |(_, c)| *c);
        AlphaPolynomial::linear(find(self.d1_row(mu)), find(self.d2_row(mu)))
    }
}

/// Expands `m_μ` into its monomials in `vars` variables and applies `D₁` and `D₂`, keeping
/// only output monomials whose exponent vector is weakly decreasing: those are exactly the
/// leading monomials `x^ν` whose coefficients are the m-coefficients.
fn brute_force_rows(mu: &Partition, vars: usize) -> (IntRow, IntRow) {
    let mut d1: HashMap<Partition, i64> = HashMap::new();
    let mut d2: HashMap<Partition, i64> = HashMap::new();
    let mut out = vec![0u32; vars];
    let decreasing = |v: &[u32]| v.windows(2).all(|w| w[0] >= w[1]);
    for_each_rearrangement(mu, vars, |c| {
        // D₂ = ½ Σ x_i² ∂_i² is diagonal on monomials.
        if decreasing(c) {
            let k: u64 = c
                .iter()
                .map(|&e| u64::from(e) * u64::from(e.saturating_sub(1)) / 2)
                .sum();
            if k != 0 {
                *d2.entry(Partition::new(c.to_vec())).or_insert(0) += k as i64;
            }
        }
        // D₁ = Σ_{i<j} (x_i²∂_i − x_j²∂_j)/(x_i − x_j). On a symmetric polynomial the monomial
        // x^c contributes c_i·(x^d − x^{s(d)})/(x_i − x_j), with d = c + e_i and s swapping i, j.
        for i in 0..vars {
            if c[i] == 0 {
                continue;
            }
            let weight = i64::from(c[i]);
            for j in (i + 1)..vars {
                let (a, b) = (c[i] + 1, c[j]);
                if a == b {
                    continue;
                }
                let (low, high, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
                out.copy_from_slice(c);
                for k in 0..(high - low) {
                    out[i] = low + k;
                    out[j] = high - 1 - k;
                    if decreasing(&out) {
                        *d1.entry(Partition::new(out.clone())).or_insert(0) += sign * weight;
                    }
                }
            }
        }
    });
    let finish = |m: HashMap<Partition, i64>| {
        let mut v: Vec<(Partition, i64)> = m.into_iter().filter(|(_, c)| *c != 0).collect();
        v.sort();
        v
    };
    (finish(d1), finish(d2))
}

fn resolve_vars(f: &SymFunc, vars: Option<usize>) -> Result<usize> {
    let n = f.max_degree();
    let v = vars.unwrap_or(n as usize);
    check_vars(n, v)?;
    Ok(v)
}

fn apply_matrix(
    f: &SymFunc,
    vars: Option<usize>,
    which: impl Fn(&OperatorMatrices, &Partition) -> SymFunc,
) -> Result<SymFunc> {
    let f = f.to_basis(Basis::Monomial)?;
    let vars = resolve_vars(&f, vars)?;
    let mut out = SymFunc::zero(Basis::Monomial);
    for n in f.degrees() {
        let ops = OperatorMatrices::get(n, vars)?;
        for (mu, c) in f.component(n).terms() {
            for (nu, k) in which(&ops, mu).terms() {
                out.add_term(nu.clone(), c.mul(k));
            }
        }
    }
    Ok(out)
}

fn int_row(row: &[(Partition, i64)]) -> SymFunc {
    SymFunc::from_terms(
        Basis::Monomial,
        row.iter()
            .map(|(nu, k)| (nu.clone(), AlphaRational::from_int(*k))),
    )
}

/// `D₁ f` in `vars` variables (default: the degree of `f`), in the m-basis.
pub fn apply_d1(f: &SymFunc, vars: Option<usize>) -> Result<SymFunc> {
    apply_matrix(f, vars, |ops, mu| int_row(ops.d1_row(mu)))
}

/// `D₂ f` in `vars` variables (default: the degree of `f`), in the m-basis.
pub fn apply_d2(f: &SymFunc, vars: Option<usize>) -> Result<SymFunc> {
    apply_matrix(f, vars, |ops, mu| int_row(ops.d2_row(mu)))
}

/// `D_α f = D₁ f + α·D₂ f` in `vars` variables, in the m-basis.
pub fn apply_dalpha(f: &SymFunc, vars: Option<usize>) -> Result<SymFunc> {
    apply_matrix(f, vars, |ops, mu| {
        let mut row = int_row(ops.d1_row(mu));
        for (nu, k) in ops.d2_row(mu) {
            row.add_term(
                nu.clone(),
                AlphaRational::from_poly(AlphaPolynomial::linear(0, *k)),
            );
        }
        row
    })
}

/// `B(f, g) = Σ_m (x_m ∂_m f)(x_m ∂_m g)`, in the m-basis.
///
/// Requires `vars ≥ deg f + deg g` (default: exactly that), so that the restriction is faithful.
pub fn mixed_pairing(f: &SymFunc, g: &SymFunc, vars: Option<usize>) -> Result<SymFunc> {
    let f = f.to_basis(Basis::Monomial)?;
    let g = g.to_basis(Basis::Monomial)?;
    let total = f.max_degree() + g.max_degree();
    check_vars(total, vars.unwrap_or(total as usize))?;
    let mut out = SymFunc::zero(Basis::Monomial);
    for (mu, c1) in f.terms() {
        for (nu, c2) in g.terms() {
            let c = c1.mul(c2);
            let table = orbit_pair_sum(mu, nu, |a, b| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| i128::from(*x) * i128::from(*y))
                    .sum()
            });
            for (kappa, k) in table {
                out.add_term(kappa, c.scale(&Q::from_integer(k.into())));
            }
        }
    }
    Ok(out)
}

/// `D_{1,2}(f₁, …, f_k) = Σ_m Σ_{i<j} f₁⋯(x_m∂_m f_i)⋯(x_m∂_m f_j)⋯f_k`, in the m-basis.
///
/// `vars` defaults to the total degree and must be at least that.
pub fn apply_d12(fs: &[SymFunc], vars: Option<usize>) -> Result<SymFunc> {
    let total: u32 = fs.iter().map(SymFunc::max_degree).sum();
    let vars = vars.unwrap_or(total as usize);
    check_vars(total, vars)?;
    let mut out = SymFunc::zero(Basis::Monomial);
    for i in 0..fs.len() {
        for j in (i + 1)..fs.len() {
            let mut term = mixed_pairing(&fs[i], &fs[j], Some(vars))?;
            for (k, f) in fs.iter().enumerate() {
                if k != i && k != j {
                    term = term.mul(f)?;
                }
            }
            out = out.add(&term)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlphaValued;
    use crate::part;

    fn int(n: i64) -> AlphaRational {
        AlphaRational::from_int(n)
    }

    #[test]
    fn d1_on_e1_and_small_monomials() {
        let e1 = SymFunc::e(part![1]);
        let r = apply_d1(&e1, Some(2)).unwrap();
        assert_eq!(r, e1.to_basis(Basis::Monomial).unwrap());
        let r = apply_d1(&SymFunc::m(part![2]), Some(2)).unwrap();
        assert_eq!(
            r,
            SymFunc::from_terms(Basis::Monomial, [(part![2], int(2)), (part![1, 1], int(2))])
        );
        assert_eq!(
            apply_d1(&SymFunc::m(part![1, 1]), Some(2)).unwrap(),
            SymFunc::m(part![1, 1])
        );
    }

    #[test]
    fn d2_examples() {
        assert!(apply_d2(&SymFunc::m(part![1, 1]), Some(3))
            .unwrap()
            .is_zero());
        assert_eq!(
            apply_d2(&SymFunc::m(part![2]), Some(2)).unwrap(),
            SymFunc::m(part![2])
        );
    }

    #[test]
    fn dalpha_on_j2() {
        let j2 = SymFunc::from_terms(
            Basis::Monomial,
            [
                (
                    part![2],
                    AlphaRational::from_poly(AlphaPolynomial::linear(1, 1)),
                ),
                (part![1, 1], int(2)),
            ],
        );
        let lhs = apply_dalpha(&j2, Some(2)).unwrap();
        let ev = AlphaRational::from_poly(eigenvalue(&part![2], 2));
        assert_eq!(ev, AlphaRational::from_poly(AlphaPolynomial::linear(2, 1)));
        assert_eq!(lhs, j2.scale(&ev));
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(
            eigenvalue(&part![1, 1], 2),
            AlphaPolynomial::constant_int(1)
        );
        assert!(eigenvalue(&part![], 5).is_zero());
    }

    #[test]
    fn too_few_variables() {
        assert!(matches!(
            apply_d1(&SymFunc::m(part![1, 1, 1]), Some(2)),
            Err(Error::TooFewVariables { .. })
        ));
        assert!(apply_d12(&[SymFunc::p(part![1]), SymFunc::p(part![1])], Some(1)).is_err());
    }

    #[test]
    fn d12_examples() {
        let p1 = SymFunc::p(part![1]);
        assert!(apply_d12(std::slice::from_ref(&p1), None)
            .unwrap()
            .is_zero());
        let r = apply_d12(&[p1.clone(), p1], Some(2)).unwrap();
        assert_eq!(r, SymFunc::p(part![2]).to_basis(Basis::Monomial).unwrap());
    }

    /// D_α m_μ is supported on partitions dominated by μ, with diagonal entry Ev_N(μ).
    #[test]
    fn dalpha_is_lower_triangular_in_dominance() {
        for n in 1..=5 {
            let ops = OperatorMatrices::get(n, n as usize).unwrap();
            for mu in ops.partitions() {
                let img = apply_dalpha(&SymFunc::m(mu.clone()), None).unwrap();
                for nu in img.terms().keys() {
                    assert!(nu.dominance_leq(mu).unwrap(), "{nu} in D m_{mu}");
                }
                assert_eq!(
                    img.coeff(mu),
                    AlphaRational::from_poly(eigenvalue(mu, n as usize))
                );
                assert!(!img.is_big_o(1) || img.is_zero());
            }
        }
    }

    #[test]
    fn d2_is_diagonal_with_entry_b() {
        for n in 1..=6 {
            let ops = OperatorMatrices::get(n, n as usize + 1).unwrap();
            for mu in ops.partitions() {
                let row = ops.d2_row(mu);
                if mu.b() == 0 {
                    assert!(row.is_empty());
                } else {
                    assert_eq!(row, &[(mu.clone(), mu.b() as i64)]);
                }
            }
        }
    }
}
