//! Jack polynomials `J_λ` in the J-normalization, computed exactly as eigenvectors of the
//! Laplace–Beltrami operator `D_α`, with an optional persistent cache and self-checks.

pub mod cache;

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlphaRational, Q};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::report::Check;
use crate::symfunc::{apply_dalpha, eigenvalue, Basis, OperatorMatrices, SymFunc};

pub use cache::ENGINE_VERSION;

/// Default size bound for Jack computations.
pub const DEFAULT_JACK_BOUND: u32 = 10;
/// Size bound that cannot be overridden.
pub const HARD_JACK_BOUND: u32 = 12;
/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "JACKCUM_CACHE_DIR";

/// A linear extension of the dominance order used to walk the partitions below `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinearExtension {
    /// Lexicographically decreasing parts.
    LexDescending,
    /// Lexicographically increasing conjugates.
    ConjugateLexAscending,
}

impl LinearExtension {
    /// Sorts partitions of one size so that every `ρ` precedes all partitions it dominates.
    pub fn sort(self, parts: &mut [Partition]) {
        match self {
            LinearExtension::LexDescending => parts.sort_by(|a, b| b.parts().cmp(a.parts())),
            LinearExtension::ConjugateLexAscending => {
                parts.sort_by_cached_key(|p| p.conjugate().parts().to_vec());
            }
        }
    }
}

/// Where an expansion came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Provenance {
    /// Number of variables used by the eigen-solve.
    pub variables: usize,
    pub order: LinearExtension,
    pub from_disk_cache: bool,
}

/// `J_λ` expanded in the m- or p-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackExpansion {
    pub lambda: Partition,
    pub function: SymFunc,
    pub provenance: Provenance,
}

impl JackExpansion {
    pub fn basis(&self) -> Basis {
        self.function.basis()
    }
}

/// Solves `D_α J = Ev(λ) J` in `|λ|` variables by walking down `order` from `λ`.
///
/// The coefficient of `m_λ` is `hook_α(λ)`; each lower coefficient is
/// `a_ν = Σ_{ν<ρ≤λ} [m_ν](D_α m_ρ)·a_ρ / (Ev(λ) − Ev(ν))`.
pub fn solve_jack_m(lambda: &Partition, order: LinearExtension) -> Result<SymFunc> {
    let n = lambda.size();
    if n == 0 {
        return Ok(SymFunc::one(Basis::Monomial));
    }
    let vars = n as usize;
    let ops = OperatorMatrices::get(n, vars)?;
    let ev_lambda = eigenvalue(lambda, vars);
    let mut below: Vec<Partition> = partitions_of(n)?
        .into_iter()
        .filter(|nu| nu != lambda && nu.dominated_by(lambda))
        .collect();
    order.sort(&mut below);

    let mut coeffs: BTreeMap<Partition, AlphaRational> = BTreeMap::new();
    coeffs.insert(lambda.clone(), AlphaRational::from_poly(lambda.hook()));
    // Off-diagonal D_α entries are the D₁ entries (D₂ is diagonal in the m-basis).
    let rows: HashMap<&Partition, HashMap<&Partition, i64>> = ops
        .partitions()
        .iter()
        .map(|rho| {
            (
                rho,
                ops.d1_row(rho).iter().map(|(nu, k)| (nu, *k)).collect(),
            )
        })
        .collect();
    for nu in below {
        let mut sum = AlphaRational::zero();
        for (rho, a) in &coeffs {
            if let Some(&k) = rows[rho].get(&nu) {
                sum = sum.add(&a.scale(&Q::from_integer(k.into())));
            }
        }
        if sum.is_zero() {
            continue;
        }
        let gap = ev_lambda.sub(&eigenvalue(&nu, vars));
        if gap.is_zero() {
            return Err(Error::Invariant(format!(
                "equal eigenvalues for comparable partitions {nu} < {lambda}"
            )));
        }
        let a = sum.checked_div(&AlphaRational::from_poly(gap))?;
        coeffs.insert(nu, a);
    }
    Ok(SymFunc::from_terms(Basis::Monomial, coeffs))
}

type Slot = Arc<OnceLock<Result<SymFunc>>>;

/// Computes and caches Jack polynomials.
///
/// Each `(λ, basis)` is computed at most once per engine: concurrent requests for the same key
/// wait for the first one. With a cache directory, results are also persisted and reused
/// across runs.
#[derive(Debug)]
pub struct JackEngine {
    bound: u32,
    cache_dir: Option<PathBuf>,
    memo: Mutex<HashMap<(Partition, Basis), Slot>>,
}

impl Default for JackEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl JackEngine {
    /// In-memory engine with the default size bound.
    pub fn new() -> Self {
        JackEngine {
            bound: DEFAULT_JACK_BOUND,
            cache_dir: None,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Engine using the directory named by `JACKCUM_CACHE_DIR`, if set.
    pub fn from_env() -> Self {
        let mut e = Self::new();
        e.cache_dir = std::env::var_os(CACHE_DIR_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from);
        e
    }

    /// The process-wide in-memory engine used by the free functions.
    pub fn shared() -> &'static JackEngine {
        static SHARED: OnceLock<JackEngine> = OnceLock::new();
        SHARED.get_or_init(JackEngine::new)
    }

    pub fn with_bound(mut self, bound: u32) -> Result<Self> {
        if bound > HARD_JACK_BOUND {
            return Err(Error::BoundExceeded {
                what: "Jack size bound",
                value: bound as usize,
                bound: HARD_JACK_BOUND as usize,
            });
        }
        self.bound = bound;
        Ok(self)
    }

    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    pub fn jack_m(&self, lambda: &Partition) -> Result<JackExpansion> {
        self.jack(lambda, Basis::Monomial)
    }

    pub fn jack_p(&self, lambda: &Partition) -> Result<JackExpansion> {
        self.jack(lambda, Basis::PowerSum)
    }

    pub fn jack(&self, lambda: &Partition, basis: Basis) -> Result<JackExpansion> {
        if lambda.size() > self.bound {
            return Err(Error::BoundExceeded {
                what: "partition size",
                value: lambda.size() as usize,
                bound: self.bound as usize,
            });
        }
        let slot = {
            let mut memo = self
                .memo
                .lock()
                .map_err(|_| Error::Invariant(String::from("memo poisoned")))?;
            memo.entry((lambda.clone(), basis)).or_default().clone()
        };
        let mut from_disk = false;
        let function = slot
            .get_or_init(|| {
                let (f, disk) = self.compute(lambda, basis)?;
                from_disk = disk;
                Ok(f)
            })
            .clone()?;
        Ok(JackExpansion {
            lambda: lambda.clone(),
            function,
            provenance: Provenance {
                variables: lambda.size() as usize,
                order: LinearExtension::LexDescending,
                from_disk_cache: from_disk,
            },
        })
    }

    fn compute(&self, lambda: &Partition, basis: Basis) -> Result<(SymFunc, bool)> {
        if let Some(dir) = &self.cache_dir {
            if let Some(f) = cache::load(dir, lambda, basis)? {
                return Ok((f, true));
            }
        }
        let f = match basis {
            Basis::Monomial => solve_jack_m(lambda, LinearExtension::LexDescending)?,
            other => self.jack_m(lambda)?.function.to_basis(other)?,
        };
        if let Some(dir) = &self.cache_dir {
            cache::store(dir, lambda, &f)?;
        }
        Ok((f, false))
    }
}

/// `J_λ` in the m-basis from the shared in-memory engine.
pub fn jack_m(lambda: &Partition) -> Result<JackExpansion> {
    JackEngine::shared().jack_m(lambda)
}

/// `J_λ` in the p-basis from the shared in-memory engine.
pub fn jack_p(lambda: &Partition) -> Result<JackExpansion> {
    JackEngine::shared().jack_p(lambda)
}

fn m_expansion(j: &JackExpansion) -> Result<SymFunc> {
    j.function.to_basis(Basis::Monomial)
}

/// (C1): `D_α J_λ = Ev_N(λ)·J_λ` exactly in `N` variables.
pub fn check_eigen(j: &JackExpansion, vars: usize) -> Result<Check> {
    let f = m_expansion(j)?;
    let ev = AlphaRational::from_poly(eigenvalue(&j.lambda, vars));
    let residual = apply_dalpha(&f, Some(vars))?.sub(&f.scale(&ev))?;
    Ok(Check::from_bool(
        format!("eigen J{} N={vars}", j.lambda),
        residual.is_zero(),
        || format!("residual {residual}"),
    ))
}

/// (C2): leading coefficient `hook_α(λ)`, all other support strictly dominated by `λ`.
pub fn check_triangular(j: &JackExpansion) -> Result<Check> {
    let f = m_expansion(j)?;
    let lead_ok = f.coeff(&j.lambda) == AlphaRational::from_poly(j.lambda.hook());
    let stray: Vec<&Partition> = f
        .terms()
        .keys()
        .filter(|nu| **nu != j.lambda && !nu.strictly_dominated_by(&j.lambda))
        .collect();
    Ok(Check::from_bool(
        format!("triangular J{}", j.lambda),
        lead_ok && stray.is_empty(),
        || {
            format!(
                "leading coefficient {} vs hook {}; undominated support {stray:?}",
                f.coeff(&j.lambda),
                j.lambda.hook()
            )
        },
    ))
}

/// Every m-coefficient lies in `ℕ[α]`.
pub fn check_positivity(j: &JackExpansion) -> Result<Check> {
    let f = m_expansion(j)?;
    let bad = f.terms().iter().find(|(_, c)| {
        c.as_polynomial()
            .is_none_or(|p| !p.has_integer_coeffs() || !p.has_nonnegative_coeffs())
    });
    Ok(Check::from_bool(
        format!("N[a] coefficients J{}", j.lambda),
        bad.is_none(),
        || {
            let (nu, c) = bad.expect("witness present on failure");
            format!("[m{nu}] = {c}")
        },
    ))
}

/// At `α = 1` every m-coefficient is an integer.
pub fn check_integral_at_one(j: &JackExpansion) -> Result<Check> {
    let f = m_expansion(j)?.eval_alpha(&Q::one())?;
    let bad = f
        .terms()
        .iter()
        .find(|(_, c)| c.as_polynomial().is_none_or(|p| !p.has_integer_coeffs()));
    Ok(Check::from_bool(
        format!("integral at a=1 J{}", j.lambda),
        bad.is_none(),
        || format!("{:?}", bad.expect("witness present on failure")),
    ))
}

/// At `α = 0`: `J_λ = (∏_i λ^t_i!)·e_{λ^t}`.
pub fn check_alpha0(j: &JackExpansion) -> Result<Check> {
    let lhs = m_expansion(j)?.eval_alpha(&Q::zero())?;
    let conj = j.lambda.conjugate();
    let factor: u64 = conj
        .parts()
        .iter()
        .map(|&c| (1..=u64::from(c)).product::<u64>())
        .product();
    let rhs = SymFunc::e(conj)
        .to_basis(Basis::Monomial)?
        .scale_q(&Q::from_integer(factor.into()));
    Ok(Check::from_bool(
        format!("a=0 specialization J{}", j.lambda),
        lhs == rhs,
        || format!("lhs {lhs}; rhs {rhs}"),
    ))
}

/// `⟨J_λ, J_λ⟩_α = hook_α(λ)·hook′_α(λ)`.
pub fn check_norm(j: &JackExpansion) -> Result<Check> {
    let lhs = j.function.scalar_product(&j.function)?;
    let rhs = AlphaRational::from_poly(j.lambda.hook().mul(&j.lambda.hook_prime()));
    Ok(Check::from_bool(
        format!("norm J{}", j.lambda),
        lhs == rhs,
        || format!("lhs {lhs}; rhs {rhs}"),
    ))
}

/// Two different linear extensions of dominance give the same expansion.
pub fn check_order_independence(lambda: &Partition) -> Result<Check> {
    let a = solve_jack_m(lambda, LinearExtension::LexDescending)?;
    let b = solve_jack_m(lambda, LinearExtension::ConjugateLexAscending)?;
    Ok(Check::from_bool(
        format!("order independence J{lambda}"),
        a == b,
        || format!("{a} vs {b}"),
    ))
}

/// Every defining and structural check for one `λ`, with (C1) at `|λ|` and `|λ|+1` variables.
pub fn check_all(engine: &JackEngine, lambda: &Partition, with_norm: bool) -> Result<Vec<Check>> {
    let j = engine.jack_m(lambda)?;
    let n = lambda.size() as usize;
    let mut checks = vec![
        check_eigen(&j, n.max(1))?,
        check_eigen(&j, n + 1)?,
        check_triangular(&j)?,
        check_positivity(&j)?,
        check_integral_at_one(&j)?,
        check_alpha0(&j)?,
    ];
    if with_norm {
        checks.push(check_norm(&j)?);
    }
    Ok(checks)
}
