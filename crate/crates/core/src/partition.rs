//! Integer partitions and the statistics the rest of the crate is built on.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts.
//! Diagram boxes are addressed `(column, row)`, 1-based, French convention:
//! row 1 is the bottom (longest) row.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::AlphaPolynomial;
use crate::error::{Error, Result};

/// Default resource guard for [`partitions_of`].
pub const DEFAULT_PARTITION_BOUND: u32 = 12;

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is graded: first by size, then lexicographically on the parts.
/// This is the order used for rendering sparse expansions.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, sorting the parts and dropping zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Builds a partition from parts that must already be positive and weakly decreasing.
    pub fn from_parts(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}: zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-column partition `1^k`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Entry-wise sum `λ ⊕ μ`.
    pub fn oplus(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (1..=n).map(|i| self.part(i) + other.part(i)).collect();
        Partition(parts)
    }

    /// Multiset merge `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    parts.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    parts.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Partition(parts)
    }

    /// `m_i(λ)`: number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Multiplicities of the distinct parts, in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Dominance comparison `self ≤ other`; both must have the same size.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(self.dominated_by(other))
    }

    /// Dominance comparison without the size check (callers guarantee equal sizes).
    pub(crate) fn dominated_by(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut s, mut t) = (0u32, 0u32);
        for i in 1..=n {
            s += self.part(i);
            t += other.part(i);
            if s > t {
                return false;
            }
        }
        true
    }

    /// Strict dominance `self < other`.
    pub(crate) fn strictly_dominated_by(&self, other: &Partition) -> bool {
        self != other && self.dominated_by(other)
    }

    /// Arm and leg length of box `(column, row)`.
    pub fn arm_leg(&self, column: u32, row: u32) -> Result<(u32, u32)> {
        if row == 0 || column == 0 || row as usize > self.len() || column > self.part(row as usize)
        {
            return Err(Error::BoxOutsideDiagram {
                column,
                row,
                partition: self.to_string(),
            });
        }
        let arm = self.part(row as usize) - column;
        let leg = self.0.iter().filter(|&&p| p >= column).count() as u32 - row;
        Ok((arm, leg))
    }

    /// Every box of the diagram as `(column, row, arm, leg)`.
    pub fn boxes(&self) -> Vec<(u32, u32, u32, u32)> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (r, &len) in self.0.iter().enumerate() {
            let row = r as u32 + 1;
            for column in 1..=len {
                out.push((column, row, len - column, conj.part(column as usize) - row));
            }
        }
        out
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> u64 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| (i as u64).pow(m as u32) * factorial(m as u64))
            .product()
    }

    /// `b(λ) = Σ C(λ_i, 2)`.
    pub fn b(&self) -> u64 {
        self.0
            .iter()
            .map(|&p| (p as u64) * (p as u64).saturating_sub(1) / 2)
            .sum()
    }

    /// `∏_i m_i(λ^t)!`, the factor relating `hook'` and `hook''`.
    pub fn column_multiplicity_factorial(&self) -> u64 {
        self.conjugate()
            .multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m as u64))
            .product()
    }

    /// `hook_α(λ) = ∏ (α a + ℓ + 1)`.
    pub fn hook(&self) -> AlphaPolynomial {
        self.boxes()
            .into_iter()
            .fold(AlphaPolynomial::one(), |acc, (_, _, a, l)| {
                acc.mul(&AlphaPolynomial::linear(l as i64 + 1, a as i64))
            })
    }

    /// `hook'_α(λ) = ∏ (α a + ℓ + α)`.
    pub fn hook_prime(&self) -> AlphaPolynomial {
        self.boxes()
            .into_iter()
            .fold(AlphaPolynomial::one(), |acc, (_, _, a, l)| {
                acc.mul(&AlphaPolynomial::linear(l as i64, a as i64 + 1))
            })
    }

    /// `hook''_α(λ)`: the `hook'` product restricted to boxes with non-zero leg.
    pub fn hook_dprime(&self) -> AlphaPolynomial {
        self.boxes()
            .into_iter()
            .filter(|&(_, _, _, l)| l != 0)
            .fold(AlphaPolynomial::one(), |acc, (_, _, a, l)| {
                acc.mul(&AlphaPolynomial::linear(l as i64, a as i64 + 1))
            })
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Graded reverse-lexicographic comparison: smaller size first, then larger parts first.
pub fn grevlex_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `λ^I = ⊕_{i∈I} λ^i` for an index set given as 0-based positions.
pub fn oplus_subset(parts: &[Partition], subset: &[usize]) -> Result<Partition> {
    subset.iter().try_fold(Partition::empty(), |acc, &i| {
        parts
            .get(i)
            .map(|p| acc.oplus(p))
            .ok_or(Error::IndexOutOfRange {
                index: i,
                len: parts.len(),
            })
    })
}

/// `λ^I` with the index set given as a bitmask over positions.
pub fn oplus_mask(parts: &[Partition], mask: u32) -> Partition {
    parts
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .fold(Partition::empty(), |acc, (_, p)| acc.oplus(p))
}

/// All partitions of `n`, largest-first (graded reverse-lexicographic order).
pub fn partitions_of(n: u32) -> Result<Vec<Partition>> {
    partitions_of_bounded(n, DEFAULT_PARTITION_BOUND)
}

pub fn partitions_of_bounded(n: u32, bound: u32) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "partition size",
            value: n as usize,
            bound: bound as usize,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(rest: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

/// All partitions of size `1..=max` (or `0..=max` when `include_empty`).
pub fn partitions_up_to(max: u32, include_empty: bool) -> Result<Vec<Partition>> {
    let start = if include_empty { 0 } else { 1 };
    let mut out = Vec::new();
    for n in start..=max {
        out.extend(partitions_of_bounded(n, max.max(DEFAULT_PARTITION_BOUND))?);
    }
    Ok(out)
}

impl fmt::Display for Partition {
    /// Comma-separated parts; `-` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse(String::from(
                "empty partition string (use \"-\")",
            )));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::from_parts(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::from_parts(parts)
    }
}

/// Shorthand used throughout tests and examples: `part![3, 1, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partition::Partition::from_parts(vec![$($x),+]).expect("valid partition literal")
    };
}
