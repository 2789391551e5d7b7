//! Set partitions of `[r] = {1..r}`: enumeration, refinement order, join, rank and the
//! Möbius value to the top element.
//!
//! Blocks are stored as bitmasks (bit `i − 1` stands for element `i`), sorted by their
//! minimum element, which makes the representation canonical.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set accepted by [`SetPartition::enumerate`].
pub const MAX_GROUND_SET: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    r: usize,
    blocks: Vec<u32>,
}

impl SetPartition {
    /// Builds a set partition of `[r]` from blocks of 1-based elements.
    pub fn new(r: usize, blocks: &[&[usize]]) -> Result<Self> {
        let masks = blocks
            .iter()
            .map(|b| {
                b.iter().try_fold(0u32, |m, &e| {
                    if e == 0 || e > r {
                        Err(Error::InvalidSubset(format!("element {e} not in [{r}]")))
                    } else if m & (1 << (e - 1)) != 0 {
                        Err(Error::InvalidSubset(format!("element {e} repeated")))
                    } else {
                        Ok(m | (1 << (e - 1)))
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(r, masks)
    }

    /// Builds a set partition from bitmask blocks, validating and canonicalizing.
    pub fn from_masks(r: usize, mut blocks: Vec<u32>) -> Result<Self> {
        if r > 31 {
            return Err(Error::BoundExceeded {
                what: "ground set size",
                value: r,
                bound: 31,
            });
        }
        let full = full_mask(r);
        let mut seen = 0u32;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::InvalidSubset(String::from("empty block")));
            }
            if b & !full != 0 || b & seen != 0 {
                return Err(Error::InvalidSubset(format!(
                    "block {} overlaps or leaves [{r}]",
                    mask_string(b)
                )));
            }
            seen |= b;
        }
        if seen != full {
            return Err(Error::InvalidSubset(format!("blocks do not cover [{r}]")));
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(SetPartition { r, blocks })
    }

    /// The partition into singletons (minimum of the refinement order).
    pub fn singletons(r: usize) -> Self {
        SetPartition {
            r,
            blocks: (0..r).map(|i| 1 << i).collect(),
        }
    }

    /// The one-block partition `{[r]}` (maximum of the refinement order).
    pub fn top(r: usize) -> Self {
        let blocks = if r == 0 {
            Vec::new()
        } else {
            vec![full_mask(r)]
        };
        SetPartition { r, blocks }
    }

    /// All set partitions of `[r]`, each once, in a fixed deterministic order.
    pub fn enumerate(r: usize) -> Result<Vec<SetPartition>> {
        if r > MAX_GROUND_SET {
            return Err(Error::BoundExceeded {
                what: "ground set size",
                value: r,
                bound: MAX_GROUND_SET,
            });
        }
        Ok(partitions_of_mask(full_mask(r))
            .into_iter()
            .map(|blocks| SetPartition { r, blocks })
            .collect())
    }

    pub fn ground_size(&self) -> usize {
        self.r
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    /// `#(π)`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `rk(π) = r − #(π)`.
    pub fn rank(&self) -> usize {
        self.r - self.blocks.len()
    }

    fn check_same_ground(&self, other: &Self) -> Result<()> {
        if self.r != other.r {
            return Err(Error::GroundSetMismatch {
                left: self.r,
                right: other.r,
            });
        }
        Ok(())
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_same_ground(other)?;
        Ok(self
            .blocks
            .iter()
            .all(|&b| other.blocks.iter().any(|&c| b & !c == 0)))
    }

    /// The finest common coarsening.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        let mut merged: Vec<u32> = Vec::new();
        for &b in self.blocks.iter().chain(&other.blocks) {
            let mut acc = b;
            // Absorbing a block can create overlaps with blocks already passed; repeat until stable.
            loop {
                let before = acc;
                merged.retain(|&m| {
                    if m & acc != 0 {
                        acc |= m;
                        false
                    } else {
                        true
                    }
                });
                if acc == before {
                    break;
                }
            }
            merged.push(acc);
        }
        Self::from_masks(self.r, merged)
    }

    /// `μ(π, {[r]}) = (−1)^{#π−1} (#π−1)!`.
    pub fn mobius_to_top(&self) -> i64 {
        mobius_to_top(self.blocks.len())
    }
}

/// `(−1)^{k−1} (k−1)!` for a set partition with `k ≥ 1` blocks.
pub fn mobius_to_top(k: usize) -> i64 {
    let f: i64 = (1..k as i64).product();
    if k % 2 == 1 {
        f
    } else {
        -f
    }
}

pub fn full_mask(r: usize) -> u32 {
    if r == 0 {
        0
    } else {
        u32::MAX >> (32 - r)
    }
}

/// All set partitions of the elements of `mask`, blocks as sub-masks sorted by minimum.
///
/// The empty mask has exactly one set partition, the empty one.
pub fn partitions_of_mask(mask: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec_partitions(mask, &mut current, &mut out);
    out
}

fn rec_partitions(rest: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    let low = rest & rest.wrapping_neg();
    let others = rest & !low;
    // The block containing the smallest remaining element: `low` plus any subset of `others`,
    // enumerated in increasing order of the chosen sub-mask.
    let mut sub = 0u32;
    loop {
        current.push(low | sub);
        rec_partitions(others & !sub, current, out);
        current.pop();
        if sub == others {
            break;
        }
        sub = (sub.wrapping_sub(others)) & others;
    }
}

/// Elements of a mask as 1-based integers.
pub fn mask_elements(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}

/// `{1,3}`-style rendering of a subset.
pub fn mask_string(mask: u32) -> String {
    let items: Vec<String> = mask_elements(mask)
        .iter()
        .map(ToString::to_string)
        .collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|&b| mask_string(b)).collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
