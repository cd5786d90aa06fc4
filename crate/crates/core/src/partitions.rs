//! Complete partitions and the weights of completely partitioned weighted
//! geometric means.
//!
//! A tuple `(r_1, ..., r_p)` of positive integers is a complete partition of
//! `s` when it sums to `s` and every `q` in `1..=s` is the sum of some
//! sub-collection of the parts (each part used at most once).

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `s` accepted by [`enumerate_complete`].
pub const DEFAULT_ENUMERATION_BOUND: u64 = 30;

/// Subset sums of `parts` reachable in `0..=target`, as an achievability table.
fn achievable_sums(parts: &[u64], target: u64) -> Vec<bool> {
    let target = target as usize;
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for &r in parts {
        let r = r as usize;
        if r > target {
            continue;
        }
        // descending so each part is used at most once
        for q in (r..=target).rev() {
            if reachable[q - r] {
                reachable[q] = true;
            }
        }
    }
    reachable
}

/// Whether `parts` (in any order) is a complete partition of `s`.
pub fn is_complete(parts: &[u64], s: u64) -> Result<bool> {
    if s == 0 {
        return Err(Error::InvalidParameter { name: "s", reason: "must be at least 1".into() });
    }
    if parts.is_empty() {
        return Err(Error::Empty("a partition needs at least one part"));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidParameter { name: "parts", reason: "parts must be positive".into() });
    }
    let total: u64 = parts.iter().sum();
    if total != s {
        return Ok(false);
    }
    Ok(achievable_sums(parts, s).iter().all(|&b| b))
}

/// A validated complete partition. Part order is preserved as given, since
/// the `k`-th part is paired with the `k`-th argument of a weighted mean.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CompletePartition {
    parts: Vec<u64>,
    target: u64,
}

impl CompletePartition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let target: u64 = parts.iter().sum();
        if !is_complete(&parts, target.max(1))? {
            return Err(Error::IncompletePartition { parts, target });
        }
        Ok(Self { parts, target })
    }

    /// Validates `parts` against an explicitly stated target.
    pub fn with_target(parts: Vec<u64>, target: u64) -> Result<Self> {
        if !is_complete(&parts, target)? {
            return Err(Error::IncompletePartition { parts, target });
        }
        Ok(Self { parts, target })
    }

    /// `(1, ..., 1)`: the partition behind the plain geometric mean.
    pub fn ones(s: u64) -> Result<Self> {
        Self::new(vec![1; s as usize])
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts sorted nonincreasingly.
    pub fn canonical(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts, target: self.target }
    }

    /// `(r_1/s, ..., r_p/s)`.
    pub fn weights(&self) -> WeightVector {
        WeightVector {
            weights: self.parts.iter().map(|&r| Ratio::new(r, self.target)).collect(),
        }
    }

    /// Slot index for each of the `s` copies when argument `k` is repeated
    /// `r_k` times: `[0; r_1] ++ [1; r_2] ++ ...`.
    pub fn expanded_slots(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, &r)| std::iter::repeat_n(k, r as usize))
            .collect()
    }
}

impl<'de> Deserialize<'de> for CompletePartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u64>::deserialize(deserializer)?;
        CompletePartition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Weights `t_k ∈ (0, 1)` summing to exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<Ratio<u64>>,
}

impl WeightVector {
    pub fn new(weights: Vec<Ratio<u64>>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty("a weight vector needs at least one weight"));
        }
        let zero = Ratio::from_integer(0);
        let one = Ratio::from_integer(1);
        // a single weight of exactly 1 is the degenerate p = 1 case
        if weights.len() > 1 && weights.iter().any(|w| *w <= zero || *w >= one) {
            return Err(Error::InvalidParameter { name: "weights", reason: "each weight must lie in (0,1)".into() });
        }
        let total = weights.iter().fold(zero, |acc, w| acc + w);
        if total != one {
            return Err(Error::InvalidParameter { name: "weights", reason: format!("weights sum to {total}, not 1") });
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[Ratio<u64>] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.weights.iter().map(|w| *w.numer() as f64 / *w.denom() as f64).collect()
    }

    /// Least common denominator `s` and integer numerators `r_k` with `t_k = r_k/s`.
    pub fn integer_form(&self) -> (u64, Vec<u64>) {
        let s = self.weights.iter().fold(1u64, |l, w| num::integer::lcm(l, *w.denom()));
        let parts = self.weights.iter().map(|w| w.numer() * (s / w.denom())).collect();
        (s, parts)
    }
}

/// All complete partitions of `s` in nonincreasing canonical form, sorted
/// lexicographically. Rejects `s` above [`DEFAULT_ENUMERATION_BOUND`].
pub fn enumerate_complete(s: u64) -> Result<Vec<CompletePartition>> {
    enumerate_complete_bounded(s, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_complete_bounded(s: u64, bound: u64) -> Result<Vec<CompletePartition>> {
    if s == 0 {
        return Err(Error::InvalidParameter { name: "s", reason: "must be at least 1".into() });
    }
    if s > bound {
        return Err(Error::BoundExceeded { s, bound });
    }
    // Build parts in nondecreasing order; a prefix whose next part exceeds
    // 1 + (prefix sum) leaves that value unreachable for good, so such
    // branches are cut. Survivors are confirmed with the subset-sum table.
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    grow(s, 1, 0, &mut prefix, &mut out);
    let mut partitions: Vec<CompletePartition> = out
        .into_iter()
        .filter(|parts| is_complete(parts, s).unwrap_or(false))
        .map(|mut parts| {
            parts.reverse();
            CompletePartition { parts, target: s }
        })
        .collect();
    partitions.sort_by(|a, b| a.parts.cmp(&b.parts));
    Ok(partitions)
}

fn grow(s: u64, min_part: u64, sum: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if sum == s {
        out.push(prefix.clone());
        return;
    }
    let max_part = (sum + 1).min(s - sum);
    for r in min_part..=max_part {
        prefix.push(r);
        grow(s, r, sum + r, prefix, out);
        prefix.pop();
    }
}
