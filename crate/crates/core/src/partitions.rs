//! Integer partitions: the shared currency for cycle types, irreducible
//! labels and ramification profiles.
//!
//! Parts are always stored weakly decreasing; every constructor normalizes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{binomial, factorial};
use crate::error::{Error, Result};

/// Default cap on `d` for [`generate_partitions`]; p(40) = 37338.
pub const DEFAULT_MAX_DEGREE: u32 = 40;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    /// Caller guarantees positive, weakly decreasing parts.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The cycle type of the identity in S_d, (1^d).
    pub fn ones(d: u32) -> Self {
        Partition::from_sorted(vec![1; d as usize])
    }

    /// The one-row partition (d); empty when d = 0.
    pub fn row(d: u32) -> Self {
        if d == 0 {
            Partition::empty()
        } else {
            Partition::from_sorted(vec![d])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when every part is 1, i.e. the identity cycle type.
    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// (part, multiplicity) pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// Young-diagram containment: `other_i <= self_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Multiset inclusion of parts.
    pub fn is_submultiset_of(&self, other: &Partition) -> bool {
        self.multiplicities()
            .into_iter()
            .all(|(p, m)| other.multiplicity(p) >= m)
    }

    /// Removes the parts of `sub` from `self` as multisets.
    pub fn multiset_difference(&self, sub: &Partition) -> Result<Partition> {
        let mut rest = self.parts.clone();
        for &p in &sub.parts {
            let pos = rest
                .iter()
                .position(|&q| q == p)
                .ok_or_else(|| Error::domain(format!("{sub} is not a sub-multiset of {self}")))?;
            rest.remove(pos);
        }
        Ok(Partition::from_sorted(rest))
    }

    /// All distinct sub-multisets of the parts with the given weight.
    pub fn submultisets_of_weight(&self, weight: u32) -> Vec<Partition> {
        fn rec(groups: &[(u32, u32)], left: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            let Some((&(part, mult), rest)) = groups.split_first() else {
                if left == 0 {
                    out.push(Partition::from_sorted(acc.clone()));
                }
                return;
            };
            let max_take = mult.min(left / part);
            for take in (0..=max_take).rev() {
                let before = acc.len();
                acc.extend(std::iter::repeat_n(part, take as usize));
                rec(rest, left - take * part, acc, out);
                acc.truncate(before);
            }
        }
        let mut out = Vec::new();
        rec(&self.multiplicities(), weight, &mut Vec::new(), &mut out);
        out
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
            .collect();
        Partition::from_sorted(parts)
    }

    /// z_λ = Π_k k^{γ_k} γ_k!, the order of the centralizer of a permutation
    /// of cycle type λ.
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities().into_iter().fold(BigUint::one(), |acc, (k, m)| {
            acc * BigUint::from(k).pow(m) * factorial(m)
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1,1"`; surrounding brackets or parentheses and whitespace are
    /// tolerated, and the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `d` in reverse-lexicographic order, capped at
/// [`DEFAULT_MAX_DEGREE`].
pub fn generate_partitions(d: u32) -> Result<Vec<Partition>> {
    generate_partitions_bounded(d, DEFAULT_MAX_DEGREE)
}

pub fn generate_partitions_bounded(d: u32, max_degree: u32) -> Result<Vec<Partition>> {
    if d > max_degree {
        return Err(Error::size_limit("partition degree", d, max_degree));
    }
    fn rec(left: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::from_sorted(acc.clone()));
            return;
        }
        for p in (1..=left.min(max_part)).rev() {
            acc.push(p);
            rec(left - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Number of permutations in S_d with cycle type λ: d!/z_λ.
pub fn class_size(lambda: &Partition) -> BigUint {
    factorial(lambda.weight()) / lambda.centralizer_order()
}

/// Π_k γ_k!, the number of permutations of equal parts.
pub fn automorphism_count(alpha: &Partition) -> BigUint {
    alpha
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (_, m)| acc * factorial(m))
}

/// Ways to pick which labelled copies of each part of α go to β:
/// Π_k C(γ_k(α), γ_k(β)).
pub fn labelled_split_count(alpha: &Partition, beta: &Partition) -> Result<BigUint> {
    if !beta.is_submultiset_of(alpha) {
        return Err(Error::domain(format!("{beta} is not a sub-multiset of {alpha}")));
    }
    Ok(beta.multiplicities().into_iter().fold(BigUint::one(), |acc, (k, m)| {
        acc * binomial(alpha.multiplicity(k) as u64, m as u64)
    }))
}
