//! Partitions, skew shapes, standard tableau counts and the hook function
//! `h(ν/μ) = |ν/μ|! / dim(ν/μ)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without trailing zeros.
///
/// The total order is the canonical enumeration order: ascending weight, and
/// within one weight descending lexicographic order, so `(2) < (1,1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates `parts`; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::ParsePartition {
                text: fmt_parts(&parts),
                reason: format!("not weakly decreasing ({} < {})", w[0], w[1]),
            });
        }
        if parts.contains(&0) {
            return Err(Error::ParsePartition {
                text: fmt_parts(&parts),
                reason: "zero part before a positive part".into(),
            });
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split(',') {
            let tok = tok.trim();
            let v: i64 = tok.parse().map_err(|_| Error::ParsePartition {
                text: text.to_string(),
                reason: format!("{tok:?} is not an integer"),
            })?;
            if v < 0 {
                return Err(Error::ParsePartition {
                    text: text.to_string(),
                    reason: format!("negative part {v}"),
                });
            }
            parts.push(u32::try_from(v).map_err(|_| Error::ParsePartition {
                text: text.to_string(),
                reason: format!("part {v} too large"),
            })?);
        }
        Partition::new(parts).map_err(|e| match e {
            Error::ParsePartition { reason, .. } => Error::ParsePartition {
                text: text.to_string(),
                reason,
            },
            other => other,
        })
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), with implicit zero padding.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the diagram of `inner` fits inside `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Row-wise maximum: the smallest diagram containing both.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_sorted((0..n).map(|i| self.part(i).max(other.part(i))).collect())
    }

    /// Comma-separated text form; the empty partition renders as `0`.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            "0".to_string()
        } else {
            fmt_parts(&self.0)
        }
    }

    /// Rows whose last cell can be removed, leaving a partition.
    fn corner_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.part(i) > self.part(i + 1))
    }

    fn remove_from_row(&self, row: usize) -> Partition {
        let mut p = self.0.clone();
        p[row] -= 1;
        Partition::from_sorted(p)
    }

    /// Cells `(row, col)` (0-based) in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        Partition::from_sorted(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
                .collect(),
        )
    }
}

fn fmt_parts(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "({})", fmt_parts(&self.0))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.weight() - self.inner.weight()
    }
}

/// `dim(ν/μ)`: number of standard fillings of the skew diagram.
///
/// Peels removable corners of the outer shape, memoizing intermediate shapes.
pub fn count_standard_tableaux(shape: &SkewShape) -> BigUint {
    fn go(nu: &Partition, mu: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if nu == mu {
            return BigUint::one();
        }
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        let mut total = BigUint::default();
        for row in nu.corner_rows() {
            if nu.part(row) > mu.part(row) {
                total += go(&nu.remove_from_row(row), mu, memo);
            }
        }
        memo.insert(nu.clone(), total.clone());
        total
    }
    go(&shape.outer, &shape.inner, &mut HashMap::new())
}

/// `h(ν/μ) = |ν/μ|! / dim(ν/μ)`; equals 1 on the empty shape.
pub fn hook_h(shape: &SkewShape) -> BigRational {
    let fact: BigUint = (1..=shape.size() as u64).map(BigUint::from).product();
    BigRational::new(
        BigInt::from(fact),
        BigInt::from(count_standard_tableaux(shape)),
    )
}

/// All partitions with weight at most `weight` and at most `max_length` parts,
/// in canonical order.
pub fn partitions_up_to(weight: u32, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=weight {
        out.extend(partitions_of(w, max_length));
    }
    out
}

/// Partitions of exactly `weight` with at most `max_length` parts, descending lexicographic.
pub fn partitions_of(weight: u32, max_length: usize) -> Vec<Partition> {
    fn go(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            cur.push(p);
            go(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, weight, max_length, &mut Vec::new(), &mut out);
    out
}

/// Partitions `ρ` with `inner ⊆ ρ ⊆ outer`, in canonical order.
pub fn partitions_between(inner: &Partition, outer: &Partition) -> Vec<Partition> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    fn go(i: usize, inner: &Partition, outer: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        let hi = match i {
            0 => outer.part(0),
            _ => outer.part(i).min(cur[i - 1]),
        };
        for v in inner.part(i)..=hi {
            cur.push(v);
            go(i + 1, inner, outer, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, inner, outer, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions `ν ⊇ base` with `|ν| ≤ max_weight` and at most `max_length` parts.
pub fn partitions_containing(base: &Partition, max_weight: u32, max_length: usize) -> Vec<Partition> {
    partitions_up_to(max_weight, max_length)
        .into_iter()
        .filter(|p| p.contains(base))
        .collect()
}
