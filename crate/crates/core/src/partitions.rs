//! Integer partitions: the index objects for every other module.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. The
//! empty partition is a regular value (size 0, length 0). Partitions print and
//! parse as comma-separated parts, `"7,4,2"`, with the empty string standing
//! for the empty partition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact non-negative count (table counts, Kostka numbers, Kronecker coefficients, ...).
pub type Count = BigUint;
/// Exact signed value (character values, inverse Kostka entries).
pub type SignedCount = BigInt;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts an arbitrary composition into a partition, discarding zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// `(k^r)`: `r` parts equal to `k`.
    pub fn rectangle(k: usize, r: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![k; r])
    }

    /// The hook `(a, 1^b)`.
    pub fn hook(a: usize, b: usize) -> Self {
        assert!(a >= 1, "hook arm must be positive");
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b));
        Self::from_sorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.size
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Dominance order `self ⊴ other`. Both partitions must have the same size.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }

    /// Whether the Young diagram of `self` fits inside that of `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Multiplicities `m_k` of each part size `k ≥ 1`, indexed by `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Centralizer order `z_λ = ∏ k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> Count {
        let mut z = Count::one();
        for (k, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for i in 1..=m {
                z *= k * i;
            }
        }
        z
    }

    /// Number of permutations of `S_n` with this cycle type, `n!/z_λ`.
    pub fn class_size(&self) -> Count {
        factorial(self.size) / self.centralizer_order()
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.pad(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("({self})"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "∅" {
            return Ok(Self::empty());
        }
        let s = s.trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("{t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse { input: s.to_string(), reason: "zero part".into() });
        }
        Self::new(parts).map_err(|e| Error::Parse { input: s.to_string(), reason: e.to_string() })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Conjugate partition: `µ_j = #{i : λ_i ≥ j}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// `λ ⊴ µ`: every prefix sum of `λ` is at most the matching prefix sum of `µ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::sizes("dominance order compares partitions of one size", &[lambda.size(), mu.size()]));
    }
    let (mut a, mut b) = (0, 0);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.part(i);
        b += mu.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n` with at most `max_length` parts and parts at most
/// `max_part`, in reverse lexicographic order (`(n)` first, `(1^n)` last).
pub fn generate_partitions(n: usize, max_length: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let max_len = max_length.unwrap_or(usize::MAX);
    let max_part = max_part.unwrap_or(n).min(n);
    fill(n, max_part, max_len, &mut cur, &mut out);
    out
}

fn fill(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    if slots == 0 || cap == 0 {
        return;
    }
    // the remaining parts must fit in `slots` parts of size ≤ p
    for p in (1..=cap.min(rest)).rev() {
        if p.saturating_mul(slots) < rest {
            break;
        }
        cur.push(p);
        fill(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// All partitions of sizes `0..=n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Vec<Partition>> {
    (0..=n).map(|k| generate_partitions(k, None, None)).collect()
}

pub fn factorial(n: usize) -> Count {
    (1..=n).fold(Count::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Table `p(0), …, p(n)` from Euler's pentagonal recurrence.
pub fn partition_numbers(n: usize) -> Vec<Count> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::one());
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[m - g1].clone();
            if g2 <= m {
                term += &p[m - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter().map(|v| v.to_biguint().expect("p(n) is non-negative")).collect()
}

/// `p(n)`, the number of partitions of `n`.
pub fn count_partitions(n: usize) -> Count {
    partition_numbers(n).pop().expect("table is non-empty")
}

/// Table `p₂(0), …, p₂(n)`: coefficients of `∏_{k≥1} (1−q^k)^{−k}`.
///
/// Taking the logarithmic derivative of the product gives
/// `m·p₂(m) = Σ_{k=1}^{m} σ₂(k)·p₂(m−k)` with `σ₂(k) = Σ_{d|k} d²`; every
/// division below is exact.
pub fn plane_partition_numbers(n: usize) -> Vec<Count> {
    let mut sigma2 = vec![0u64; n + 1];
    for d in 1..=n {
        let sq = (d as u64) * (d as u64);
        for k in (d..=n).step_by(d) {
            sigma2[k] += sq;
        }
    }
    let mut p2: Vec<Count> = Vec::with_capacity(n + 1);
    p2.push(Count::one());
    for m in 1..=n {
        let mut acc = Count::zero();
        for k in 1..=m {
            acc += &p2[m - k] * sigma2[k];
        }
        let (q, r) = num_integer::Integer::div_rem(&acc, &Count::from(m));
        assert!(r.is_zero(), "plane partition recurrence must divide exactly");
        p2.push(q);
    }
    p2
}

/// `p₂(n)`, the number of plane partitions of `n`.
pub fn count_plane_partitions(n: usize) -> Count {
    plane_partition_numbers(n).pop().expect("table is non-empty")
}

/// Staircase `ρ_ℓ = (ℓ, ℓ−1, …, 1)`.
pub fn staircase(l: usize) -> Result<Partition> {
    if l == 0 {
        return Err(Error::InvalidArgument("staircase length must be at least 1".into()));
    }
    Ok(Partition::from_sorted((1..=l).rev().collect()))
}

/// `α[n] = (n − |α|, α₁, α₂, …)`, defined for `n ≥ |α| + α₁`.
pub fn pad_first_row(alpha: &Partition, n: usize) -> Result<Partition> {
    if n < alpha.size() + alpha.first() {
        return Err(Error::InvalidArgument(format!(
            "padding ({alpha}) to size {n} needs n ≥ |α| + α₁ = {}",
            alpha.size() + alpha.first()
        )));
    }
    let mut parts = Vec::with_capacity(alpha.len() + 1);
    parts.push(n - alpha.size());
    parts.extend_from_slice(alpha.parts());
    Partition::new(parts)
}

/// Componentwise sum `λ + µ`.
pub fn add_partitions(lambda: &Partition, mu: &Partition) -> Partition {
    let parts = (0..lambda.len().max(mu.len())).map(|i| lambda.part(i) + mu.part(i)).collect();
    Partition::from_sorted(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p("3,1")), p("2,1,1"));
        assert_eq!(conjugate(&p("")), p(""));
        assert_eq!(conjugate(&p("7,4,2")), p("3,3,2,2,1,1,1"));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("2,2"), &p("3,1")).unwrap());
        assert!(!dominance_leq(&p("3,1"), &p("2,2")).unwrap());
        assert!(dominance_leq(&p("1,1,1,1"), &p("4")).unwrap());
        assert!(matches!(dominance_leq(&p("2"), &p("3")), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn generation_examples() {
        assert_eq!(generate_partitions(4, None, None).len(), 5);
        assert_eq!(generate_partitions(5, Some(2), None), vec![p("5"), p("4,1"), p("3,2")]);
        assert_eq!(generate_partitions(0, None, None), vec![Partition::empty()]);
        assert_eq!(generate_partitions(6, None, Some(2)).len(), 4);
        let all = generate_partitions(6, None, None);
        assert!(all.windows(2).all(|w| w[0] > w[1]), "reverse lexicographic");
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions(5), Count::from(7u32));
        assert_eq!(count_partitions(0), Count::one());
        assert_eq!(count_partitions(100).to_string(), "190569292");
    }

    #[test]
    fn plane_partition_counts() {
        assert_eq!(count_plane_partitions(3), Count::from(6u32));
        assert_eq!(count_plane_partitions(0), Count::one());
        let small: Vec<String> = plane_partition_numbers(10).iter().map(|c| c.to_string()).collect();
        assert_eq!(small, ["1", "1", "3", "6", "13", "24", "48", "86", "160", "282", "500"]);
    }

    #[test]
    fn staircase_and_padding() {
        assert_eq!(staircase(3).unwrap(), p("3,2,1"));
        assert_eq!(staircase(1).unwrap(), p("1"));
        assert_eq!(staircase(4).unwrap().size(), 10);
        assert!(staircase(0).is_err());
        assert_eq!(pad_first_row(&p("2,1"), 7).unwrap(), p("4,2,1"));
        assert_eq!(pad_first_row(&p(""), 5).unwrap(), p("5"));
        assert_eq!(pad_first_row(&p("3"), 6).unwrap(), p("3,3"));
        let err = pad_first_row(&p("3"), 5).unwrap_err();
        assert!(err.to_string().contains("n ≥ |α| + α₁ = 6"));
    }

    #[test]
    fn addition() {
        assert_eq!(add_partitions(&p("3,1"), &p("2,2")), p("5,3"));
        assert_eq!(add_partitions(&p("2,1"), &p("")), p("2,1"));
        assert_eq!(add_partitions(&p("7,4,2"), &p("7,4,2")), p("14,8,4"));
    }

    #[test]
    fn parsing() {
        assert_eq!(p(" 7, 4,2 ").parts(), &[7, 4, 2]);
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(p("7,4,2").to_string(), "7,4,2");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=8 {
            let total: Count = generate_partitions(n, None, None).iter().map(|l| l.class_size()).sum();
            assert_eq!(total, factorial(n));
        }
    }
}
