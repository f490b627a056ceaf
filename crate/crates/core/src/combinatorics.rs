//! Partitions, compositions and the counting functions built on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordered first by size, then in decreasing lexicographic order, so that for
/// a fixed `n` iteration over a sorted collection yields `(n), (n-1,1), ...,
/// (1^n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    /// Sorts the given positive parts decreasingly (zero parts are dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m[i]` is the number of parts equal to `i` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Rendering with parentheses, e.g. `(2,1)`; the empty partition is `()`.
    pub fn paren(&self) -> String {
        format!("({})", join(&self.0))
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&join(&self.0))
        }
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_parts(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// Half-open position ranges (0-based) of the blocks.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&a| {
                let r = start..start + a;
                start += a;
                r
            })
            .collect()
    }

    /// Generator indices `i` (1-based) with `i, i+1` in the same block.
    pub fn internal_generators(&self) -> Vec<usize> {
        self.blocks().into_iter().flat_map(|r| (r.start + 1)..r.end).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&join(&self.0))
        }
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_parts(s).map_err(|e| Error::InvalidComposition(e.to_string()))?)
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n`, first part decreasing, then recursively.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// `z_lambda = prod_i i^{m_i} m_i!`, the centralizer order of a permutation of
/// cycle type `lambda`.
pub fn z_factor(lambda: &Partition) -> u64 {
    lambda
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u64).pow(m as u32) * factorial(m))
        .product()
}

/// Number of 0-1 matrices with row sums `alpha` and column sums `mu`, by
/// exhaustive row-by-row enumeration.
pub fn zero_one_matrix_count(alpha: &Composition, mu: &Partition) -> Result<u64> {
    if alpha.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: alpha.size(),
            got: mu.size(),
        });
    }
    fn rows(alpha: &[usize], cols: &mut Vec<usize>) -> u64 {
        let Some((&r, rest)) = alpha.split_first() else {
            return u64::from(cols.iter().all(|&c| c == 0));
        };
        let remaining: usize = rest.iter().sum();
        let mut total = 0;
        choose(r, 0, cols, &mut |cols| {
            // prune: no column may need more ones than rows left
            if cols.iter().all(|&c| c <= rest.len()) && cols.iter().sum::<usize>() == remaining {
                total += rows(rest, cols);
            }
        });
        total
    }
    // picks `k` distinct columns starting at `from`, each with capacity left
    fn choose(k: usize, from: usize, cols: &mut Vec<usize>, f: &mut dyn FnMut(&mut Vec<usize>)) {
        if k == 0 {
            f(cols);
            return;
        }
        for j in from..cols.len() {
            if cols.len() - j < k {
                break;
            }
            if cols[j] > 0 {
                cols[j] -= 1;
                choose(k - 1, j + 1, cols, f);
                cols[j] += 1;
            }
        }
    }
    let mut cols = mu.parts().to_vec();
    Ok(rows(alpha.parts(), &mut cols))
}

/// Parts of both partitions merged and sorted decreasingly.
pub fn union_sorted(mu: &Partition, lambda: &Partition) -> Partition {
    let mut parts = mu.0.clone();
    parts.extend_from_slice(&lambda.0);
    Partition::from_unsorted(parts)
}

/// Number of standard Young tableaux of shape `lambda`, by removing the
/// largest entry from each corner in turn.
pub fn standard_tableaux_count(lambda: &Partition) -> u64 {
    fn rec(parts: &mut Vec<usize>) -> u64 {
        if parts.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
            if !is_corner {
                continue;
            }
            parts[i] -= 1;
            if parts[i] == 0 {
                parts.pop();
                total += rec(parts);
                parts.push(0);
            } else {
                total += rec(parts);
            }
            parts[i] += 1;
        }
        total
    }
    rec(&mut lambda.0.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    /// p(n) by the recurrence on largest part at most k, independent of the
    /// enumeration.
    fn partition_count(n: usize) -> usize {
        let mut t = vec![vec![0usize; n + 1]; n + 1];
        t[0].fill(1);
        for m in 1..=n {
            for k in 1..=n {
                t[m][k] = t[m][k - 1] + if k <= m { t[m - k][k] } else { 0 };
            }
        }
        t[n][n]
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        for n in 0..=10 {
            let ps = partitions_of(n);
            assert_eq!(ps.len(), partition_count(n));
            assert!(ps.windows(2).all(|w| w[0] < w[1]), "canonical order at n={n}");
        }
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions_of(1), vec![comp(&[1])]);
        assert_eq!(compositions_of(3).len(), 4);
        assert_eq!(compositions_of(6).len(), 32);
        assert_eq!(compositions_of(0), vec![Composition::default()]);
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(z_factor(&part(&[2, 1])), 2);
        assert_eq!(z_factor(&part(&[1, 1, 1])), 6);
        assert_eq!(z_factor(&part(&[3, 3, 2])), 36);
        assert_eq!(z_factor(&Partition::empty()), 1);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=8 {
            let total: u64 = partitions_of(n).iter().map(|l| factorial(n) / z_factor(l)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn zero_one_matrix_examples() {
        assert_eq!(zero_one_matrix_count(&comp(&[1, 1]), &part(&[1, 1])), Ok(2));
        assert_eq!(zero_one_matrix_count(&comp(&[2]), &part(&[2])), Ok(0));
        assert_eq!(zero_one_matrix_count(&comp(&[1, 1]), &part(&[2])), Ok(1));
        assert!(matches!(
            zero_one_matrix_count(&comp(&[1, 1]), &part(&[3])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn zero_one_matrix_row_permutation_invariance() {
        for n in 1..=6 {
            for alpha in compositions_of(n) {
                let sorted = alpha.sorted().as_composition();
                for mu in partitions_of(n) {
                    assert_eq!(
                        zero_one_matrix_count(&alpha, &mu).unwrap(),
                        zero_one_matrix_count(&sorted, &mu).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn union_examples() {
        assert_eq!(union_sorted(&part(&[2, 1]), &part(&[3])), part(&[3, 2, 1]));
        assert_eq!(union_sorted(&part(&[4, 1]), &Partition::empty()), part(&[4, 1]));
        assert_eq!(union_sorted(&part(&[2, 2]), &part(&[2, 1])), part(&[2, 2, 2, 1]));
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(standard_tableaux_count(&part(&[5])), 1);
        assert_eq!(standard_tableaux_count(&part(&[2, 1])), 2);
        assert_eq!(standard_tableaux_count(&part(&[2, 2])), 2);
        for n in 0..=8 {
            let s: u64 = partitions_of(n).iter().map(|l| standard_tableaux_count(l).pow(2)).sum();
            assert_eq!(s, factorial(n), "RSK at n={n}");
        }
    }

    #[test]
    fn partition_parsing_and_rendering() {
        assert_eq!("2,1,1".parse::<Partition>().unwrap().to_string(), "2,1,1");
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(part(&[2, 1]).paren(), "(2,1)");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }
}
