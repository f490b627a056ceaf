//! The symmetric group `S_n` in one-line notation.
//!
//! Composition is as functions, `(u w)(i) = u(w(i))`; `s_i = (i, i+1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}`, stored 0-based. The derived order is the
/// lexicographic order of one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n as u8).collect())
    }

    /// From 1-based one-line images.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("n = {n} is too large")));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..{n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Self(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// The simple transposition `s_i`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a generator of S_{n}");
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 1-based image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Self(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut r = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            r[x as usize] = i as u8;
        }
        Self(r)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self * s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.0.swap(i - 1, i);
        p
    }

    /// `s_i * self`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let (a, b) = ((i - 1) as u8, i as u8);
        Self(
            self.0
                .iter()
                .map(|&x| {
                    if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        )
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `l(s_i w) < l(w)`: the value `i+1` sits to the left of `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.0.iter().position(|&x| x == v).unwrap();
        pos(i as u8) < pos((i - 1) as u8)
    }

    /// A reduced word `[i_1, ..., i_r]` with `w = s_{i_1} ... s_{i_r}`,
    /// obtained by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            rev.push(i);
            w = w.mul_simple_right(i);
        }
        rev.reverse();
        rev
    }

    /// Product of simple transpositions in `S_n` in the given order.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(n), |w, &i| w.mul_simple_right(i))
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// Whether `self` maps each block of positions of `alpha` to itself.
    pub fn in_young_subgroup(&self, alpha: &Composition) -> bool {
        alpha
            .blocks()
            .iter()
            .all(|r| r.clone().all(|i| r.contains(&(self.0[i] as usize))))
    }

    /// Concatenation `u_1 x u_2 x ...` as an element of the Young subgroup.
    pub fn concat(blocks: &[Permutation]) -> Self {
        let mut images = Vec::new();
        let mut off = 0u8;
        for b in blocks {
            images.extend(b.0.iter().map(|&x| x + off));
            off += b.n() as u8;
        }
        Self(images)
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == used.len() {
                out.push(Permutation(cur.clone()));
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    cur.push(x as u8);
                    rec(cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(&images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Self::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// The block-cycle `(1, ..., l_1)(l_1 + 1, ..., l_1 + l_2)...`, a minimal
/// length element of the class of cycle type `lambda`.
pub fn w_min(lambda: &Partition) -> Permutation {
    let n = lambda.size();
    let mut images = vec![0u8; n];
    let mut start = 0;
    for &p in lambda.parts() {
        for k in 0..p {
            images[start + k] = (start + (k + 1) % p) as u8;
        }
        start += p;
    }
    Permutation(images)
}

/// The longest element of the Young subgroup `S_alpha`: reverses each block.
pub fn longest_in_young(alpha: &Composition) -> Permutation {
    let mut images = Vec::with_capacity(alpha.size());
    for r in alpha.blocks() {
        images.extend(r.rev().map(|x| x as u8));
    }
    Permutation(images)
}

/// Minimal length representatives of the left cosets `w S_alpha`: those `w`
/// increasing on every block of positions. Sorted by one-line notation.
pub fn min_coset_reps(alpha: &Composition) -> Vec<Permutation> {
    let n = alpha.size();
    // assign to each block an increasing set of values
    fn rec(blocks: &[usize], free: &mut Vec<bool>, cur: &mut Vec<u8>, out: &mut Vec<Permutation>) {
        let Some((&b, rest)) = blocks.split_first() else {
            out.push(Permutation(cur.clone()));
            return;
        };
        pick(b, 0, rest, free, cur, out);
    }
    fn pick(
        k: usize,
        from: usize,
        rest: &[usize],
        free: &mut Vec<bool>,
        cur: &mut Vec<u8>,
        out: &mut Vec<Permutation>,
    ) {
        if k == 0 {
            rec(rest, free, cur, out);
            return;
        }
        for x in from..free.len() {
            if free[x] {
                free[x] = false;
                cur.push(x as u8);
                pick(k - 1, x + 1, rest, free, cur, out);
                cur.pop();
                free[x] = true;
            }
        }
    }
    let mut out = Vec::new();
    rec(alpha.parts(), &mut vec![true; n], &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn length_and_words() {
        let e = Permutation::identity(3);
        assert_eq!(e.length(), 0);
        assert!(e.reduced_word().is_empty());
        let s = Permutation::simple(2, 1);
        assert_eq!((s.length(), s.reduced_word()), (1, vec![1]));
        let w0 = perm("3 2 1");
        assert_eq!((w0.length(), w0.reduced_word()), (3, vec![1, 2, 1]));
    }

    #[test]
    fn reduced_words_multiply_back() {
        for n in 0..=5 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(n, &word), w);
                for i in 1..n {
                    let ws = w.mul_simple_right(i);
                    assert_eq!(ws.length().abs_diff(w.length()), 1);
                    assert_eq!(w.has_right_descent(i), ws.length() < w.length());
                    let sw = w.mul_simple_left(i);
                    assert_eq!(w.has_left_descent(i), sw.length() < w.length());
                    assert_eq!(sw, Permutation::simple(n, i).compose(&w));
                    assert_eq!(ws, w.compose(&Permutation::simple(n, i)));
                }
            }
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(3).cycle_type(), part(&[1, 1, 1]));
        assert_eq!(Permutation::simple(3, 1).cycle_type(), part(&[2, 1]));
        assert_eq!(perm("2 3 1").cycle_type(), part(&[3]));
    }

    #[test]
    fn w_min_examples() {
        assert!(w_min(&part(&[1, 1, 1])).is_identity());
        assert_eq!(w_min(&part(&[2, 1])), Permutation::simple(3, 1));
        let c = w_min(&part(&[3]));
        assert_eq!((c.one_line(), c.length()), (vec![2, 3, 1], 2));
    }

    #[test]
    fn w_min_has_minimal_length_in_class() {
        for n in 0..=5 {
            let all = Permutation::all(n);
            for lambda in crate::combinatorics::partitions_of(n) {
                let w = w_min(&lambda);
                assert_eq!(w.cycle_type(), lambda);
                assert_eq!(w.length(), n - lambda.len());
                let min = all
                    .iter()
                    .filter(|x| x.cycle_type() == lambda)
                    .map(|x| x.length())
                    .min()
                    .unwrap();
                assert_eq!(min, w.length());
            }
        }
    }

    #[test]
    fn longest_in_young_examples() {
        assert!(longest_in_young(&comp(&[1, 1, 1])).is_identity());
        assert_eq!(longest_in_young(&comp(&[2])), Permutation::simple(2, 1));
        let w = longest_in_young(&comp(&[3, 1]));
        assert_eq!((w.one_line(), w.length()), (vec![3, 2, 1, 4], 3));
    }

    #[test]
    fn coset_rep_examples() {
        assert_eq!(min_coset_reps(&comp(&[4])), vec![Permutation::identity(4)]);
        assert_eq!(
            min_coset_reps(&comp(&[1, 1])),
            vec![Permutation::identity(2), Permutation::simple(2, 1)]
        );
        let d = min_coset_reps(&comp(&[2, 1]));
        let mut lens: Vec<usize> = d.iter().map(|w| w.length()).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 2]);
    }

    #[test]
    fn unique_coset_factorization() {
        for n in 1..=5 {
            let all = Permutation::all(n);
            for alpha in crate::combinatorics::compositions_of(n) {
                let reps = min_coset_reps(&alpha);
                let sub: Vec<_> = all.iter().filter(|u| u.in_young_subgroup(&alpha)).collect();
                assert_eq!(reps.len() * sub.len(), all.len());
                for w in &all {
                    let factorizations: Vec<_> = reps
                        .iter()
                        .filter_map(|d| {
                            let u = d.inverse().compose(w);
                            u.in_young_subgroup(&alpha).then_some((d, u))
                        })
                        .collect();
                    assert_eq!(factorizations.len(), 1);
                    let (d, u) = &factorizations[0];
                    assert_eq!(w.length(), d.length() + u.length());
                }
            }
        }
    }

    #[test]
    fn parse_rejects_non_bijections() {
        assert!("1 1 2".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert_eq!(perm("3 1 2 4").to_string(), "3 1 2 4");
    }
}
