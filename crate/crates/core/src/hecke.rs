//! The Iwahori-Hecke algebra `H_n` in the standard basis `T_w`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};
use crate::ratfun::RatFun;
use crate::symgroup::Permutation;

/// A sparse element `sum_w c_w T_w` of `H_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, RatFun>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `T_1`.
    pub fn one(n: usize) -> Self {
        Self::t(&Permutation::identity(n))
    }

    pub fn t(w: &Permutation) -> Self {
        Self::monomial(w.clone(), RatFun::one())
    }

    /// `T_{s_i}`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::t(&Permutation::simple(n, i))
    }

    pub fn monomial(w: Permutation, c: RatFun) -> Self {
        let mut h = Self::zero(w.n());
        h.add_term(w, c);
        h
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, RatFun)>,
    {
        let mut h = Self::zero(n);
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    got: w.n(),
                });
            }
            h.add_term(w, c);
        }
        Ok(h)
    }

    pub(crate) fn add_term(&mut self, w: Permutation, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Permutation) -> RatFun {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Nonzero terms in lexicographic order of one-line notation.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RatFun)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    fn check_gen(&self, i: usize) {
        assert!(i >= 1 && i < self.n, "T_{i} is not a generator of H_{}", self.n);
    }

    /// `self * T_i`.
    pub fn t_mul_gen(&self, i: usize) -> Self {
        self.check_gen(i);
        let mut out = Self::zero(self.n);
        let (vm1, v) = (RatFun::v_minus_one(), RatFun::v());
        for (w, c) in &self.terms {
            let ws = w.mul_simple_right(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), c * &vm1);
                out.add_term(ws, c * &v);
            } else {
                out.add_term(ws, c.clone());
            }
        }
        out
    }

    /// `T_i * self`.
    pub fn gen_mul_t(&self, i: usize) -> Self {
        self.check_gen(i);
        let mut out = Self::zero(self.n);
        let (vm1, v) = (RatFun::v_minus_one(), RatFun::v());
        for (w, c) in &self.terms {
            let sw = w.mul_simple_left(i);
            if w.has_left_descent(i) {
                out.add_term(w.clone(), c * &vm1);
                out.add_term(sw, c * &v);
            } else {
                out.add_term(sw, c.clone());
            }
        }
        out
    }

    /// `self * other`, expanding each `T_w` of `other` along a reduced word.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut out = Self::zero(self.n);
        for (w, c) in &other.terms {
            let prod = w
                .reduced_word()
                .into_iter()
                .fold(self.clone(), |acc, i| acc.t_mul_gen(i));
            for (u, d) in prod.terms {
                out.add_term(u, d * c);
            }
        }
        Ok(out)
    }

    /// The trace form: the coefficient of `T_1`.
    pub fn tau(&self) -> RatFun {
        self.coeff(&Permutation::identity(self.n))
    }

    /// `h T_i = T_i h` for every generator.
    pub fn is_central(&self) -> bool {
        (1..self.n).all(|i| self.commutes_with_gen(i))
    }

    pub(crate) fn commutes_with_gen(&self, i: usize) -> bool {
        self.t_mul_gen(i) == self.gen_mul_t(i)
    }

    /// Coefficient-wise value at `v = 1`, `T_w -> w`.
    pub fn specialize_v1(&self) -> Result<GroupAlgebraElement> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let q = c.eval_at_one()?;
            if !q.is_zero() {
                terms.insert(w.clone(), q);
            }
        }
        Ok(GroupAlgebraElement { n: self.n, terms })
    }
}

/// `tau(a b)`.
pub fn bilinear(a: &HeckeElement, b: &HeckeElement) -> Result<RatFun> {
    Ok(a.mul(b)?.tau())
}

/// The dual basis element `T_w^vee = v^{-l(w)} T_{w^-1}`.
pub fn t_check(w: &Permutation) -> HeckeElement {
    HeckeElement::monomial(w.inverse(), RatFun::v_pow(-(w.length() as i64)))
}

/// `T~_w^2 = v^{-l(w)} T_w T_w`.
pub fn t_tilde_sq(w: &Permutation) -> HeckeElement {
    let tw = HeckeElement::t(w);
    tw.mul(&tw).expect("same n").scale(&RatFun::v_pow(-(w.length() as i64)))
}

/// The image of `z_1 x ... x z_l` under `H_alpha -> H_n`.
pub fn embed_from_young(alpha: &Composition, blocks: &[HeckeElement]) -> Result<HeckeElement> {
    if blocks.len() != alpha.len() {
        return Err(Error::InvalidComposition(format!(
            "{} blocks for composition {alpha}",
            blocks.len()
        )));
    }
    for (b, &a) in blocks.iter().zip(alpha.parts()) {
        if b.n != a {
            return Err(Error::SizeMismatch { expected: a, got: b.n });
        }
    }
    let mut acc: Vec<(Vec<Permutation>, RatFun)> = vec![(Vec::new(), RatFun::one())];
    for b in blocks {
        let mut next = Vec::with_capacity(acc.len() * b.terms.len());
        for (ws, c) in &acc {
            for (w, d) in &b.terms {
                let mut ws = ws.clone();
                ws.push(w.clone());
                next.push((ws, c * d));
            }
        }
        acc = next;
    }
    HeckeElement::from_terms(
        alpha.size(),
        acc.into_iter().map(|(ws, c)| (Permutation::concat(&ws), c)),
    )
}

impl Add for &HeckeElement {
    type Output = HeckeElement;

    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, rhs.n, "adding elements of different Hecke algebras");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;

    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &rhs.scale(&RatFun::from_int(-1))
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*T[{w}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    w: Permutation,
    coeff: RatFun,
}

#[derive(Serialize, Deserialize)]
struct HeckeJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HeckeJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermJson {
                    w: w.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = HeckeJson::deserialize(d)?;
        HeckeElement::from_terms(j.n, j.terms.into_iter().map(|t| (t.w, t.coeff))).map_err(serde::de::Error::custom)
    }
}

/// An element of the rational group algebra `Q[S_n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Permutation) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.terms.iter()
    }

    /// Coordinates on the class sums `c_lambda`, or `None` if the element is
    /// not constant on conjugacy classes.
    pub fn class_sum_coords(&self) -> Option<BTreeMap<Partition, BigRational>> {
        let mut coords: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for w in Permutation::all(self.n) {
            let c = self.coeff(&w);
            match coords.get(&w.cycle_type()) {
                Some(d) if *d != c => return None,
                Some(_) => {}
                None => {
                    coords.insert(w.cycle_type(), c);
                }
            }
        }
        coords.retain(|_, c| !c.is_zero());
        Some(coords)
    }
}
