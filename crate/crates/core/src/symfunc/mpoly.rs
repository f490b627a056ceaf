//! Polynomials in finitely many commuting variables; the expansion engine
//! behind every symmetric-function basis change.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::Zero;

use crate::combinatorics::Partition;

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct MPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, C>,
}

impl<C> MPoly<C>
where
    C: Clone + Zero + Add<Output = C> + Mul<Output = C>,
{
    pub(crate) fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u8>, c: C) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn coeff(&self, exps: &[u8]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &C)> {
        self.terms.iter()
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Coefficient of `x^mu` (the partition padded with zeros).
    pub(crate) fn coeff_of_partition(&self, mu: &Partition) -> C {
        if mu.len() > self.nvars {
            return C::zero();
        }
        let mut e: Vec<u8> = mu.parts().iter().map(|&p| p as u8).collect();
        e.resize(self.nvars, 0);
        self.coeff(&e)
    }

    /// The monomial symmetric polynomial `c * m_mu(x_1..x_k)`.
    pub(crate) fn monomial_symmetric(nvars: usize, mu: &Partition, c: C) -> Self {
        let mut out = Self::zero(nvars);
        if mu.len() > nvars {
            return out;
        }
        let mut e: Vec<u8> = mu.parts().iter().map(|&p| p as u8).collect();
        e.resize(nvars, 0);
        // distinct permutations of e, generated from the increasing sort
        e.sort_unstable();
        loop {
            out.add_term(e.clone(), c.clone());
            if !next_permutation(&mut e) {
                break;
            }
        }
        out
    }
}

/// Lexicographic successor in place; false once the last one is reached.
fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Scalars that can seed a constant polynomial.
pub(crate) trait OneLike {
    fn one_like() -> Self;
}

impl OneLike for i128 {
    fn one_like() -> Self {
        1
    }
}

impl OneLike for crate::ratfun::RatFun {
    fn one_like() -> Self {
        crate::ratfun::RatFun::one()
    }
}

impl<C> MPoly<C>
where
    C: Clone + Zero + Add<Output = C> + Mul<Output = C> + OneLike,
{
    pub(crate) fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], C::one_like());
        p
    }
}

/// Integer-coefficient generators used for transition matrices.
pub(crate) mod gens {
    use super::*;

    pub(crate) fn elementary(nvars: usize, r: usize) -> MPoly<i128> {
        let mut p = MPoly::zero(nvars);
        if r > nvars {
            return p;
        }
        let mut e = vec![0u8; nvars];
        for slot in e.iter_mut().take(r) {
            *slot = 1;
        }
        e.reverse();
        // all 0/1 vectors with r ones
        loop {
            p.add_term(e.clone(), 1);
            if !next_permutation(&mut e) {
                break;
            }
        }
        p
    }

    pub(crate) fn complete(nvars: usize, r: usize) -> MPoly<i128> {
        let mut p = MPoly::zero(nvars);
        let mut e = vec![0u8; nvars];
        fn rec(i: usize, rest: usize, e: &mut Vec<u8>, p: &mut MPoly<i128>) {
            if i + 1 == e.len() {
                e[i] = rest as u8;
                p.add_term(e.clone(), 1);
                return;
            }
            for k in 0..=rest {
                e[i] = k as u8;
                rec(i + 1, rest - k, e, p);
            }
            e[i] = 0;
        }
        if nvars > 0 {
            rec(0, r, &mut e, &mut p);
        } else if r == 0 {
            p.add_term(Vec::new(), 1);
        }
        p
    }

    pub(crate) fn power(nvars: usize, r: usize) -> MPoly<i128> {
        let mut p = MPoly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0u8; nvars];
            e[i] = r as u8;
            p.add_term(e, 1);
        }
        p
    }

    pub(crate) fn product(nvars: usize, lambda: &Partition, g: fn(usize, usize) -> MPoly<i128>) -> MPoly<i128> {
        lambda
            .parts()
            .iter()
            .fold(MPoly::one(nvars), |acc, &r| acc.mul(&g(nvars, r)))
    }
}
