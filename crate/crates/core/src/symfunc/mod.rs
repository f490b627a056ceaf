//! Symmetric functions over Q(v).
//!
//! A [`SymFun`] is a homogeneous element stored on one of the five classical
//! bases. Every basis change goes through the monomial basis: the matrices
//! `M(b, m)` come from expanding `e_lambda`, `h_lambda`, `p_lambda` as honest
//! polynomials in `n` variables (a degree-`n` symmetric polynomial in `n`
//! variables determines its monomial expansion), and Schur functions enter
//! through the Jacobi-Trudi determinant in the `h`'s. The matrices have
//! rational entries and are memoized per `(basis, n)`.
//!
//! The lambda-ring substitutions `f((v-1)x)` and `f(x/(v-1))` are diagonal on
//! power sums, `p_k -> (v^k - 1)^{+-1} p_k`, and are applied only there.

mod matrix;
mod mpoly;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{partitions_of, union_sorted, z_factor, Partition};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::ratfun::RatFun;
use crate::symgroup::Permutation;

use matrix::{q_identity, q_inverse, q_mul, QMatrix};
pub(crate) use matrix::{r_identity, r_inverse, r_mul};
use mpoly::{gens, MPoly};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse(format!("unknown basis {s:?} (expected m, e, h, p or s)"))),
        }
    }
}

static TO_M: LazyLock<Memo<(Basis, usize), QMatrix>> = LazyLock::new(Memo::new);
static FROM_M: LazyLock<Memo<(Basis, usize), QMatrix>> = LazyLock::new(Memo::new);

/// `M(b, m)`: row `lambda` is the monomial expansion of `b_lambda`.
fn to_m(b: Basis, n: usize) -> Arc<QMatrix> {
    TO_M.get_or_init(&(b, n), || {
        let parts = partitions_of(n);
        let gen: fn(usize, usize) -> MPoly<i128> = match b {
            Basis::M => return q_identity(parts.len()),
            Basis::S => return q_mul(&jacobi_trudi(n), &to_m(Basis::H, n)),
            Basis::E => gens::elementary,
            Basis::H => gens::complete,
            Basis::P => gens::power,
        };
        parts
            .iter()
            .map(|lambda| {
                let poly = gens::product(n, lambda, gen);
                parts
                    .iter()
                    .map(|mu| BigRational::from_integer(BigInt::from(poly.coeff_of_partition(mu))))
                    .collect()
            })
            .collect()
    })
}

fn from_m(b: Basis, n: usize) -> Arc<QMatrix> {
    FROM_M.get_or_init(&(b, n), || {
        q_inverse(&to_m(b, n)).expect("transition matrix to the monomial basis is invertible")
    })
}

/// `M(s, h)` from `s_lambda = det(h_{lambda_i - i + j})`.
fn jacobi_trudi(n: usize) -> QMatrix {
    let parts = partitions_of(n);
    let index: BTreeMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    parts
        .iter()
        .map(|lambda| {
            let l = lambda.len();
            let mut row = vec![BigRational::zero(); parts.len()];
            for sigma in Permutation::all(l) {
                let mut idx = Vec::with_capacity(l);
                let mut ok = true;
                for i in 0..l {
                    let a = lambda.parts()[i] as i64 - i as i64 + (sigma.apply(i + 1) as i64 - 1);
                    if a < 0 {
                        ok = false;
                        break;
                    }
                    idx.push(a as usize);
                }
                if !ok {
                    continue;
                }
                let sign = if sigma.length() % 2 == 0 { 1 } else { -1 };
                row[index[&Partition::from_unsorted(idx)]] += BigRational::from_integer(sign.into());
            }
            row
        })
        .collect()
}

/// Homogeneous symmetric function of degree `degree`, stored on `basis`.
#[derive(Clone, Debug)]
pub struct SymFun {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFun>,
}

impl SymFun {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Self {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// `b_lambda` for the given basis.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::zero(lambda.size(), basis);
        f.coeffs.insert(lambda.clone(), RatFun::one());
        f
    }

    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, RatFun)>,
    {
        let mut f = Self::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SizeMismatch {
                    expected: degree,
                    got: lambda.size(),
                });
            }
            f.add_coeff(lambda, c);
        }
        Ok(f)
    }

    fn add_coeff(&mut self, lambda: Partition, c: RatFun) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(lambda).or_insert_with(RatFun::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.retain(|_, c| !c.is_zero());
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFun {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFun)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn coeff_vector(&self) -> Vec<RatFun> {
        partitions_of(self.degree).iter().map(|l| self.coeff(l)).collect()
    }

    fn from_vector(degree: usize, basis: Basis, v: Vec<RatFun>) -> Self {
        let coeffs = partitions_of(degree)
            .into_iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { degree, basis, coeffs }
    }

    /// The same element re-expressed on `target`.
    pub fn convert(&self, target: Basis) -> SymFun {
        if self.basis == target {
            return self.clone();
        }
        let n = self.degree;
        let apply = |v: &[RatFun], m: &QMatrix| -> Vec<RatFun> {
            (0..v.len())
                .map(|j| {
                    v.iter()
                        .zip(m.iter())
                        .filter(|(c, row)| !c.is_zero() && !row[j].is_zero())
                        .map(|(c, row)| c.scale(&row[j]))
                        .sum()
                })
                .collect()
        };
        let mut v = self.coeff_vector();
        if self.basis != Basis::M {
            v = apply(&v, &to_m(self.basis, n));
        }
        if target != Basis::M {
            v = apply(&v, &from_m(target, n));
        }
        Self::from_vector(n, target, v)
    }

    pub fn scale(&self, c: &RatFun) -> SymFun {
        let mut out = Self::zero(self.degree, self.basis);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(l, x)| (l.clone(), x * c)).collect();
        }
        out
    }

    /// Sum, expressed on `self`'s basis.
    pub fn add(&self, other: &SymFun) -> Result<SymFun> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (l, c) in other.convert(self.basis).coeffs {
            out.add_coeff(l, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFun) -> Result<SymFun> {
        self.add(&other.scale(&RatFun::from_int(-1)))
    }

    /// Product, expressed on `self`'s basis.
    pub fn mul(&self, other: &SymFun) -> SymFun {
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        let mut out = Self::zero(self.degree + other.degree, Basis::P);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                out.add_coeff(union_sorted(la, lb), ca * cb);
            }
        }
        out.convert(self.basis)
    }

    /// Value of this symmetric function at `x_1, ..., x_k` (remaining
    /// variables zero), as an explicit polynomial.
    pub(crate) fn expand_in_variables(&self, k: usize) -> MPoly<RatFun> {
        let m = self.convert(Basis::M);
        let mut out = MPoly::zero(k);
        for (mu, c) in &m.coeffs {
            out = out.add(&MPoly::monomial_symmetric(k, mu, c.clone()));
        }
        out
    }
}

/// Mathematical equality: compares after converting to a common basis.
impl PartialEq for SymFun {
    fn eq(&self, other: &Self) -> bool {
        if self.degree != other.degree {
            return self.is_zero() && other.is_zero();
        }
        if self.basis == other.basis {
            return self.coeffs == other.coeffs;
        }
        self.coeffs == other.convert(self.basis).coeffs
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let name = format!(
                "{}[{}]",
                self.basis,
                l.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
            );
            if c.is_one() {
                f.write_str(&name)?;
            } else if (-c).is_one() {
                write!(f, "-{name}")?;
            } else {
                write!(f, "({c})*{name}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SymFunTerm {
    partition: Partition,
    coeff: RatFun,
}

#[derive(Serialize, Deserialize)]
struct SymFunJson {
    degree: usize,
    basis: String,
    terms: Vec<SymFunTerm>,
}

impl Serialize for SymFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFunJson {
            degree: self.degree,
            basis: self.basis.tag().to_string(),
            terms: self
                .coeffs
                .iter()
                .map(|(l, c)| SymFunTerm {
                    partition: l.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFunJson::deserialize(d)?;
        let basis: Basis = j.basis.parse().map_err(serde::de::Error::custom)?;
        SymFun::from_terms(j.degree, basis, j.terms.into_iter().map(|t| (t.partition, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Plethysm {
    /// `f(x) -> f((v-1)x)`, i.e. `p_k -> (v^k - 1) p_k`.
    Expand,
    /// `f(x) -> f(x/(v-1))`, i.e. `p_k -> p_k / (v^k - 1)`.
    Contract,
}

fn power_factor(lambda: &Partition) -> RatFun {
    lambda
        .parts()
        .iter()
        .map(|&k| RatFun::v_pow_minus_one(k as u32))
        .fold(RatFun::one(), |a, b| a * b)
}

pub fn plethysm_scale(f: &SymFun, mode: Plethysm) -> SymFun {
    let p = f.convert(Basis::P);
    let coeffs = p
        .coeffs
        .iter()
        .map(|(l, c)| {
            let factor = power_factor(l);
            let c = match mode {
                Plethysm::Expand => c * &factor,
                Plethysm::Contract => c.div(&factor).expect("v^k - 1 is nonzero"),
            };
            (l.clone(), c)
        })
        .collect();
    SymFun {
        degree: f.degree,
        basis: Basis::P,
        coeffs,
    }
    .convert(f.basis)
}

static M_BAR: LazyLock<Memo<Partition, SymFun>> = LazyLock::new(Memo::new);
static H_BAR: LazyLock<Memo<Partition, SymFun>> = LazyLock::new(Memo::new);

/// `(v-1)^{l(lambda)} m_lambda(x/(v-1))`, on the monomial basis.
pub fn m_bar(lambda: &Partition) -> SymFun {
    M_BAR
        .get_or_init(lambda, || {
            let scale = RatFun::v_minus_one().pow(lambda.len() as i32).unwrap();
            plethysm_scale(&SymFun::basis_element(Basis::M, lambda), Plethysm::Contract).scale(&scale)
        })
        .as_ref()
        .clone()
}

/// `prod_i h_{mu_i}((v-1)x) / (v-1)`, on the complete basis.
pub fn h_bar(mu: &Partition) -> SymFun {
    H_BAR
        .get_or_init(mu, || {
            let inv = RatFun::v_minus_one().inv().unwrap();
            mu.parts()
                .iter()
                .map(|&r| {
                    plethysm_scale(&SymFun::basis_element(Basis::H, &Partition::row(r)), Plethysm::Expand).scale(&inv)
                })
                .fold(SymFun::basis_element(Basis::H, &Partition::empty()), |acc, f| {
                    acc.mul(&f)
                })
        })
        .as_ref()
        .clone()
}

/// Square matrix indexed by partitions of `n` in canonical order; row
/// `lambda` expands the `from` element `lambda` on the `to` family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransitionMatrix {
    pub n: usize,
    pub from: String,
    pub to: String,
    pub order: Vec<Partition>,
    pub entries: Vec<Vec<RatFun>>,
}

impl TransitionMatrix {
    pub fn new(n: usize, from: &str, to: &str, entries: Vec<Vec<RatFun>>) -> Self {
        Self {
            n,
            from: from.to_string(),
            to: to.to_string(),
            order: partitions_of(n),
            entries,
        }
    }

    pub fn identity(n: usize, tag: &str) -> Self {
        Self::new(n, tag, tag, r_identity(partitions_of(n).len()))
    }

    /// `self * rhs`: chains `from -> self.to == rhs.from -> rhs.to`.
    pub fn mul(&self, rhs: &TransitionMatrix) -> TransitionMatrix {
        Self::new(self.n, &self.from, &rhs.to, r_mul(&self.entries, &rhs.entries))
    }

    pub fn inverse(&self) -> Result<TransitionMatrix> {
        Ok(Self::new(self.n, &self.to, &self.from, r_inverse(&self.entries)?))
    }

    /// Entry-wise equality, ignoring labels.
    pub fn same_entries(&self, other: &TransitionMatrix) -> bool {
        self.entries == other.entries
    }
}

/// `M(from, to)` at degree `n`.
pub fn transition_matrix(from: Basis, to: Basis, n: usize) -> TransitionMatrix {
    let parts = partitions_of(n);
    let entries = parts
        .iter()
        .map(|l| {
            let f = SymFun::basis_element(from, l).convert(to);
            parts.iter().map(|mu| f.coeff(mu)).collect()
        })
        .collect();
    TransitionMatrix::new(n, from.tag(), to.tag(), entries)
}

/// `D = diag((v-1)^{n - l(lambda)})`.
pub fn d_matrix(n: usize) -> TransitionMatrix {
    let parts = partitions_of(n);
    let mut entries = r_identity(parts.len());
    for (i, l) in parts.iter().enumerate() {
        entries[i][i] = RatFun::v_minus_one().pow((n - l.len()) as i32).unwrap();
    }
    TransitionMatrix::new(n, "D", "D", entries)
}

/// Hall inner product, `<p_lambda, p_mu> = delta z_lambda`.
pub fn hall_inner(f: &SymFun, g: &SymFun) -> Result<RatFun> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch(f.degree, g.degree));
    }
    let (a, b) = (f.convert(Basis::P), g.convert(Basis::P));
    Ok(a.coeffs
        .iter()
        .filter_map(|(l, c)| b.coeffs.get(l).map(|d| (c * d).scale_int(&BigInt::from(z_factor(l)))))
        .sum())
}

/// `c^nu_{mu lambda}`: the Schur expansion of `s_mu s_lambda`.
pub fn lr_coefficients(mu: &Partition, lambda: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let prod = SymFun::basis_element(Basis::S, mu)
        .mul(&SymFun::basis_element(Basis::S, lambda))
        .convert(Basis::S);
    prod.coeffs
        .iter()
        .map(|(nu, c)| {
            c.as_rational()
                .filter(|q| q.is_integer() && !q.is_negative())
                .and_then(|q| q.to_integer().to_u64())
                .map(|k| (nu.clone(), k))
                .ok_or_else(|| Error::Inconsistent(format!("LR coefficient {c} at {nu} is not a nonnegative integer")))
        })
        .collect()
}

/// Coefficient-wise value at `v = 1`; the result has constant coefficients.
pub fn specialize_v1(f: &SymFun) -> Result<SymFun> {
    let mut out = SymFun::zero(f.degree, f.basis);
    for (l, c) in &f.coeffs {
        out.add_coeff(l.clone(), RatFun::from_rational(&c.eval_at_one()?));
    }
    Ok(out)
}

fn bilinear_expansion(pairs: &[(SymFun, SymFun)], k: usize) -> BTreeMap<(Vec<u8>, Vec<u8>), RatFun> {
    let mut out: BTreeMap<(Vec<u8>, Vec<u8>), RatFun> = BTreeMap::new();
    for (a, b) in pairs {
        let (x, y) = (a.expand_in_variables(k), b.expand_in_variables(k));
        for (ex, cx) in x.terms() {
            for (ey, cy) in y.terms() {
                let e = out.entry((ex.clone(), ey.clone())).or_default();
                *e += cx * cy;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Checks `sum_lambda hbar_lambda(x) mbar_lambda(y) = sum_lambda s_lambda(x)
/// s_lambda(y)` as an identity of polynomials in `x_1..x_k, y_1..y_k`.
pub fn cauchy_check(n: usize, k: usize) -> Result<bool> {
    if k < n {
        return Err(Error::SizeMismatch { expected: n, got: k });
    }
    let parts = partitions_of(n);
    let lhs: Vec<_> = parts.iter().map(|l| (h_bar(l), m_bar(l))).collect();
    let rhs: Vec<_> = parts
        .iter()
        .map(|l| (SymFun::basis_element(Basis::S, l), SymFun::basis_element(Basis::S, l)))
        .collect();
    Ok(bilinear_expansion(&lhs, k) == bilinear_expansion(&rhs, k))
}
