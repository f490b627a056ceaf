//! Characters of `H_n`, Schur elements, central idempotents, and the maps
//! `psi: Z -> Lambda_v`, `ch_v` and `theta`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::center::{class_polynomials, decompose_central, norm_f, norm_one, norm_tsq, CentralElement};
use crate::combinatorics::{partitions_of, standard_tableaux_count, z_factor, Partition};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::memo::Memo;
use crate::ratfun::RatFun;
use crate::symfunc::{h_bar, lr_coefficients, m_bar, plethysm_scale, Basis, Plethysm, SymFun, TransitionMatrix};
use crate::symgroup::Permutation;

/// Values `chi^lambda_v(T_{w_mu})`; rows `lambda`, columns `mu`, both in
/// canonical partition order.
#[derive(Clone, PartialEq, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<RatFun>>,
}

impl CharacterTable {
    fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let columns: Vec<SymFun> = partitions.iter().map(|mu| h_bar(mu).convert(Basis::S)).collect();
        let values = partitions
            .iter()
            .map(|lambda| columns.iter().map(|col| col.coeff(lambda)).collect())
            .collect();
        Self { n, partitions, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn values(&self) -> &[Vec<RatFun>] {
        &self.values
    }

    fn index(&self, lambda: &Partition) -> usize {
        self.partitions
            .iter()
            .position(|p| p == lambda)
            .unwrap_or_else(|| panic!("{lambda} is not a partition of {}", self.n))
    }

    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> RatFun {
        self.values[self.index(lambda)][self.index(mu)].clone()
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    row_order: Vec<Partition>,
    col_order: Vec<Partition>,
    values: Vec<Vec<RatFun>>,
}

impl Serialize for CharacterTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            n: self.n,
            row_order: self.partitions.clone(),
            col_order: self.partitions.clone(),
            values: self.values.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharacterTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = TableJson::deserialize(d)?;
        let parts = partitions_of(j.n);
        if j.row_order != parts || j.col_order != parts {
            return Err(D::Error::custom(
                "row/column order is not the canonical partition order",
            ));
        }
        if j.values.len() != parts.len() || j.values.iter().any(|r| r.len() != parts.len()) {
            return Err(D::Error::custom("table of the wrong shape"));
        }
        Ok(Self {
            n: j.n,
            partitions: parts,
            values: j.values,
        })
    }
}

static TABLES: LazyLock<Memo<usize, CharacterTable>> = LazyLock::new(Memo::new);
static VALUES: LazyLock<Memo<Partition, BTreeMap<Permutation, RatFun>>> = LazyLock::new(Memo::new);
static SCHUR: LazyLock<Memo<Partition, RatFun>> = LazyLock::new(Memo::new);
static IDEMPOTENTS: LazyLock<Memo<Partition, HeckeElement>> = LazyLock::new(Memo::new);

/// The character table of `H_n` from the expansion `hbar_mu = sum_lambda
/// chi^lambda_v(T_{w_mu}) s_lambda`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    TABLES.get_or_init(&n, || CharacterTable::compute(n))
}

/// Installs a table loaded from elsewhere; false if one was already present.
pub fn seed_character_table(table: CharacterTable) -> bool {
    TABLES.insert(&table.n.clone(), table)
}

/// `chi^lambda_v(T_w) = sum_mu f_{w,mu} chi^lambda_v(T_{w_mu})`.
pub fn char_value(lambda: &Partition, w: &Permutation) -> RatFun {
    character_values(lambda)[w].clone()
}

/// `chi^lambda_v(T_w)` for every `w` in `S_n`.
pub fn character_values(lambda: &Partition) -> Arc<BTreeMap<Permutation, RatFun>> {
    VALUES.get_or_init(lambda, || {
        let n = lambda.size();
        let table = character_table(n);
        let row = &table.values[table.index(lambda)];
        class_polynomials(n)
            .rows()
            .map(|(w, f)| {
                let value = f
                    .iter()
                    .zip(row)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum();
                (w.clone(), value)
            })
            .collect()
    })
}

/// The Schur element `kappa_lambda = (1/d_lambda) sum_w v^{-l(w)}
/// chi(T_w) chi(T_{w^-1})`.
pub fn schur_element(lambda: &Partition) -> RatFun {
    SCHUR
        .get_or_init(lambda, || {
            let chi = character_values(lambda);
            let sum: RatFun = chi
                .iter()
                .map(|(w, c)| (c * &chi[&w.inverse()]).shift(-(w.length() as i64)))
                .sum();
            let d = BigInt::from(standard_tableaux_count(lambda));
            sum.scale(&BigRational::new(1.into(), d))
        })
        .as_ref()
        .clone()
}

/// `P_n(v) = sum_w v^{l(w)} = prod_{k<=n} (v^k - 1)/(v - 1)`, computed as the sum.
pub fn poincare(n: usize) -> RatFun {
    let mut counts = vec![0i64; n * n.saturating_sub(1) / 2 + 1];
    for w in Permutation::all(n) {
        counts[w.length()] += 1;
    }
    counts
        .iter()
        .enumerate()
        .map(|(k, &c)| RatFun::v_pow(k as i64).scale_int(&BigInt::from(c)))
        .sum()
}

/// The generic degree `P_n / kappa_lambda`.
pub fn generic_degree(lambda: &Partition) -> RatFun {
    poincare(lambda.size())
        .div(&schur_element(lambda))
        .expect("Schur elements are nonzero")
}

/// `e^lambda_v = (1/kappa_lambda) sum_w chi(T_w) T_w^vee`.
pub fn central_idempotent(lambda: &Partition) -> HeckeElement {
    IDEMPOTENTS
        .get_or_init(lambda, || {
            let n = lambda.size();
            let inv_kappa = schur_element(lambda).inv().expect("Schur elements are nonzero");
            let mut e = HeckeElement::zero(n);
            for (w, c) in character_values(lambda).iter() {
                e.add_term(w.inverse(), (c * &inv_kappa).shift(-(w.length() as i64)));
            }
            e
        })
        .as_ref()
        .clone()
}

/// The same idempotent assembled from the Geck-Rouquier basis:
/// `(1/kappa_lambda) sum_mu chi(T_{w_mu}) f*_mu`.
pub fn central_idempotent_from_gr(lambda: &Partition) -> CentralElement {
    let table = character_table(lambda.size());
    let inv_kappa = schur_element(lambda).inv().expect("Schur elements are nonzero");
    CentralElement::from_coords(
        lambda.size(),
        table
            .partitions()
            .iter()
            .map(|mu| (mu.clone(), table.entry(lambda, mu) * &inv_kappa)),
    )
    .expect("partitions of n")
}

/// `chi^lambda_v(h)` recovered from the regular trace:
/// `(1/d_lambda) sum_w [T_w](h e^lambda T_w)`.
pub fn character_from_idempotent(lambda: &Partition, h: &HeckeElement) -> Result<RatFun> {
    let he = h.mul(&central_idempotent(lambda))?;
    let mut trace = RatFun::zero();
    for w in Permutation::all(h.n()) {
        trace += he.mul(&HeckeElement::t(&w))?.coeff(&w);
    }
    let d = BigInt::from(standard_tableaux_count(lambda));
    Ok(trace.scale(&BigRational::new(1.into(), d)))
}

/// The quantum Frobenius map `f*_lambda -> mbar_lambda`, on the monomial basis.
pub fn psi(z: &CentralElement) -> SymFun {
    let mut out = SymFun::zero(z.n(), Basis::M);
    for (lambda, c) in z.coords() {
        out = out.add(&m_bar(lambda).scale(c)).expect("same degree");
    }
    out
}

/// Inverse of `psi`: since `f((v-1)x) = sum_lambda c_lambda (v-1)^{l(lambda)}
/// m_lambda`, the coordinates are read off the monomial expansion.
pub fn psi_inv(f: &SymFun) -> CentralElement {
    let expanded = plethysm_scale(f, Plethysm::Expand).convert(Basis::M);
    let coords = expanded.terms().map(|(lambda, c)| {
        let scale = RatFun::v_minus_one()
            .pow(-(lambda.len() as i32))
            .expect("v - 1 is nonzero");
        (lambda.clone(), c * &scale)
    });
    CentralElement::from_coords(f.degree(), coords).expect("partitions of the degree")
}

/// A virtual character of `H_n` on the irreducible characters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualCharacter {
    n: usize,
    coords: BTreeMap<Partition, RatFun>,
}

impl VirtualCharacter {
    pub fn irreducible(lambda: &Partition) -> Self {
        Self {
            n: lambda.size(),
            coords: BTreeMap::from([(lambda.clone(), RatFun::one())]),
        }
    }

    pub fn from_coords<I>(n: usize, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, RatFun)>,
    {
        let mut out = Self {
            n,
            coords: BTreeMap::new(),
        };
        for (lambda, c) in coords {
            if lambda.size() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    got: lambda.size(),
                });
            }
            let e = out.coords.entry(lambda).or_default();
            *e += c;
        }
        out.coords.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coord(&self, lambda: &Partition) -> RatFun {
        self.coords.get(lambda).cloned().unwrap_or_default()
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Partition, &RatFun)> {
        self.coords.iter()
    }

    /// `chi(T_w)`.
    pub fn value(&self, w: &Permutation) -> RatFun {
        self.coords.iter().map(|(lambda, c)| c * &char_value(lambda, w)).sum()
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*chi[{l}]")?;
        }
        Ok(())
    }
}

/// `ch_v(chi^lambda_v) = (P_n / d_lambda(v)) psi(e^lambda_v)`, extended linearly.
pub fn ch_v(chi: &VirtualCharacter) -> Result<SymFun> {
    let mut out = SymFun::zero(chi.n, Basis::S);
    for (lambda, c) in &chi.coords {
        let e = decompose_central(&central_idempotent(lambda))?;
        let factor = poincare(chi.n).div(&generic_degree(lambda))?;
        out = out.add(&psi(&e).scale(&(c * &factor)))?;
    }
    Ok(out)
}

/// `theta(chi) = sum_w chi(T_w) T_w^vee`, on the Geck-Rouquier basis.
pub fn theta(chi: &VirtualCharacter) -> Result<CentralElement> {
    let mut h = HeckeElement::zero(chi.n);
    for w in Permutation::all(chi.n) {
        h.add_term(w.inverse(), chi.value(&w).shift(-(w.length() as i64)));
    }
    decompose_central(&h)
}

/// Induction from `H_m x H_n` to `H_{m+n}`, through Littlewood-Richardson
/// coefficients.
pub fn induce(a: &VirtualCharacter, b: &VirtualCharacter) -> Result<VirtualCharacter> {
    let mut terms = Vec::new();
    for (mu, c) in &a.coords {
        for (lambda, d) in &b.coords {
            for (nu, k) in lr_coefficients(mu, lambda)? {
                terms.push((nu, (c * d).scale_int(&BigInt::from(k))));
            }
        }
    }
    VirtualCharacter::from_coords(a.n + b.n, terms)
}

/// The classical Frobenius map on class-sum coordinates, `c_lambda ->
/// p_lambda / z_lambda`.
pub fn classical_psi(n: usize, class_sums: &BTreeMap<Partition, BigRational>) -> Result<SymFun> {
    SymFun::from_terms(
        n,
        Basis::P,
        class_sums.iter().map(|(lambda, c)| {
            let z = BigRational::from_integer(BigInt::from(z_factor(lambda)));
            (lambda.clone(), RatFun::from_rational(&(c / z)))
        }),
    )
}

/// The deformed product with `s_lambda * s_mu = delta_{lambda mu}
/// kappa_lambda s_lambda`, on the Schur basis.
pub fn star_product(f: &SymFun, g: &SymFun) -> Result<SymFun> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch(f.degree(), g.degree()));
    }
    let (a, b) = (f.convert(Basis::S), g.convert(Basis::S));
    SymFun::from_terms(
        f.degree(),
        Basis::S,
        a.terms().map(|(l, c)| (l.clone(), c * &b.coeff(l) * schur_element(l))),
    )
}

/// The distinguished bases of `Z(H_n)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CentralFamily {
    /// `N_lambda(1)`.
    N1,
    /// `N_lambda(T~^2_{w0_lambda})`.
    NT2,
    /// `N_lambda(F_lambda)`.
    NF,
    /// `f*_lambda`.
    GR,
    /// `e^lambda_v`.
    IDEM,
}

impl CentralFamily {
    pub const ALL: [CentralFamily; 5] = [Self::N1, Self::NT2, Self::NF, Self::GR, Self::IDEM];

    pub fn tag(self) -> &'static str {
        match self {
            Self::N1 => "N1",
            Self::NT2 => "NT2",
            Self::NF => "NF",
            Self::GR => "GR",
            Self::IDEM => "IDEM",
        }
    }

    pub fn element(self, lambda: &Partition) -> CentralElement {
        match self {
            Self::N1 => norm_one(lambda),
            Self::NT2 => norm_tsq(lambda),
            Self::NF => norm_f(lambda),
            Self::GR => CentralElement::basis(lambda),
            Self::IDEM => decompose_central(&central_idempotent(lambda)).expect("idempotents are central"),
        }
    }

    /// Rows: the family member `lambda` on the `f*` basis.
    pub fn matrix(self, n: usize) -> TransitionMatrix {
        let entries = partitions_of(n).iter().map(|l| self.element(l).to_vec()).collect();
        TransitionMatrix::new(n, self.tag(), "GR", entries)
    }
}

impl fmt::Display for CentralFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CentralFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown central family {s:?}")))
    }
}

/// Row `lambda` expands `from_lambda` on the `to` family.
pub fn family_transition(from: CentralFamily, to: CentralFamily, n: usize) -> Result<TransitionMatrix> {
    let m = from.matrix(n).mul(&to.matrix(n).inverse()?);
    Ok(TransitionMatrix::new(n, from.tag(), to.tag(), m.entries))
}
