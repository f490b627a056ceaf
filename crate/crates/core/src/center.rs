//! The centers `Z(H_n)` and the graded algebra `Z = sum_n Z(H_n)` with the
//! product `z_1 o z_2 = N_{(m,n)}(z_1 x z_2)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, LazyLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{partitions_of, Composition, Partition};
use crate::error::{Error, Result};
use crate::hecke::{embed_from_young, t_tilde_sq, HeckeElement};
use crate::memo::Memo;
use crate::ratfun::RatFun;
use crate::symgroup::{longest_in_young, min_coset_reps, w_min, Permutation};

/// Class polynomials `f_{w,lambda}`: `T_w` is congruent to
/// `sum_lambda f_{w,lambda} T_{w_lambda}` modulo commutators.
#[derive(Clone, PartialEq, Debug)]
pub struct ClassPolyTable {
    n: usize,
    partitions: Vec<Partition>,
    rows: BTreeMap<Permutation, Vec<RatFun>>,
}

impl ClassPolyTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Column order: `partitions_of(n)`.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// The row of `w` as a vector in column order.
    pub fn row_vec(&self, w: &Permutation) -> &[RatFun] {
        &self.rows[w]
    }

    pub fn row(&self, w: &Permutation) -> BTreeMap<Partition, RatFun> {
        self.partitions
            .iter()
            .cloned()
            .zip(self.rows[w].iter().cloned())
            .collect()
    }

    pub fn get(&self, w: &Permutation, lambda: &Partition) -> RatFun {
        match self.partitions.iter().position(|p| p == lambda) {
            Some(j) => self.rows[w][j].clone(),
            None => RatFun::zero(),
        }
    }

    /// All rows, ordered by one-line notation.
    pub fn rows(&self) -> impl Iterator<Item = (&Permutation, &[RatFun])> {
        self.rows.iter().map(|(w, r)| (w, r.as_slice()))
    }

    fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index: HashMap<&Partition, usize> = partitions.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut perms = Permutation::all(n);
        perms.sort_by_key(|w| w.length());
        let (vm1, v) = (RatFun::v_minus_one(), RatFun::v());
        let mut rows: HashMap<Permutation, Vec<RatFun>> = HashMap::with_capacity(perms.len());
        for w in &perms {
            if rows.contains_key(w) {
                continue;
            }
            let class = cyclic_shift_class(w);
            let descent = class.iter().find_map(|x| {
                (1..n).find_map(|s| {
                    let sxs = x.mul_simple_left(s).mul_simple_right(s);
                    (sxs.length() + 2 == x.length()).then(|| (x.mul_simple_left(s), sxs))
                })
            });
            let row = match descent {
                // T_x = T_s T_y T_s is congruent to T_y T_s T_s
                Some((sx, y)) => rows[&sx]
                    .iter()
                    .zip(&rows[&y])
                    .map(|(a, b)| a * &vm1 + b * &v)
                    .collect(),
                None => {
                    let lambda = w.cycle_type();
                    assert_eq!(
                        w.length(),
                        n - lambda.len(),
                        "{w} has no descent among its cyclic shifts but is not of minimal length"
                    );
                    let mut row = vec![RatFun::zero(); partitions.len()];
                    row[index[&lambda]] = RatFun::one();
                    row
                }
            };
            for x in class {
                rows.insert(x, row.clone());
            }
        }
        Self {
            n,
            partitions,
            rows: rows.into_iter().collect(),
        }
    }
}

/// Everything reachable from `w` by conjugations `s w s` that keep the length.
fn cyclic_shift_class(w: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    let len = w.length();
    while let Some(x) = queue.pop_front() {
        for s in 1..x.n() {
            let y = x.mul_simple_left(s).mul_simple_right(s);
            if y.length() == len && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

#[derive(Serialize, Deserialize)]
struct RowJson {
    w: Permutation,
    f: Vec<RatFun>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    partitions: Vec<Partition>,
    rows: Vec<RowJson>,
}

impl Serialize for ClassPolyTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            n: self.n,
            partitions: self.partitions.clone(),
            rows: self
                .rows
                .iter()
                .map(|(w, f)| RowJson {
                    w: w.clone(),
                    f: f.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassPolyTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = TableJson::deserialize(d)?;
        if j.partitions != partitions_of(j.n) {
            return Err(D::Error::custom("column order is not the canonical partition order"));
        }
        let mut rows = BTreeMap::new();
        for r in j.rows {
            if r.w.n() != j.n || r.f.len() != j.partitions.len() {
                return Err(D::Error::custom("row of the wrong shape"));
            }
            rows.insert(r.w, r.f);
        }
        if rows.len() != Permutation::all(j.n).len() {
            return Err(D::Error::custom("table is incomplete"));
        }
        Ok(Self {
            n: j.n,
            partitions: j.partitions,
            rows,
        })
    }
}

static CLASS_POLYS: LazyLock<Memo<usize, ClassPolyTable>> = LazyLock::new(Memo::new);
static GR: LazyLock<Memo<Partition, HeckeElement>> = LazyLock::new(Memo::new);
static CIRC: LazyLock<Memo<(Partition, Partition), CentralElement>> = LazyLock::new(Memo::new);

/// The class polynomial table of `S_n`, computed once per process.
pub fn class_polynomials(n: usize) -> Arc<ClassPolyTable> {
    CLASS_POLYS.get_or_init(&n, || ClassPolyTable::compute(n))
}

/// Installs a table loaded from elsewhere. Returns false if a table for the
/// same `n` was already present (the present one is kept).
pub fn seed_class_polynomials(table: ClassPolyTable) -> bool {
    CLASS_POLYS.insert(&table.n.clone(), table)
}

/// The Geck-Rouquier element `f*_lambda = sum_w v^{-l(w)} f_{w,lambda} T_{w^-1}`.
pub fn gr_element(lambda: &Partition) -> HeckeElement {
    GR.get_or_init(lambda, || {
        let n = lambda.size();
        let table = class_polynomials(n);
        let j = table
            .partitions
            .iter()
            .position(|p| p == lambda)
            .expect("partition of n");
        let mut h = HeckeElement::zero(n);
        for (w, row) in table.rows() {
            if !row[j].is_zero() {
                h.add_term(w.inverse(), row[j].shift(-(w.length() as i64)));
            }
        }
        h
    })
    .as_ref()
    .clone()
}

/// A central element written on the basis `f*_lambda`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralElement {
    n: usize,
    coords: BTreeMap<Partition, RatFun>,
}

impl CentralElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coords: BTreeMap::new(),
        }
    }

    /// `f*_lambda`.
    pub fn basis(lambda: &Partition) -> Self {
        Self {
            n: lambda.size(),
            coords: BTreeMap::from([(lambda.clone(), RatFun::one())]),
        }
    }

    /// The unit `T_1 = f*_{(1^n)}`.
    pub fn unit(n: usize) -> Self {
        Self::basis(&Partition::column(n))
    }

    pub fn from_coords<I>(n: usize, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, RatFun)>,
    {
        let mut z = Self::zero(n);
        for (lambda, c) in coords {
            if lambda.size() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    got: lambda.size(),
                });
            }
            z.add_coord(lambda, c);
        }
        Ok(z)
    }

    fn add_coord(&mut self, lambda: Partition, c: RatFun) {
        if c.is_zero() {
            return;
        }
        let e = self.coords.entry(lambda.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.coords.remove(&lambda);
        }
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

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        let mut out = Self::zero(self.n);
        if !c.is_zero() {
            out.coords = self.coords.iter().map(|(l, x)| (l.clone(), x * c)).collect();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut out = self.clone();
        for (l, c) in &other.coords {
            out.add_coord(l.clone(), c.clone());
        }
        Ok(out)
    }

    /// The element of `H_n` with these coordinates.
    pub fn to_hecke(&self) -> HeckeElement {
        let mut h = HeckeElement::zero(self.n);
        for (lambda, c) in &self.coords {
            h = &h + &gr_element(lambda).scale(c);
        }
        h
    }

    /// Coordinate vector in `partitions_of(n)` order.
    pub fn to_vec(&self) -> Vec<RatFun> {
        partitions_of(self.n).iter().map(|l| self.coord(l)).collect()
    }
}

impl fmt::Display for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*f[{l}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CoordJson {
    partition: Partition,
    coeff: RatFun,
}

#[derive(Serialize, Deserialize)]
struct CentralJson {
    n: usize,
    coords: Vec<CoordJson>,
}

impl Serialize for CentralElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CentralJson {
            n: self.n,
            coords: self
                .coords
                .iter()
                .map(|(l, c)| CoordJson {
                    partition: l.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CentralElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CentralJson::deserialize(d)?;
        CentralElement::from_coords(j.n, j.coords.into_iter().map(|c| (c.partition, c.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// Coordinates of a central `h` on the Geck-Rouquier basis.
///
/// The coefficient of `T_{w_mu^-1}` in `f*_lambda` is `v^{-l(w_mu)}
/// delta_{lambda mu}`, so the coordinates can be read off directly; the
/// reconstruction is then compared with `h`.
pub fn decompose_central(h: &HeckeElement) -> Result<CentralElement> {
    if !h.is_central() {
        return Err(Error::NotCentral(h.to_string()));
    }
    let n = h.n();
    let mut z = CentralElement::zero(n);
    for mu in partitions_of(n) {
        let w = w_min(&mu);
        z.add_coord(mu, h.coeff(&w.inverse()).shift(w.length() as i64));
    }
    if z.to_hecke() != *h {
        return Err(Error::Inconsistent(format!(
            "central element {h} is not spanned by the Geck-Rouquier elements"
        )));
    }
    Ok(z)
}

/// `N_alpha(h) = sum_{w in D_alpha} v^{-l(w)} T_w h T_{w^-1}` for `h` central
/// in the Young subalgebra `H_alpha`.
pub fn relative_norm(alpha: &Composition, h: &HeckeElement) -> Result<HeckeElement> {
    let n = alpha.size();
    if h.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: h.n(),
        });
    }
    if let Some((w, _)) = h.terms().find(|(w, _)| !w.in_young_subgroup(alpha)) {
        return Err(Error::NotInYoungSubalgebra(format!("T[{w}] does not lie in H_{alpha}")));
    }
    if !alpha.internal_generators().into_iter().all(|i| h.commutes_with_gen(i)) {
        return Err(Error::NotCentral(format!("{h} is not central in H_{alpha}")));
    }
    let mut reps = min_coset_reps(alpha);
    reps.sort_by_key(|w| w.length());
    // D_alpha is closed under removing left descents, so T_w h T_{w^-1}
    // is built from the shorter s_i w by one generator on each side.
    let mut conj: HashMap<Permutation, HeckeElement> = HashMap::with_capacity(reps.len());
    let mut sum = HeckeElement::zero(n);
    for w in reps {
        let x = match (1..n).find(|&i| w.has_left_descent(i)) {
            None => h.clone(),
            Some(i) => conj[&w.mul_simple_left(i)].gen_mul_t(i).t_mul_gen(i),
        };
        sum = &sum + &x.scale(&RatFun::v_pow(-(w.length() as i64)));
        conj.insert(w, x);
    }
    Ok(sum)
}

fn circ_basis(mu: &Partition, lambda: &Partition) -> Arc<CentralElement> {
    CIRC.get_or_init(&(mu.clone(), lambda.clone()), || {
        let alpha = Composition::new(vec![mu.size(), lambda.size()]).expect("positive parts");
        let h = embed_from_young(&alpha, &[gr_element(mu), gr_element(lambda)]).expect("block sizes match");
        let norm = relative_norm(&alpha, &h).expect("f* elements are central");
        decompose_central(&norm).expect("relative norms of central elements are central")
    })
}

/// The product `z_1 o z_2` of `Z`.
pub fn circ(z1: &CentralElement, z2: &CentralElement) -> CentralElement {
    if z1.n == 0 {
        return z2.scale(&z1.coord(&Partition::empty()));
    }
    if z2.n == 0 {
        return z1.scale(&z2.coord(&Partition::empty()));
    }
    let mut out = CentralElement::zero(z1.n + z2.n);
    for (mu, a) in &z1.coords {
        for (lambda, b) in &z2.coords {
            let c = a * b;
            for (nu, d) in &circ_basis(mu, lambda).coords {
                out.add_coord(nu.clone(), d * &c);
            }
        }
    }
    out
}

fn iterated_circ(lambda: &Partition, block: impl Fn(usize) -> CentralElement) -> CentralElement {
    lambda
        .parts()
        .iter()
        .fold(CentralElement::unit(0), |acc, &k| circ(&acc, &block(k)))
}

/// `N_lambda(1)`.
pub fn norm_one(lambda: &Partition) -> CentralElement {
    iterated_circ(lambda, CentralElement::unit)
}

fn tsq_block(k: usize) -> CentralElement {
    let w0 = longest_in_young(&Composition::new(vec![k]).expect("positive part"));
    decompose_central(&t_tilde_sq(&w0)).expect("T~^2 of the longest element is central")
}

/// `N_lambda(T~^2_{w0_lambda})`.
pub fn norm_tsq(lambda: &Partition) -> CentralElement {
    iterated_circ(lambda, tsq_block)
}

/// `N_lambda(F_lambda)` with `F_lambda = f*_{(lambda_1)} x f*_{(lambda_2)} x ...`.
pub fn norm_f(lambda: &Partition) -> CentralElement {
    iterated_circ(lambda, |k| CentralElement::basis(&Partition::row(k)))
}

/// The three norm families computed by a single relative norm over
/// `D_lambda`, for cross-checking the iterated products.
pub fn norm_direct(lambda: &Partition, kind: NormKind) -> Result<CentralElement> {
    let alpha = lambda.as_composition();
    let blocks: Vec<HeckeElement> = lambda
        .parts()
        .iter()
        .map(|&k| match kind {
            NormKind::One => HeckeElement::one(k),
            NormKind::TildeSq => t_tilde_sq(&longest_in_young(&Composition::new(vec![k]).expect("positive part"))),
            NormKind::F => gr_element(&Partition::row(k)),
        })
        .collect();
    let h = embed_from_young(&alpha, &blocks)?;
    decompose_central(&relative_norm(&alpha, &h)?)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NormKind {
    One,
    TildeSq,
    F,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn rf(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    fn central(n: usize, c: &[(&[usize], &str)]) -> CentralElement {
        CentralElement::from_coords(n, c.iter().map(|(l, x)| (part(l), rf(x)))).unwrap()
    }

    #[test]
    fn class_polynomials_of_longest_element_in_s3() {
        let t = class_polynomials(3);
        let w0 = Permutation::from_one_line(&[3, 2, 1]).unwrap();
        assert_eq!(t.get(&w0, &part(&[3])), rf("v - 1"));
        assert_eq!(t.get(&w0, &part(&[2, 1])), rf("v"));
        assert_eq!(t.get(&w0, &part(&[1, 1, 1])), rf("0"));
        for lambda in partitions_of(4) {
            let row = t_row(&class_polynomials(4), &w_min(&lambda));
            assert_eq!(row, vec![lambda.clone()]);
        }
    }

    fn t_row(t: &ClassPolyTable, w: &Permutation) -> Vec<Partition> {
        t.row(w)
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .inspect(|(_, c)| assert!(c.is_one()))
            .map(|(l, _)| l)
            .collect()
    }

    #[test]
    fn small_gr_elements() {
        assert_eq!(gr_element(&part(&[1, 1, 1])), HeckeElement::one(3));
        let s = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(gr_element(&part(&[2])), HeckeElement::monomial(s, RatFun::v_pow(-1)));
        for lambda in partitions_of(4) {
            assert!(gr_element(&lambda).is_central(), "{lambda}");
        }
        assert_eq!(gr_element(&Partition::empty()), HeckeElement::one(0));
    }

    #[test]
    fn decomposition() {
        for lambda in partitions_of(3) {
            assert_eq!(
                decompose_central(&gr_element(&lambda)).unwrap(),
                CentralElement::basis(&lambda)
            );
        }
        assert_eq!(
            decompose_central(&HeckeElement::one(3)).unwrap(),
            CentralElement::unit(3)
        );
        assert!(matches!(
            decompose_central(&HeckeElement::generator(3, 1)),
            Err(Error::NotCentral(_))
        ));
    }

    #[test]
    fn relative_norm_examples() {
        let c = |v: Vec<usize>| Composition::new(v).unwrap();
        let n11 = relative_norm(&c(vec![1, 1]), &HeckeElement::one(2)).unwrap();
        let s = Permutation::from_one_line(&[2, 1]).unwrap();
        let expect = HeckeElement::from_terms(2, [(Permutation::identity(2), rf("2")), (s, rf("(v - 1)/v"))]).unwrap();
        assert_eq!(n11, expect);
        assert_eq!(
            decompose_central(&n11).unwrap(),
            central(2, &[(&[1, 1], "2"), (&[2], "v - 1")])
        );
        let g = gr_element(&part(&[2, 1]));
        assert_eq!(relative_norm(&c(vec![3]), &g).unwrap(), g);
        assert!(relative_norm(&c(vec![1, 2]), &HeckeElement::generator(3, 1)).is_err());
        assert!(matches!(
            relative_norm(&c(vec![3]), &HeckeElement::generator(3, 1)),
            Err(Error::NotCentral(_))
        ));
    }

    #[test]
    fn circ_examples() {
        let f1 = CentralElement::basis(&part(&[1]));
        assert_eq!(circ(&f1, &f1), central(2, &[(&[1, 1], "2"), (&[2], "v - 1")]));
        let f2 = CentralElement::basis(&part(&[2]));
        assert_eq!(circ(&f2, &f1), circ(&f1, &f2));
        assert_eq!(circ(&f2, &CentralElement::unit(0)), f2);
    }

    #[test]
    fn norm_families_small() {
        assert_eq!(norm_one(&part(&[1, 1])), central(2, &[(&[1, 1], "2"), (&[2], "v - 1")]));
        assert_eq!(norm_tsq(&part(&[2])), central(2, &[(&[1, 1], "1"), (&[2], "v - 1")]));
        assert_eq!(norm_f(&part(&[1, 1])), norm_one(&part(&[1, 1])));
        for lambda in partitions_of(4) {
            assert_eq!(norm_direct(&lambda, NormKind::One).unwrap(), norm_one(&lambda));
            assert_eq!(norm_direct(&lambda, NormKind::TildeSq).unwrap(), norm_tsq(&lambda));
            assert_eq!(norm_direct(&lambda, NormKind::F).unwrap(), norm_f(&lambda));
        }
    }

    #[test]
    fn json_round_trips() {
        let z = central(3, &[(&[2, 1], "v - 1")]);
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"{"n":3,"coords":[{"partition":[2,1],"coeff":"v - 1"}]}"#);
        assert_eq!(serde_json::from_str::<CentralElement>(&s).unwrap(), z);
        let t = class_polynomials(3);
        let back: ClassPolyTable = serde_json::from_str(&serde_json::to_string(t.as_ref()).unwrap()).unwrap();
        assert_eq!(&back, t.as_ref());
    }
}
