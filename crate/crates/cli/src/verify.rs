//! Identity suites behind `heckez verify`.
//!
//! Each identity is checked exactly at a single degree `n`; a failure carries
//! a human-readable counterexample.

use std::fmt;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use heckez::center::{
    circ, class_polynomials, decompose_central, gr_element, norm_direct, norm_f, norm_one, norm_tsq, relative_norm,
    NormKind,
};
use heckez::charmap::{
    central_idempotent, central_idempotent_from_gr, ch_v, character_from_idempotent, character_table, classical_psi,
    family_transition, generic_degree, induce, psi, psi_inv, schur_element, theta, CentralFamily,
};
use heckez::combinatorics::{compositions_of, partitions_of, standard_tableaux_count, z_factor};
use heckez::hecke::{bilinear, t_check, t_tilde_sq};
use heckez::symfunc::{
    cauchy_check, d_matrix, h_bar, hall_inner, m_bar, plethysm_scale, specialize_v1, transition_matrix, Plethysm,
};
use heckez::symgroup::{longest_in_young, w_min};
use heckez::{
    Basis, CentralElement, Composition, HeckeElement, Partition, Permutation, RatFun, SymFun, TransitionMatrix,
    VirtualCharacter,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T>(r: heckez::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub struct Identity {
    pub name: &'static str,
    pub about: &'static str,
    /// Largest `n` the suite runs at; above it the identity is reported as skipped.
    pub max_n: usize,
    check: fn(usize) -> Check,
}

const ANY: usize = usize::MAX;

pub const IDENTITIES: &[Identity] = &[
    Identity {
        name: "braid",
        about: "quadratic and braid relations of the generators",
        max_n: ANY,
        check: braid,
    },
    Identity {
        name: "tau-symmetric",
        about: "tau(ab) = tau(ba) on 1000 random pairs",
        max_n: ANY,
        check: tau_symmetric,
    },
    Identity {
        name: "dual-basis",
        about: "tau(T_w T_u^check) = delta_{w,u}",
        max_n: 5,
        check: dual_basis,
    },
    Identity {
        name: "classpoly",
        about: "class polynomials are integral and specialize to class indicators",
        max_n: ANY,
        check: classpoly,
    },
    Identity {
        name: "gr-central",
        about: "f*_lambda is central and specializes to the class sum",
        max_n: ANY,
        check: gr_central,
    },
    Identity {
        name: "decompose",
        about: "decomposition on the f* basis inverts the basis map",
        max_n: ANY,
        check: decompose,
    },
    Identity {
        name: "eq-nt2",
        about: "coordinates of T~^2_{w0} are (v-1)^{n-l(mu)}",
        max_n: ANY,
        check: eq_nt2,
    },
    Identity {
        name: "lascoux",
        about: "N_alpha(1) counts 0-1 matrices and depends only on sort(alpha)",
        max_n: ANY,
        check: lascoux,
    },
    Identity {
        name: "norm-direct",
        about: "direct relative norms agree with iterated circ products",
        max_n: ANY,
        check: norm_direct_agrees,
    },
    Identity {
        name: "transitions",
        about: "norm families have transition matrices M(e,m)D, M(h,m)D, D^-1 M(p,m)D",
        max_n: ANY,
        check: transitions,
    },
    Identity {
        name: "circ",
        about: "circ is unital, commutative and associative",
        max_n: ANY,
        check: circ_laws,
    },
    Identity {
        name: "thm44",
        about: "psi of f*, e_v, N(1), N(T~^2), N(F)",
        max_n: ANY,
        check: frobenius_images,
    },
    Identity {
        name: "psi-mult",
        about: "psi(a circ b) = psi(a) psi(b) on basis pairs",
        max_n: ANY,
        check: psi_mult,
    },
    Identity {
        name: "psi-inverse",
        about: "psi_inv inverts psi",
        max_n: ANY,
        check: psi_inverse,
    },
    Identity {
        name: "dual-ram",
        about: "sum_mu chi^lambda(T_{w_mu}) m_bar_mu = s_lambda",
        max_n: ANY,
        check: dual_ram,
    },
    Identity {
        name: "chartable",
        about: "degrees, v = 1 orthogonality, generic degrees, trace decomposition",
        max_n: ANY,
        check: chartable,
    },
    Identity {
        name: "mn-oracle",
        about: "table at v = 1 equals the Murnaghan-Nakayama table",
        max_n: ANY,
        check: mn_oracle,
    },
    Identity {
        name: "chars-regular",
        about: "regular trace of T_{w_mu} is sum_lambda f^lambda chi^lambda",
        max_n: ANY,
        check: chars_regular,
    },
    Identity {
        name: "chars-idempotent",
        about: "characters recovered through central idempotents",
        max_n: 5,
        check: chars_idempotent,
    },
    Identity {
        name: "idempotents",
        about: "e_v are orthogonal idempotents summing to 1",
        max_n: 5,
        check: idempotents,
    },
    Identity {
        name: "specialization",
        about: "m_bar at v = 1 and psi at v = 1",
        max_n: ANY,
        check: specialization,
    },
    Identity {
        name: "cauchy",
        about: "deformed Cauchy identity in 2n variables",
        max_n: ANY,
        check: cauchy,
    },
    Identity {
        name: "chv",
        about: "ch_v(chi^lambda) = s_lambda",
        max_n: ANY,
        check: chv,
    },
    Identity {
        name: "theta",
        about: "psi(theta(chi)) = ch_v(chi) and theta(chi^lambda) = kappa e_v",
        max_n: ANY,
        check: theta_diagram,
    },
    Identity {
        name: "induce",
        about: "ch_v(induce(a, b)) = ch_v(a) ch_v(b)",
        max_n: ANY,
        check: induction,
    },
    Identity {
        name: "symfunc-inverse",
        about: "M(u,m) M(m,u) = I",
        max_n: ANY,
        check: symfunc_inverse,
    },
    Identity {
        name: "hbar-duality",
        about: "<h_bar_lambda, m_bar_mu> = delta",
        max_n: ANY,
        check: hbar_duality,
    },
    Identity {
        name: "zero-one",
        about: "e_alpha on m counts 0-1 matrices",
        max_n: ANY,
        check: zero_one,
    },
];

/// Resolves `all` or a comma-separated list of identity names.
pub fn select(selector: &str) -> Result<Vec<&'static Identity>, String> {
    if selector.trim() == "all" {
        return Ok(IDENTITIES.iter().collect());
    }
    let mut out = Vec::new();
    for name in selector.split(',').map(str::trim) {
        let id = IDENTITIES.iter().find(|i| i.name == name).ok_or_else(|| {
            let known: Vec<&str> = IDENTITIES.iter().map(|i| i.name).collect();
            format!(
                "unknown identity {name:?}; expected all or one of: {}",
                known.join(", ")
            )
        })?;
        if !out.iter().any(|o: &&Identity| o.name == id.name) {
            out.push(id);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub identity: String,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub outcomes: Vec<Outcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let status = match o.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            write!(f, "{status} {:<17} n={} ({} ms)", o.identity, o.n, o.elapsed_ms)?;
            if let Some(c) = &o.counterexample {
                write!(f, ": {c}")?;
            }
            writeln!(f)?;
        }
        let failed = self.outcomes.iter().filter(|o| o.status == Status::Fail).count();
        writeln!(f, "{} identities checked, {failed} failed", self.outcomes.len())
    }
}

/// Runs the identities in parallel; the report keeps the order of `ids`.
pub fn run(n: usize, ids: &[&Identity]) -> VerificationReport {
    let outcomes = ids
        .par_iter()
        .map(|id| {
            let start = Instant::now();
            let (status, counterexample) = if n > id.max_n {
                (Status::Skipped, None)
            } else {
                match panic::catch_unwind(AssertUnwindSafe(|| (id.check)(n))) {
                    Ok(Ok(())) => (Status::Pass, None),
                    Ok(Err(c)) => (Status::Fail, Some(c)),
                    Err(p) => {
                        let msg = p
                            .downcast_ref::<String>()
                            .cloned()
                            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                            .unwrap_or_else(|| "panic".to_string());
                        (Status::Fail, Some(format!("panicked: {msg}")))
                    }
                }
            };
            Outcome {
                identity: id.name.to_string(),
                n,
                status,
                counterexample,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect();
    VerificationReport { outcomes }
}

fn vm1_pow(k: usize) -> RatFun {
    RatFun::v_minus_one().pow(k as i32).expect("v - 1 is nonzero")
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn contracted(basis: Basis, lambda: &Partition) -> SymFun {
    plethysm_scale(&SymFun::basis_element(basis, lambda), Plethysm::Contract)
}

/// Partitions of every size in `1..=n`.
fn generators(n: usize) -> Vec<Partition> {
    (1..=n).flat_map(partitions_of).collect()
}

fn braid(n: usize) -> Check {
    let t = |i| HeckeElement::generator(n, i);
    let quad = |i| &t(i).scale(&RatFun::v_minus_one()) + &HeckeElement::one(n).scale(&RatFun::v());
    for i in 1..n {
        ensure!(lib(t(i).mul(&t(i)))? == quad(i), "T_{i}^2 != (v-1)T_{i} + v");
        for j in 1..n {
            let (lhs, rhs) = if i.abs_diff(j) == 1 {
                (
                    lib(lib(t(i).mul(&t(j)))?.mul(&t(i)))?,
                    lib(lib(t(j).mul(&t(i)))?.mul(&t(j)))?,
                )
            } else {
                (lib(t(i).mul(&t(j)))?, lib(t(j).mul(&t(i)))?)
            };
            ensure!(lhs == rhs, "relation between T_{i} and T_{j} fails");
        }
    }
    Ok(())
}

fn random_element(perms: &[Permutation], rng: &mut ChaCha8Rng) -> HeckeElement {
    let n = perms[0].n();
    let terms = (0..3).map(|_| {
        let mut c = RatFun::from_int(rng.gen_range(-3..=3)).shift(rng.gen_range(-2..=2));
        if rng.gen_bool(0.2) {
            c = (&c + &RatFun::one())
                .div(&RatFun::v_pow_minus_one(rng.gen_range(1..3)))
                .expect("nonzero");
        }
        (perms.choose(rng).expect("nonempty").clone(), c)
    });
    HeckeElement::from_terms(n, terms.collect::<Vec<_>>()).expect("matching sizes")
}

fn tau_symmetric(n: usize) -> Check {
    let perms = Permutation::all(n);
    let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
    for _ in 0..1000 {
        let (a, b) = (random_element(&perms, &mut rng), random_element(&perms, &mut rng));
        ensure!(
            lib(bilinear(&a, &b))? == lib(bilinear(&b, &a))?,
            "tau(ab) != tau(ba) for a = {a}, b = {b}"
        );
    }
    Ok(())
}

fn dual_basis(n: usize) -> Check {
    let perms = Permutation::all(n);
    for w in &perms {
        let tw = HeckeElement::t(w);
        for u in &perms {
            let got = lib(bilinear(&tw, &t_check(u)))?;
            let expect = if w == u { RatFun::one() } else { RatFun::zero() };
            ensure!(got == expect, "tau(T_[{w}] T_[{u}]^check) = {got}");
        }
    }
    Ok(())
}

fn classpoly(n: usize) -> Check {
    let t = class_polynomials(n);
    for (w, row) in t.rows() {
        for (lambda, f) in t.partitions().iter().zip(row) {
            ensure!(
                f.is_laurent_integral(),
                "f_[{w}],{lambda} = {f} is not a Laurent polynomial"
            );
            let at_one = lib(f.eval_at_one())?;
            let expect = int(i64::from(*lambda == w.cycle_type()));
            ensure!(at_one == expect, "f_[{w}],{lambda}(1) = {at_one}");
        }
    }
    for lambda in t.partitions() {
        let row = t.row(&w_min(lambda));
        let delta = row
            .iter()
            .all(|(mu, f)| if mu == lambda { f.is_one() } else { f.is_zero() });
        ensure!(delta, "row of w_min({lambda}) is not a delta row");
    }
    Ok(())
}

fn gr_central(n: usize) -> Check {
    for lambda in partitions_of(n) {
        let g = gr_element(&lambda);
        ensure!(g.is_central(), "f*_{lambda} is not central");
        let classes = lib(g.specialize_v1())?
            .class_sum_coords()
            .ok_or_else(|| format!("f*_{lambda} at v = 1 is not a combination of class sums"))?;
        let ok = classes.len() == 1 && classes.get(&lambda) == Some(&BigRational::one());
        ensure!(ok, "f*_{lambda} at v = 1 is not the class sum");
    }
    Ok(())
}

fn decompose(n: usize) -> Check {
    for lambda in partitions_of(n) {
        let z = lib(decompose_central(&gr_element(&lambda)))?;
        ensure!(
            z == CentralElement::basis(&lambda),
            "decomposition of f*_{lambda} is {z}"
        );
    }
    if n >= 3 {
        let s1 = HeckeElement::generator(n, 1);
        ensure!(
            decompose_central(&s1).is_err(),
            "T_1 was decomposed as a central element"
        );
    }
    Ok(())
}

fn eq_nt2(n: usize) -> Check {
    let alpha = Composition::new(if n == 0 { vec![] } else { vec![n] }).expect("positive parts");
    let z = lib(decompose_central(&t_tilde_sq(&longest_in_young(&alpha))))?;
    for mu in partitions_of(n) {
        let expect = vm1_pow(n - mu.len());
        ensure!(
            z.coord(&mu) == expect,
            "coordinate at {mu} is {}, expected {expect}",
            z.coord(&mu)
        );
    }
    Ok(())
}

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`,
/// choosing each row's support independently.
fn zero_one_oracle(rows: &[usize], cols: &[usize]) -> u64 {
    fn go(rows: &[usize], left: &mut [usize]) -> u64 {
        let Some((&r, rest)) = rows.split_first() else {
            return u64::from(left.iter().all(|&c| c == 0));
        };
        let width = left.len();
        let mut total = 0;
        for mask in 0u32..1 << width {
            if mask.count_ones() as usize != r || (0..width).any(|j| mask >> j & 1 == 1 && left[j] == 0) {
                continue;
            }
            (0..width).filter(|j| mask >> j & 1 == 1).for_each(|j| left[j] -= 1);
            total += go(rest, left);
            (0..width).filter(|j| mask >> j & 1 == 1).for_each(|j| left[j] += 1);
        }
        total
    }
    go(rows, &mut cols.to_vec())
}

fn lascoux(n: usize) -> Check {
    for alpha in compositions_of(n) {
        let z = lib(decompose_central(&lib(relative_norm(&alpha, &HeckeElement::one(n)))?))?;
        for mu in partitions_of(n) {
            let b = zero_one_oracle(alpha.parts(), mu.parts());
            let expect = vm1_pow(n - mu.len()).scale_int(&BigInt::from(b));
            ensure!(
                z.coord(&mu) == expect,
                "N_{alpha}(1) at {mu} is {}, expected {expect}",
                z.coord(&mu)
            );
        }
        ensure!(z == norm_one(&alpha.sorted()), "N_{alpha}(1) != N_sort(1)");
    }
    Ok(())
}

fn norm_direct_agrees(n: usize) -> Check {
    for lambda in partitions_of(n) {
        for (kind, iterated) in [
            (NormKind::One, norm_one(&lambda)),
            (NormKind::TildeSq, norm_tsq(&lambda)),
            (NormKind::F, norm_f(&lambda)),
        ] {
            let direct = lib(norm_direct(&lambda, kind))?;
            ensure!(
                direct == iterated,
                "{kind:?} norm at {lambda}: direct {direct}, iterated {iterated}"
            );
        }
    }
    Ok(())
}

fn transitions(n: usize) -> Check {
    let d = d_matrix(n);
    let expect = [
        (CentralFamily::N1, transition_matrix(Basis::E, Basis::M, n).mul(&d)),
        (CentralFamily::NT2, transition_matrix(Basis::H, Basis::M, n).mul(&d)),
        (
            CentralFamily::NF,
            lib(d.inverse())?.mul(&transition_matrix(Basis::P, Basis::M, n)).mul(&d),
        ),
    ];
    for (family, m) in expect {
        let got = lib(family_transition(family, CentralFamily::GR, n))?;
        ensure!(got.same_entries(&m), "{family} -> GR differs at n = {n}");
    }
    Ok(())
}

fn circ_laws(n: usize) -> Check {
    let unit = CentralElement::unit(0);
    for lambda in partitions_of(n) {
        let z = CentralElement::basis(&lambda);
        ensure!(
            circ(&unit, &z) == z && circ(&z, &unit) == z,
            "unit law fails at {lambda}"
        );
    }
    let gens = generators(n);
    let basis = |p: &Partition| CentralElement::basis(p);
    for a in &gens {
        for b in gens.iter().filter(|b| a.size() + b.size() <= n) {
            if a.size() + b.size() == n {
                ensure!(
                    circ(&basis(a), &basis(b)) == circ(&basis(b), &basis(a)),
                    "{a} o {b} != {b} o {a}"
                );
            }
            for c in gens.iter().filter(|c| a.size() + b.size() + c.size() == n) {
                let lhs = circ(&circ(&basis(a), &basis(b)), &basis(c));
                let rhs = circ(&basis(a), &circ(&basis(b), &basis(c)));
                ensure!(lhs == rhs, "({a} o {b}) o {c} != {a} o ({b} o {c})");
            }
        }
    }
    Ok(())
}

fn frobenius_images(n: usize) -> Check {
    for lambda in partitions_of(n) {
        let l = lambda.len();
        let kappa_inv = lib(schur_element(&lambda).inv())?;
        let e = lib(decompose_central(&central_idempotent(&lambda)))?;
        let cases = [
            (
                "f*",
                psi(&CentralElement::basis(&lambda)),
                contracted(Basis::M, &lambda).scale(&vm1_pow(l)),
            ),
            (
                "e_v",
                psi(&e),
                SymFun::basis_element(Basis::S, &lambda).scale(&kappa_inv),
            ),
            (
                "N(1)",
                psi(&norm_one(&lambda)),
                contracted(Basis::E, &lambda).scale(&vm1_pow(n)),
            ),
            (
                "N(T~^2)",
                psi(&norm_tsq(&lambda)),
                contracted(Basis::H, &lambda).scale(&vm1_pow(n)),
            ),
            (
                "N(F)",
                psi(&norm_f(&lambda)),
                contracted(Basis::P, &lambda).scale(&vm1_pow(l)),
            ),
        ];
        for (name, got, expect) in cases {
            ensure!(got == expect, "psi({name}_{lambda}) = {got}, expected {expect}");
        }
    }
    Ok(())
}

fn psi_mult(n: usize) -> Check {
    let gens = generators(n);
    for a in &gens {
        for b in gens.iter().filter(|b| a.size() + b.size() == n) {
            let (x, y) = (CentralElement::basis(a), CentralElement::basis(b));
            ensure!(
                psi(&circ(&x, &y)) == psi(&x).mul(&psi(&y)),
                "psi(f*_{a} o f*_{b}) != psi(f*_{a}) psi(f*_{b})"
            );
        }
    }
    Ok(())
}

fn psi_inverse(n: usize) -> Check {
    for lambda in partitions_of(n) {
        ensure!(
            psi_inv(&m_bar(&lambda)) == CentralElement::basis(&lambda),
            "psi_inv(m_bar_{lambda}) != f*_{lambda}"
        );
        let s = SymFun::basis_element(Basis::S, &lambda);
        ensure!(psi(&psi_inv(&s)) == s, "psi(psi_inv(s_{lambda})) != s_{lambda}");
    }
    Ok(())
}

fn dual_ram(n: usize) -> Check {
    let t = character_table(n);
    for lambda in t.partitions() {
        let mut sum = SymFun::zero(n, Basis::M);
        for mu in t.partitions() {
            sum = lib(sum.add(&m_bar(mu).scale(&t.entry(lambda, mu))))?;
        }
        ensure!(
            sum == SymFun::basis_element(Basis::S, lambda),
            "sum for {lambda} is {sum}"
        );
    }
    Ok(())
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn chartable(n: usize) -> Check {
    let t = character_table(n);
    let parts = partitions_of(n);
    let at_one = |l: &Partition, m: &Partition| t.entry(l, m).eval_at_one();
    let ones = Partition::column(n);
    for lambda in &parts {
        let deg = lib(at_one(lambda, &ones))?;
        ensure!(
            deg == int(standard_tableaux_count(lambda) as i64),
            "chi^{lambda}(1) = {deg}"
        );
        let d = generic_degree(lambda);
        ensure!(d.is_polynomial(), "generic degree of {lambda} is {d}");
        ensure!(
            lib(d.eval_at_one())? == deg,
            "generic degree of {lambda} at v = 1 is not the degree"
        );
        for rho in &parts {
            let mut sum = BigRational::zero();
            for mu in &parts {
                sum += BigRational::new(factorial(n).into(), z_factor(mu).into())
                    * lib(at_one(lambda, mu))?
                    * lib(at_one(rho, mu))?;
            }
            let expect = if lambda == rho {
                int(factorial(n) as i64)
            } else {
                BigRational::zero()
            };
            ensure!(sum == expect, "v = 1 orthogonality fails for {lambda}, {rho}");
        }
    }
    // tau(T_w) = sum_lambda chi^lambda(T_w) / kappa_lambda
    for mu in &parts {
        let mut tau = RatFun::zero();
        for lambda in &parts {
            tau = &tau + &lib(t.entry(lambda, mu).div(&schur_element(lambda)))?;
        }
        let expect = if *mu == ones { RatFun::one() } else { RatFun::zero() };
        ensure!(tau == expect, "sum_lambda chi^lambda(T_w_{mu}) / kappa_lambda = {tau}");
    }
    Ok(())
}

/// `chi^lambda(mu)` for `S_n` by border-strip removal on beta-sets.
pub fn murnaghan_nakayama(lambda: &[usize], mu: &[usize]) -> i64 {
    fn go(beta: &mut Vec<usize>, mu: &[usize]) -> i64 {
        let Some((&k, rest)) = mu.split_first() else {
            return 1;
        };
        let mut total = 0;
        for i in 0..beta.len() {
            let b = beta[i];
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > b - k && x < b).count();
            beta[i] = b - k;
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * go(beta, rest);
            beta[i] = b;
        }
        total
    }
    let l = lambda.len();
    let mut beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    go(&mut beta, mu)
}

fn mn_oracle(n: usize) -> Check {
    let t = character_table(n);
    for lambda in t.partitions() {
        for mu in t.partitions() {
            let got = lib(t.entry(lambda, mu).eval_at_one())?;
            let expect = int(murnaghan_nakayama(lambda.parts(), mu.parts()));
            ensure!(got == expect, "chi^{lambda}({mu}) at v = 1 is {got}, expected {expect}");
        }
    }
    Ok(())
}

fn chars_regular(n: usize) -> Check {
    let t = character_table(n);
    let perms = Permutation::all(n);
    for mu in t.partitions() {
        let tw = HeckeElement::t(&w_min(mu));
        let mut trace = RatFun::zero();
        for x in &perms {
            trace = &trace + &lib(tw.mul(&HeckeElement::t(x)))?.coeff(x);
        }
        let mut expect = RatFun::zero();
        for lambda in t.partitions() {
            expect = &expect
                + &t.entry(lambda, mu)
                    .scale_int(&BigInt::from(standard_tableaux_count(lambda)));
        }
        ensure!(
            trace == expect,
            "regular trace of T_w_{mu} is {trace}, expected {expect}"
        );
    }
    Ok(())
}

fn chars_idempotent(n: usize) -> Check {
    let t = character_table(n);
    for lambda in t.partitions() {
        for mu in t.partitions() {
            let got = lib(character_from_idempotent(lambda, &HeckeElement::t(&w_min(mu))))?;
            ensure!(
                got == t.entry(lambda, mu),
                "chi^{lambda}(T_w_{mu}) through e_v is {got}"
            );
        }
    }
    Ok(())
}

fn idempotents(n: usize) -> Check {
    let parts = partitions_of(n);
    let mut total = HeckeElement::zero(n);
    for a in &parts {
        let ea = central_idempotent(a);
        ensure!(
            lib(decompose_central(&ea))? == central_idempotent_from_gr(a),
            "two formulas for e_{a} differ"
        );
        for b in &parts {
            let prod = lib(ea.mul(&central_idempotent(b)))?;
            let ok = if a == b { prod == ea } else { prod.is_zero() };
            ensure!(ok, "e_{a} e_{b} is wrong");
        }
        total = &total + &ea;
    }
    ensure!(total == HeckeElement::one(n), "idempotents do not sum to 1");
    Ok(())
}

fn specialization(n: usize) -> Check {
    for lambda in partitions_of(n) {
        let got = lib(specialize_v1(&m_bar(&lambda)))?;
        let z = RatFun::from_int(z_factor(&lambda) as i64);
        let expect = SymFun::basis_element(Basis::P, &lambda).scale(&lib(z.inv())?);
        ensure!(got == expect, "m_bar_{lambda} at v = 1 is {got}");
        let lhs = lib(specialize_v1(&psi(&CentralElement::basis(&lambda))))?;
        let classes = lib(gr_element(&lambda).specialize_v1())?
            .class_sum_coords()
            .ok_or_else(|| format!("f*_{lambda} at v = 1 is not a class function"))?;
        let rhs = lib(classical_psi(n, &classes))?;
        ensure!(lhs == rhs, "psi(f*_{lambda}) at v = 1 is {lhs}, classical image {rhs}");
    }
    Ok(())
}

fn cauchy(n: usize) -> Check {
    ensure!(lib(cauchy_check(n, n))?, "deformed Cauchy identity fails at n = {n}");
    Ok(())
}

fn chv(n: usize) -> Check {
    for lambda in partitions_of(n) {
        let got = lib(ch_v(&VirtualCharacter::irreducible(&lambda)))?;
        ensure!(
            got == SymFun::basis_element(Basis::S, &lambda),
            "ch_v(chi^{lambda}) = {got}"
        );
    }
    Ok(())
}

fn theta_diagram(n: usize) -> Check {
    for lambda in partitions_of(n) {
        let chi = VirtualCharacter::irreducible(&lambda);
        let th = lib(theta(&chi))?;
        ensure!(
            psi(&th) == lib(ch_v(&chi))?,
            "psi(theta(chi^{lambda})) != ch_v(chi^{lambda})"
        );
        let e = lib(decompose_central(&central_idempotent(&lambda)))?;
        ensure!(
            th == e.scale(&schur_element(&lambda)),
            "theta(chi^{lambda}) != kappa e_{lambda}"
        );
    }
    Ok(())
}

fn induction(n: usize) -> Check {
    let gens = generators(n);
    for a in &gens {
        for b in gens.iter().filter(|b| a.size() + b.size() == n) {
            let (x, y) = (VirtualCharacter::irreducible(a), VirtualCharacter::irreducible(b));
            let ind = lib(induce(&x, &y))?;
            let integral = ind
                .coords()
                .all(|(_, c)| c.as_rational().is_some_and(|q| q.is_integer()));
            ensure!(integral, "induce(chi^{a}, chi^{b}) = {ind} is not integral");
            ensure!(
                lib(ch_v(&ind))? == lib(ch_v(&x))?.mul(&lib(ch_v(&y))?),
                "ch_v(induce(chi^{a}, chi^{b})) != s_{a} s_{b}"
            );
        }
    }
    Ok(())
}

fn symfunc_inverse(n: usize) -> Check {
    for u in [Basis::E, Basis::H, Basis::P, Basis::S] {
        let prod = transition_matrix(u, Basis::M, n).mul(&transition_matrix(Basis::M, u, n));
        ensure!(
            prod.same_entries(&TransitionMatrix::identity(n, "m")),
            "M({u},m) M(m,{u}) != I"
        );
    }
    Ok(())
}

fn hbar_duality(n: usize) -> Check {
    let parts = partitions_of(n);
    for lambda in &parts {
        for mu in &parts {
            let got = lib(hall_inner(&h_bar(lambda), &m_bar(mu)))?;
            let expect = if lambda == mu { RatFun::one() } else { RatFun::zero() };
            ensure!(got == expect, "<h_bar_{lambda}, m_bar_{mu}> = {got}");
        }
    }
    Ok(())
}

fn zero_one(n: usize) -> Check {
    for alpha in compositions_of(n) {
        let e_alpha = alpha
            .parts()
            .iter()
            .map(|&k| SymFun::basis_element(Basis::E, &Partition::row(k)))
            .fold(SymFun::basis_element(Basis::E, &Partition::empty()), |acc, f| {
                acc.mul(&f)
            })
            .convert(Basis::M);
        for mu in partitions_of(n) {
            let expect = RatFun::from_int(zero_one_oracle(alpha.parts(), mu.parts()) as i64);
            ensure!(
                e_alpha.coeff(&mu) == expect,
                "[m_{mu}] e_{alpha} = {}, expected {expect}",
                e_alpha.coeff(&mu)
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_parsing() {
        assert_eq!(select("all").unwrap().len(), IDENTITIES.len());
        let ids = select("eq-nt2, thm44,eq-nt2").unwrap();
        assert_eq!(ids.iter().map(|i| i.name).collect::<Vec<_>>(), ["eq-nt2", "thm44"]);
        assert!(select("bogus").is_err());
    }

    #[test]
    fn oracles_small_cases() {
        assert_eq!(zero_one_oracle(&[1, 1], &[1, 1]), 2);
        assert_eq!(zero_one_oracle(&[2], &[1, 1]), 1);
        assert_eq!(zero_one_oracle(&[2], &[2]), 0);
        // S_3: chi^{(2,1)} = (2, 0, -1) on classes (1,1,1), (2,1), (3)
        assert_eq!(murnaghan_nakayama(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(murnaghan_nakayama(&[2, 1], &[2, 1]), 0);
        assert_eq!(murnaghan_nakayama(&[2, 1], &[3]), -1);
        assert_eq!(murnaghan_nakayama(&[1, 1, 1], &[2, 1]), -1);
    }

    #[test]
    fn everything_passes_at_small_n() {
        for n in 0..=3 {
            let report = run(n, &select("all").unwrap());
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn skipped_above_the_cap() {
        let report = run(6, &select("idempotents").unwrap());
        assert_eq!(report.outcomes[0].status, Status::Skipped);
        assert!(report.passed());
    }
}
