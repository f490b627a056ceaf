//! Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
//! exact (tolerance zero); expected values come from oracles in this file.

use std::collections::BTreeMap;
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use heckez::center::{circ, decompose_central, gr_element, norm_f, norm_one, norm_tsq, relative_norm};
use heckez::charmap::{
    central_idempotent, ch_v, character_from_idempotent, character_table, classical_psi, family_transition, induce,
    psi, theta, CentralFamily,
};
use heckez::combinatorics::{compositions_of, partitions_of};
use heckez::hecke::bilinear;
use heckez::symfunc::{cauchy_check, m_bar, specialize_v1};
use heckez::symgroup::w_min;
use heckez::{Basis, CentralElement, HeckeElement, Partition, Permutation, RatFun, SymFun, VirtualCharacter};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T>(r: heckez::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn vm1_pow(k: i64) -> RatFun {
    RatFun::v_minus_one().pow(k as i32).unwrap()
}

fn int(k: i64) -> RatFun {
    RatFun::from_int(k)
}

fn generators(max: usize) -> Vec<Partition> {
    (1..=max).flat_map(partitions_of).collect()
}

// ---- oracles ----

/// Brute-force count of 0-1 matrices with the given margins, cell by cell.
fn zero_one_count(rows: &[usize], cols: &[usize]) -> u64 {
    fn go(cell: usize, rows: &mut [usize], cols: &mut [usize]) -> u64 {
        let width = cols.len();
        if cell == rows.len() * width {
            return u64::from(rows.iter().chain(cols.iter()).all(|&x| x == 0));
        }
        let (i, j) = (cell / width, cell % width);
        let mut total = go(cell + 1, rows, cols);
        if rows[i] > 0 && cols[j] > 0 {
            rows[i] -= 1;
            cols[j] -= 1;
            total += go(cell + 1, rows, cols);
            rows[i] += 1;
            cols[j] += 1;
        }
        total
    }
    go(0, &mut rows.to_vec(), &mut cols.to_vec())
}

/// Count of nonnegative integer matrices with the given margins.
fn nonneg_count(rows: &[usize], cols: &[usize]) -> u64 {
    fn go(cell: usize, rows: &mut [usize], cols: &mut [usize]) -> u64 {
        let width = cols.len();
        if cell == rows.len() * width {
            return u64::from(rows.iter().chain(cols.iter()).all(|&x| x == 0));
        }
        let (i, j) = (cell / width, cell % width);
        let mut total = 0;
        for k in 0..=rows[i].min(cols[j]) {
            rows[i] -= k;
            cols[j] -= k;
            total += go(cell + 1, rows, cols);
            rows[i] += k;
            cols[j] += k;
        }
        total
    }
    go(0, &mut rows.to_vec(), &mut cols.to_vec())
}

/// `[m_mu] p_lambda`: maps from the parts of `lambda` to the parts of `mu`
/// whose fibres sum to the target part.
fn power_sum_count(lambda: &[usize], mu: &[usize]) -> u64 {
    fn go(lambda: &[usize], left: &mut [usize]) -> u64 {
        let Some((&p, rest)) = lambda.split_first() else {
            return u64::from(left.iter().all(|&x| x == 0));
        };
        let mut total = 0;
        for j in 0..left.len() {
            if left[j] >= p {
                left[j] -= p;
                total += go(rest, left);
                left[j] += p;
            }
        }
        total
    }
    go(lambda, &mut mu.to_vec())
}

fn hooks(lambda: &[usize]) -> Vec<usize> {
    let conj = |j: usize| lambda.iter().filter(|&&p| p > j).count();
    let mut out = Vec::new();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            out.push((row - j - 1) + (conj(j) - i - 1) + 1);
        }
    }
    out
}

/// `kappa_lambda = prod_h (v^h - 1) / (v^{n(lambda)} (v - 1)^n)`.
fn schur_element_oracle(lambda: &Partition) -> RatFun {
    let n = lambda.size();
    let n_lambda: usize = lambda.parts().iter().enumerate().map(|(i, &p)| i * p).sum();
    let mut num = RatFun::one();
    for h in hooks(lambda.parts()) {
        num = &num * &RatFun::v_pow_minus_one(h as u32);
    }
    let den = &RatFun::v_pow(n_lambda as i64) * &vm1_pow(n as i64);
    num.div(&den).unwrap()
}

fn z_oracle(lambda: &[usize]) -> u64 {
    let mut counts = BTreeMap::new();
    for &p in lambda {
        *counts.entry(p).or_insert(0u64) += 1;
    }
    counts
        .iter()
        .map(|(&p, &m)| (p as u64).pow(m as u32) * (1..=m).product::<u64>())
        .product()
}

/// `f(x / (v - 1))` computed on the power-sum expansion.
fn contract(f: &SymFun) -> SymFun {
    let p = f.convert(Basis::P);
    let terms = p.terms().map(|(mu, c)| {
        let mut scale = RatFun::one();
        for &k in mu.parts() {
            scale = scale.div(&RatFun::v_pow_minus_one(k as u32)).unwrap();
        }
        (mu.clone(), c * &scale)
    });
    SymFun::from_terms(p.degree(), Basis::P, terms.collect::<Vec<_>>()).unwrap()
}

fn same(a: &SymFun, b: &SymFun) -> bool {
    a.convert(Basis::P) == b.convert(Basis::P)
}

/// Subdiagrams `nu` of `lambda` with `|nu| = size`.
fn subdiagrams(lambda: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(lambda: &[usize], i: usize, cap: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == lambda.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for r in 0..=lambda[i].min(cap).min(left) {
            cur.push(r);
            go(lambda, i + 1, r, left - r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, usize::MAX, size, &mut Vec::new(), &mut out);
    out
}

/// Character of `S_n` by removing border strips `lambda / nu`: the skew rows
/// form an interval `a..=b` and consecutive rows overlap in exactly one column.
fn mn_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let n: usize = lambda.iter().sum();
    let mut total = 0;
    for nu in subdiagrams(lambda, n - k) {
        let rows: Vec<usize> = (0..lambda.len()).filter(|&i| lambda[i] > nu[i]).collect();
        let (a, b) = (rows[0], rows[rows.len() - 1]);
        if rows.len() != b - a + 1 || (a..b).any(|i| lambda[i + 1] != nu[i] + 1) {
            continue;
        }
        let sign = if (b - a) % 2 == 0 { 1 } else { -1 };
        let shape: Vec<usize> = nu.into_iter().filter(|&p| p > 0).collect();
        total += sign * mn_character(&shape, rest);
    }
    total
}

fn cycle_type(w: &Permutation) -> Vec<usize> {
    let images = w.one_line();
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i] - 1;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

// ---- criteria ----

fn frobenius_images() -> Outcome {
    let mut checks = 0;
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            let (l, nn) = (lambda.len() as i64, n as i64);
            let b = |basis| SymFun::basis_element(basis, &lambda);
            let e = ok(decompose_central(&central_idempotent(&lambda)))?;
            let kappa = schur_element_oracle(&lambda);
            let cases = [
                (
                    "f*",
                    psi(&CentralElement::basis(&lambda)),
                    contract(&b(Basis::M)).scale(&vm1_pow(l)),
                ),
                ("e_v", psi(&e), b(Basis::S).scale(&kappa.inv().unwrap())),
                (
                    "N(1)",
                    psi(&norm_one(&lambda)),
                    contract(&b(Basis::E)).scale(&vm1_pow(nn)),
                ),
                (
                    "N(T~^2)",
                    psi(&norm_tsq(&lambda)),
                    contract(&b(Basis::H)).scale(&vm1_pow(nn)),
                ),
                ("N(F)", psi(&norm_f(&lambda)), contract(&b(Basis::P)).scale(&vm1_pow(l))),
            ];
            for (name, got, expect) in cases {
                ensure!(same(&got, &expect), "psi({name}_{lambda}) = {got}, expected {expect}");
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact identities, n <= 6"))
}

fn multiplicativity() -> Outcome {
    let gens = generators(5);
    let mut checks = 0;
    for a in &gens {
        for b in gens.iter().filter(|b| a.size() + b.size() <= 6) {
            let (x, y) = (CentralElement::basis(a), CentralElement::basis(b));
            ensure!(psi(&circ(&x, &y)) == psi(&x).mul(&psi(&y)), "fails for f*_{a} o f*_{b}");
            checks += 1;
        }
    }
    Ok(format!("{checks} basis pairs, |mu| + |lambda| <= 6"))
}

fn zero_one_cross_check() -> Outcome {
    let mut checks = 0;
    for n in 1..=5 {
        for alpha in compositions_of(n) {
            let z = ok(decompose_central(&ok(relative_norm(&alpha, &HeckeElement::one(n)))?))?;
            for mu in partitions_of(n) {
                let b = zero_one_count(alpha.parts(), mu.parts());
                let expect = vm1_pow((n - mu.len()) as i64).scale_int(&BigInt::from(b));
                ensure!(
                    z.coord(&mu) == expect,
                    "N_{alpha}(1) at {mu}: {} != {expect}",
                    z.coord(&mu)
                );
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} coordinates over all compositions of n <= 5"))
}

fn transition_theorems() -> Outcome {
    let mut checks = 0;
    for n in 1..=5 {
        let parts = partitions_of(n);
        let d = |l: &Partition| (n - l.len()) as i64;
        for (family, count, twist) in [
            (
                CentralFamily::N1,
                zero_one_count as fn(&[usize], &[usize]) -> u64,
                false,
            ),
            (CentralFamily::NT2, nonneg_count, false),
            (CentralFamily::NF, power_sum_count, true),
        ] {
            let m = ok(family_transition(family, CentralFamily::GR, n))?;
            for (i, lambda) in parts.iter().enumerate() {
                for (j, mu) in parts.iter().enumerate() {
                    let c = int(count(lambda.parts(), mu.parts()) as i64);
                    let expect = if twist {
                        &c * &vm1_pow(d(mu) - d(lambda))
                    } else {
                        &c * &vm1_pow(d(mu))
                    };
                    ensure!(m.entries[i][j] == expect, "{family} -> GR at n = {n}, ({lambda}, {mu})");
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} entries of three matrices, n <= 5"))
}

fn two_path_characters() -> Outcome {
    let mut checks = 0;
    for n in 1..=4 {
        let t = character_table(n);
        for lambda in t.partitions() {
            for mu in t.partitions() {
                let via_idem = ok(character_from_idempotent(lambda, &HeckeElement::t(&w_min(mu))))?;
                ensure!(
                    via_idem == t.entry(lambda, mu),
                    "chi^{lambda}(T_w_{mu}): {via_idem} != {}",
                    t.entry(lambda, mu)
                );
                checks += 1;
            }
        }
    }
    for n in 1..=5 {
        let t = character_table(n);
        for lambda in t.partitions() {
            for mu in t.partitions() {
                let got = ok(t.entry(lambda, mu).eval_at_one())?;
                let expect = BigRational::from_integer(mn_character(lambda.parts(), mu.parts()).into());
                ensure!(got == expect, "chi^{lambda}({mu}) at v = 1: {got} != {expect}");
                checks += 1;
            }
        }
    }
    Ok(format!(
        "{checks} character values (idempotents n <= 4, Murnaghan-Nakayama n <= 5)"
    ))
}

fn random_element(perms: &[Permutation], rng: &mut ChaCha8Rng) -> HeckeElement {
    let terms: Vec<_> = (0..3)
        .map(|_| {
            let mut c = int(rng.gen_range(-3..=3)).shift(rng.gen_range(-2..=2));
            if rng.gen_bool(0.25) {
                c = (&c + &RatFun::one())
                    .div(&RatFun::v_pow_minus_one(rng.gen_range(1..3)))
                    .unwrap();
            }
            (perms.choose(rng).unwrap().clone(), c)
        })
        .collect();
    HeckeElement::from_terms(perms[0].n(), terms).unwrap()
}

fn structural_invariants() -> Outcome {
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            ensure!(gr_element(&lambda).is_central(), "f*_{lambda} is not central");
        }
    }
    for n in 1..=4 {
        let parts = partitions_of(n);
        let mut total = HeckeElement::zero(n);
        for a in &parts {
            let ea = central_idempotent(a);
            for b in &parts {
                let prod = ok(ea.mul(&central_idempotent(b)))?;
                ensure!(if a == b { prod == ea } else { prod.is_zero() }, "e_{a} e_{b} wrong");
            }
            total = &total + &ea;
        }
        ensure!(total == HeckeElement::one(n), "idempotents of H_{n} do not sum to 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for n in 1..=4 {
        let perms = Permutation::all(n);
        for _ in 0..1000 {
            let (a, b) = (random_element(&perms, &mut rng), random_element(&perms, &mut rng));
            ensure!(
                ok(bilinear(&a, &b))? == ok(bilinear(&b, &a))?,
                "tau(ab) != tau(ba) for {a}, {b}"
            );
        }
        for w in &perms {
            for u in &perms {
                let got = ok(bilinear(&HeckeElement::t(w), &HeckeElement::t(u)))?;
                let expect = if *u == w.inverse() {
                    RatFun::v_pow(w.length() as i64)
                } else {
                    RatFun::zero()
                };
                ensure!(got == expect, "tau(T_[{w}] T_[{u}]) = {got}");
            }
        }
    }
    let gens = generators(6);
    let basis = |p: &Partition| CentralElement::basis(p);
    let mut pairs = 0;
    for a in &gens {
        for b in gens.iter().filter(|b| a.size() + b.size() <= 6) {
            ensure!(
                circ(&basis(a), &basis(b)) == circ(&basis(b), &basis(a)),
                "{a} o {b} not commutative"
            );
            pairs += 1;
            for c in gens.iter().filter(|c| a.size() + b.size() + c.size() <= 6) {
                let lhs = circ(&circ(&basis(a), &basis(b)), &basis(c));
                ensure!(
                    lhs == circ(&basis(a), &circ(&basis(b), &basis(c))),
                    "({a} o {b}) o {c} not associative"
                );
            }
        }
    }
    Ok(format!(
        "central n <= 6, idempotents n <= 4, 4000 random trace pairs, {pairs} circ pairs"
    ))
}

fn specialization() -> Outcome {
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            let got = ok(specialize_v1(&m_bar(&lambda)))?;
            let expect =
                SymFun::basis_element(Basis::P, &lambda).scale(&int(z_oracle(lambda.parts()) as i64).inv().unwrap());
            ensure!(got == expect, "m_bar_{lambda} at v = 1 is {got}");
        }
    }
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            let g = ok(gr_element(&lambda).specialize_v1())?;
            for (w, c) in g.terms() {
                let expect = i64::from(cycle_type(w) == lambda.parts());
                ensure!(
                    *c == BigRational::from_integer(expect.into()),
                    "f*_{lambda} at v = 1 has {c} at {w}"
                );
            }
            let classes = g
                .class_sum_coords()
                .ok_or_else(|| format!("f*_{lambda} at v = 1 is not a class function"))?;
            let lhs = ok(specialize_v1(&psi(&CentralElement::basis(&lambda))))?;
            ensure!(
                lhs == ok(classical_psi(n, &classes))?,
                "psi(f*_{lambda}) at v = 1 differs from the classical map"
            );
            let classical =
                SymFun::basis_element(Basis::P, &lambda).scale(&int(z_oracle(lambda.parts()) as i64).inv().unwrap());
            ensure!(lhs == classical, "psi(f*_{lambda}) at v = 1 is {lhs}");
        }
    }
    Ok("m_bar n <= 8, psi n <= 5".into())
}

fn characteristic_map() -> Outcome {
    for n in 1..=4 {
        ensure!(ok(cauchy_check(n, n))?, "deformed Cauchy identity fails at n = {n}");
    }
    for n in 0..=5 {
        for lambda in partitions_of(n) {
            let got = ok(ch_v(&VirtualCharacter::irreducible(&lambda)))?;
            ensure!(
                got == SymFun::basis_element(Basis::S, &lambda),
                "ch_v(chi^{lambda}) = {got}"
            );
        }
    }
    let gens = generators(4);
    for a in &gens {
        for b in gens.iter().filter(|b| a.size() + b.size() <= 5) {
            let (x, y) = (VirtualCharacter::irreducible(a), VirtualCharacter::irreducible(b));
            let lhs = ok(ch_v(&ok(induce(&x, &y))?))?;
            let rhs = SymFun::basis_element(Basis::S, a).mul(&SymFun::basis_element(Basis::S, b));
            ensure!(lhs == rhs, "ch_v(induce(chi^{a}, chi^{b})) != s_{a} s_{b}");
        }
    }
    for n in 0..=4 {
        for lambda in partitions_of(n) {
            let chi = VirtualCharacter::irreducible(&lambda);
            ensure!(
                psi(&ok(theta(&chi))?) == ok(ch_v(&chi))?,
                "psi(theta(chi^{lambda})) != ch_v(chi^{lambda})"
            );
        }
    }
    Ok("Cauchy n <= 4, ch_v n <= 5, induction m + n <= 5, psi o theta n <= 4".into())
}

fn run_bin(args: &[&str], cache: Option<&Path>) -> Result<Vec<u8>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_heckez"));
    cmd.args(args).env_remove("HECKEZ_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("HECKEZ_CACHE_DIR", dir);
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    ensure!(
        out.status.success(),
        "heckez {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    Ok(out.stdout)
}

fn read_dir_sorted(dir: &Path) -> Result<Vec<(String, Vec<u8>)>, String> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(|e| e.to_string())?
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    Ok(files)
}

fn determinism() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cache = tmp.path().join("cache");
    let n = "5";
    let mut exports = Vec::new();
    for (label, env) in [
        ("cold", Some(cache.as_path())),
        ("warm", Some(cache.as_path())),
        ("none", None),
    ] {
        let dir = tmp.path().join(label);
        run_bin(&["export", "--n", n, "--out", dir.to_str().unwrap()], env)?;
        let chartable = run_bin(&["chartable", "--n", n, "--format", "json"], env)?;
        exports.push((label, read_dir_sorted(&dir)?, chartable));
        if label == "cold" {
            ensure!(cache.join("classpoly-n5.json").exists(), "cold run left no cache entry");
        }
    }
    let (_, first, first_table) = &exports[0];
    for (label, files, table) in &exports[1..] {
        ensure!(files == first, "{label} export differs from the cold export");
        ensure!(table == first_table, "{label} chartable output differs");
    }
    Ok(format!(
        "{} files identical across cold, warm and uncached runs",
        first.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Frobenius images of the five central families", frobenius_images),
        ("psi multiplicativity", multiplicativity),
        ("norm of 1 against brute-force 0-1 matrix counts", zero_one_cross_check),
        ("central transition matrices", transition_theorems),
        ("two-path character equality", two_path_characters),
        ("structural invariants", structural_invariants),
        ("specialization at v = 1", specialization),
        ("characteristic map", characteristic_map),
        ("determinism with cold and warm cache", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.1} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why} ({secs:.1} s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
