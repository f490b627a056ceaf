use heckez::combinatorics::Composition;
use heckez::hecke::{bilinear, embed_from_young, t_check, HeckeElement};
use heckez::{Permutation, RatFun};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_coeff(rng: &mut ChaCha8Rng) -> RatFun {
    let c = RatFun::from_int(rng.gen_range(-3..=3));
    let shift = rng.gen_range(-2..=2);
    if rng.gen_bool(0.2) {
        (c.shift(shift) + RatFun::one())
            .div(&RatFun::v_pow_minus_one(rng.gen_range(1..3)))
            .unwrap()
    } else {
        c.shift(shift)
    }
}

fn random_element(n: usize, terms: usize, rng: &mut ChaCha8Rng) -> HeckeElement {
    let perms = Permutation::all(n);
    let picks = (0..terms).map(|_| (perms.choose(rng).unwrap().clone(), random_coeff(rng)));
    HeckeElement::from_terms(n, picks.collect::<Vec<_>>()).unwrap()
}

#[test]
fn braid_and_quadratic_relations() {
    for n in 2..=6 {
        let t = |i| HeckeElement::generator(n, i);
        for i in 1..n {
            let (v, vm1) = (RatFun::v(), RatFun::v_minus_one());
            let quad = &t(i).scale(&vm1) + &HeckeElement::one(n).scale(&v);
            assert_eq!(t(i).mul(&t(i)).unwrap(), quad);
            for j in 1..n {
                let (a, b) = (t(i), t(j));
                if i.abs_diff(j) == 1 {
                    let lhs = a.mul(&b).unwrap().mul(&a).unwrap();
                    let rhs = b.mul(&a).unwrap().mul(&b).unwrap();
                    assert_eq!(lhs, rhs, "braid {i} {j} in H_{n}");
                } else {
                    assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                }
            }
        }
    }
}

#[test]
fn trace_form_is_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=4 {
        for _ in 0..100 {
            let a = random_element(n, 3, &mut rng);
            let b = random_element(n, 3, &mut rng);
            assert_eq!(bilinear(&a, &b).unwrap(), bilinear(&b, &a).unwrap());
        }
    }
}

#[test]
fn trace_form_on_basis_pairs() {
    for n in 1..=4 {
        let perms = Permutation::all(n);
        for w in &perms {
            for s in &perms {
                let got = bilinear(&HeckeElement::t(w), &HeckeElement::t(s)).unwrap();
                let expect = if *w == s.inverse() {
                    RatFun::v_pow(w.length() as i64)
                } else {
                    RatFun::zero()
                };
                assert_eq!(got, expect, "{w} / {s}");
            }
            assert!(bilinear(&HeckeElement::t(w), &t_check(w)).unwrap().is_one());
        }
    }
}

#[test]
fn product_is_associative() {
    let perms = Permutation::all(3);
    for a in &perms {
        for b in &perms {
            for c in &perms {
                let (a, b, c) = (HeckeElement::t(a), HeckeElement::t(b), HeckeElement::t(c));
                assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let (a, b, c) = (
            random_element(4, 3, &mut rng),
            random_element(4, 3, &mut rng),
            random_element(4, 3, &mut rng),
        );
        assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }
}

#[test]
fn young_embedding_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for parts in [vec![2, 2], vec![1, 2, 1], vec![3, 1], vec![2, 1, 2]] {
        let alpha = Composition::new(parts.clone()).unwrap();
        for _ in 0..5 {
            let a: Vec<_> = parts.iter().map(|&k| random_element(k, 2, &mut rng)).collect();
            let b: Vec<_> = parts.iter().map(|&k| random_element(k, 2, &mut rng)).collect();
            let ab: Vec<_> = a.iter().zip(&b).map(|(x, y)| x.mul(y).unwrap()).collect();
            let lhs = embed_from_young(&alpha, &a)
                .unwrap()
                .mul(&embed_from_young(&alpha, &b).unwrap())
                .unwrap();
            assert_eq!(lhs, embed_from_young(&alpha, &ab).unwrap());
        }
        // disjoint blocks commute
        let ones: Vec<_> = parts.iter().map(|&k| HeckeElement::one(k)).collect();
        for i in 0..parts.len() {
            for j in 0..parts.len() {
                let mut x = ones.clone();
                x[i] = random_element(parts[i], 2, &mut rng);
                let mut y = ones.clone();
                y[j] = random_element(parts[j], 2, &mut rng);
                if i != j {
                    let (x, y) = (
                        embed_from_young(&alpha, &x).unwrap(),
                        embed_from_young(&alpha, &y).unwrap(),
                    );
                    assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
                }
            }
        }
    }
}

#[test]
fn size_mismatch_is_an_error() {
    assert!(HeckeElement::one(2).mul(&HeckeElement::one(3)).is_err());
}
