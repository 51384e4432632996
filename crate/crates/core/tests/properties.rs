use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hecke_core::congruence::{reduce_matrix, ResidueMatrices};
use hecke_core::farey::{parse_hfs, serialize_hfs};
use hecke_core::group::{decompose, GroupElement, Letter, Word};
use hecke_core::ring::{min_poly, quotient_ring, Residue, RingElement};

fn elem(q: u32, c: &[i64]) -> RingElement {
    RingElement::from_i64s(q, c).unwrap()
}

fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| match rng.gen_range(0..3) {
        0 => Letter::S,
        1 => Letter::T,
        _ => Letter::TInv,
    }))
}

fn coeffs(degree: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-50i64..50, degree)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(q in prop::sample::select(vec![4u32, 5, 7, 9, 12]), a in coeffs(6), b in coeffs(6), c in coeffs(6)) {
        let d = min_poly(q).unwrap().degree();
        let (a, b, c) = (elem(q, &a[..d]), elem(q, &b[..d]), elem(q, &c[..d]));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, RingElement::zero(q).unwrap());
        prop_assert_eq!(&a * &RingElement::one(q).unwrap(), a.clone());
        let f = (a.to_f64() * b.to_f64() - (&a * &b).to_f64()).abs();
        prop_assert!(f <= 1e-9 * (1.0 + (&a * &b).to_f64().abs()));
    }

    #[test]
    fn canonical_sign(w in prop::collection::vec(0u8..3, 0..12)) {
        let word = Word::new(w.iter().map(|&i| [Letter::S, Letter::T, Letter::TInv][i as usize]));
        let g = word.eval(5).unwrap();
        let neg = GroupElement::new(g.matrix().neg()).unwrap();
        prop_assert_eq!(&g, &neg);
        let first = g.matrix().entries().into_iter().find(|e| !e.is_zero()).unwrap();
        prop_assert!(first.sign().unwrap().to_ordering().is_gt());
    }

    #[test]
    fn hfs_whitespace_insensitive(spaces in prop::collection::vec(0usize..3, 64)) {
        let text = include_str!("../catalog/g5_power5.hfs");
        let s = parse_hfs(text).unwrap();
        let mut noisy = String::new();
        for (i, ch) in text.chars().enumerate() {
            noisy.push(ch);
            if matches!(ch, ',' | ';' | '=') {
                noisy.push_str(&" \n\t"[..spaces[i % spaces.len()]]);
            }
        }
        prop_assert_eq!(parse_hfs(&noisy).unwrap(), s);
    }
}

#[test]
fn decompose_round_trip_random_words() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for q in [3u32, 5] {
        for _ in 0..500 {
            let w = random_word(&mut rng, 24);
            let g = w.eval(q).unwrap();
            let back = decompose(&g).unwrap();
            assert_eq!(back.eval(q).unwrap(), g, "q={q} word={w} decomposed={back}");
        }
    }
}

#[test]
fn reduction_is_a_homomorphism() {
    let mut rng = StdRng::seed_from_u64(7);
    let moduli = [
        elem(5, &[5]),
        elem(5, &[2, 1]),
        elem(5, &[3, 1]),
        elem(5, &[4]),
    ];
    let arith: Vec<_> = moduli
        .iter()
        .map(|m| ResidueMatrices::new(m).unwrap())
        .collect();
    for i in 0..1000 {
        let m = &arith[i % arith.len()];
        let g = random_word(&mut rng, 16).eval(5).unwrap();
        let h = random_word(&mut rng, 16).eval(5).unwrap();
        assert_eq!(
            reduce_matrix(&g.mul(&h), m),
            m.mul(reduce_matrix(&g, m), reduce_matrix(&h, m))
        );
        assert_eq!(reduce_matrix(&g.inv(), m), m.inv(reduce_matrix(&g, m)));
    }
}

/// `N(a + bλ)` from the conjugate root: `λ + λ' = t`, `λλ' = n`.
fn quadratic_norm(a: i64, b: i64, trace: i64, norm: i64) -> i64 {
    a * a + a * b * trace + b * b * norm
}

#[test]
fn quotient_cardinality_matches_norm() {
    let mut rng = StdRng::seed_from_u64(2024);
    // q with (trace, norm) of the minimal polynomial of λ
    let fields = [(5u32, 1i64, -1i64), (4, 0, -2), (6, 0, -3)];
    let mut tested = 0;
    while tested < 20 {
        let (q, tr, nm) = fields[tested % fields.len()];
        let (a, b) = (rng.gen_range(-60..60), rng.gen_range(-60..60));
        let n = quadratic_norm(a, b, tr, nm).abs();
        if n == 0 || n > 10_000 {
            continue;
        }
        let alpha = elem(q, &[a, b]);
        let ring = quotient_ring(&alpha).unwrap();
        assert_eq!(ring.cardinality(), n as u64, "q={q} alpha={alpha}");
        // every residue lifts to a distinct class and lifts reduce back
        for r in ring.elements() {
            assert_eq!(ring.reduce(&ring.lift(r)), r);
        }
        for _ in 0..50 {
            let x = elem(q, &[rng.gen_range(-1000..1000), rng.gen_range(-1000..1000)]);
            let diff = &x - &ring.lift(ring.reduce(&x));
            assert!(alpha.divides(&diff), "{x} mod {alpha}");
        }
        assert_eq!(ring.elements().count(), n as usize);
        assert_eq!(ring.reduce(&alpha), Residue(0));
        tested += 1;
    }
}

fn totient(mut n: u32) -> u32 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

#[test]
fn minimal_polynomial_roots() {
    for q in 3..=23u32 {
        let p = min_poly(q).unwrap();
        let lambda = 2.0 * (std::f64::consts::PI / q as f64).cos();
        let value: f64 = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_string().parse::<f64>().unwrap() * lambda.powi(i as i32))
            .sum();
        let monic = p.coeffs().len() == p.degree() + 1 && p.coeffs()[p.degree()] == 1.into();
        assert!(value.abs() < 1e-9, "q={q}: residual {value}");
        assert!(monic, "q={q}");
        let expected_degree = if q == 3 { 1 } else { totient(2 * q) / 2 };
        assert_eq!(p.degree() as u32, expected_degree, "q={q}");
    }
}

#[test]
fn hfs_round_trip_catalog() {
    for text in [
        include_str!("../catalog/full_group.hfs"),
        include_str!("../catalog/index2.hfs"),
        include_str!("../catalog/g5_power5.hfs"),
        include_str!("../catalog/gamma2_q3.hfs"),
    ] {
        let s = parse_hfs(text).unwrap();
        let again = serialize_hfs(&s);
        assert_eq!(parse_hfs(&again).unwrap(), s);
        assert_eq!(serialize_hfs(&parse_hfs(&again).unwrap()), again);
    }
}
