//! Acceptance criteria 1–12. Each criterion runs in isolation; the harness
//! prints one PASS/FAIL line per criterion and fails if any criterion does.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hecke_core::congruence::{
    abelianization_order, delta, i_plus_pi, image_group, invariant_subgroup_scan,
    is_congruence_member, kernel_structure, reduce_matrix, rst_relations, standard_generators,
    FiniteMatrixGroup, ResidueMatrices,
};
use hecke_core::farey::{cusp_data, invariants, parse_hfs, side_pairing_generators};
use hecke_core::fpenum::{
    abelianization_subgroup, low_index_subgroups, todd_coxeter, FpWord, Presentation,
    DEFAULT_COSET_CAP,
};
use hecke_core::group::{decompose, GroupElement, Letter, Mat2, Word};
use hecke_core::report::{prop52_report, Status};
use hecke_core::ring::{min_poly, quotient_ring, RingElement};

const PENTAGON: &str = include_str!("../catalog/g5_power5.hfs");
const INDEX2: &str = include_str!("../catalog/index2.hfs");
const EXAMPLE_MATRICES: &str = include_str!("../catalog/example34_matrices.txt");

fn e(c: &[i64]) -> RingElement {
    RingElement::from_i64s(5, c).unwrap()
}

fn m5() -> ResidueMatrices {
    ResidueMatrices::new(&e(&[5])).unwrap()
}

fn q5() -> FiniteMatrixGroup {
    image_group(&standard_generators(5).unwrap(), &e(&[5]), 100_000).unwrap()
}

fn qpi() -> FiniteMatrixGroup {
    image_group(&standard_generators(5).unwrap(), &e(&[2, 1]), 1_000).unwrap()
}

fn criterion_1() {
    let t_inv2 = Mat2::from_i64s(5, [&[1], &[0, -2], &[0], &[1]]).unwrap();
    let factor = Mat2::from_i64s(5, [&[2, 3], &[-3, -2], &[3, 4], &[-2, -4]]).unwrap();
    let a = Mat2::from_i64s(5, [&[-6, -11], &[5, 10], &[3, 4], &[-2, -4]]).unwrap();
    assert_eq!(GroupElement::t(5).unwrap().pow(-2).into_matrix(), t_inv2);
    assert!(
        t_inv2.mul(&factor) == a,
        "T^-2 times the factor is {}",
        t_inv2.mul(&factor)
    );
    let a = GroupElement::new(a).unwrap();
    assert!(is_congruence_member(&a, &e(&[2, 1])).unwrap());
    assert!(!is_congruence_member(&a, &e(&[5])).unwrap());
}

fn criterion_2() {
    let m = m5();
    let form = |u: [i64; 4]| {
        let x = i_plus_pi(u);
        m.reduce_entries([&x[0], &x[1], &x[2], &x[3]])
    };
    // b and c built here from a directly, not through the library's delta
    let a = GroupElement::parse(5, "[[-6-11L,5+10L],[3+4L,-2-4L]]").unwrap();
    let s = GroupElement::s(5).unwrap();
    let b = s.mul(&a).mul(&s.inv());
    let j = Mat2::from_i64s(5, [&[0], &[1], &[1], &[0]]).unwrap();
    let ja = j.mul(a.matrix()).mul(&j);
    let c = GroupElement::new(ja.neg()).unwrap();
    assert_eq!(m.reduce(&a), form([4, 0, 4, 1]));
    assert_eq!(m.reduce(&b), form([1, 1, 0, 4]));
    assert_eq!(m.reduce(&c), form([1, 4, 0, 4]));
    assert_eq!(
        delta(&m).unwrap(),
        [m.reduce(&a), m.reduce(&b), m.reduce(&c)]
    );
}

fn criterion_3() {
    let (big, small) = (q5(), qpi());
    assert_eq!(small.order(), 60);
    assert_eq!(big.order(), 7500);
    let k = kernel_structure(&big, &small).unwrap();
    assert_eq!(k.order, 125);
    assert!(k.abelian);
    assert_eq!(k.exponent, 5);
    assert!(k.delta_generates);
}

fn criterion_4() {
    let rep = rst_relations(&m5()).unwrap();
    for f in &rep.forms {
        assert!(
            f.holds,
            "form of {}: expected {}, computed {}",
            f.name, f.expected, f.computed
        );
    }
    assert!(rep.same_subgroup);
    let wrong: Vec<String> = rep
        .identities
        .iter()
        .filter(|i| !i.holds)
        .map(|i| format!("{} stated {} computed {}", i.identity, i.stated, i.computed))
        .collect();
    assert_eq!(rep.identities.len(), 9);
    assert!(
        wrong.is_empty(),
        "conjugation identities not satisfied: {wrong:?}"
    );
}

fn criterion_5() {
    let scan = invariant_subgroup_scan(&m5()).unwrap();
    assert_eq!(scan.candidates, 64);
    let orders: Vec<usize> = scan.invariant.iter().map(|s| s.order).collect();
    assert_eq!(orders, vec![1, 125]);
}

fn criterion_6() {
    let ab = abelianization_order(&q5()).unwrap();
    assert_ne!(ab % 5, 0, "abelianization of Q5 has order {ab}");
    assert_eq!(abelianization_order(&qpi()).unwrap(), 1);
}

fn criterion_7() {
    let rep = prop52_report();
    assert_eq!(rep.verdict, "not congruence");
    for c in &rep.checks {
        let want = if c.check == "prop52-premise" {
            Status::Premise
        } else {
            Status::Pass
        };
        assert_eq!(c.status, want, "{}: {}", c.check, c.details);
    }
    let image = rep
        .checks
        .iter()
        .find(|c| c.check == "prop52-image")
        .unwrap();
    assert_eq!(image.details["image_order"], 7500);
    let commutator = rep
        .checks
        .iter()
        .find(|c| c.check == "prop52-commutator")
        .unwrap();
    assert_eq!(commutator.details["commutator_in_g5_power5"], true);
}

fn criterion_8() {
    for (text, want) in [(INDEX2, [2, 0, 2, 1, 0]), (PENTAGON, [5, 5, 0, 1, 0])] {
        let s = parse_hfs(text).unwrap();
        let inv = invariants(&s).unwrap();
        assert_eq!([inv.d, inv.v2, inv.vq, inv.v_inf, inv.g], want);
        assert!(inv.riemann_hurwitz_holds(5));
        // (q−2)d = q·v2 + 2(q−1)·vq + 4q·g + 2q·v∞ − 4q with q = 5
        let [d, v2, vq, vi, g] = want.map(|x| x as i64);
        assert_eq!(3 * d, 5 * v2 + 8 * vq + 20 * g + 10 * vi - 20);
    }
    assert_eq!(
        cusp_data(&parse_hfs(PENTAGON).unwrap())
            .unwrap()
            .geometric_width,
        5
    );
}

fn criterion_9() {
    let matrices: Vec<GroupElement> = EXAMPLE_MATRICES
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| GroupElement::parse(5, l.trim()).unwrap())
        .collect();
    assert_eq!(matrices.len(), 5);
    let p = Presentation::new(5);
    let mut words = Vec::new();
    for m in &matrices {
        assert!(m.trace().is_zero());
        assert!(m.matrix().det().is_one());
        let w = decompose(m).unwrap();
        assert_eq!(w.eval(5).unwrap(), *m);
        words.push(p.translate(&w));
    }
    assert_eq!(
        todd_coxeter(&p, &words, DEFAULT_COSET_CAP).unwrap().index(),
        5
    );

    let big = q5();
    let a = big.arith();
    let image = |gs: Vec<GroupElement>| -> BTreeSet<_> {
        let r: Vec<_> = gs.iter().map(|g| a.reduce(g)).collect();
        FiniteMatrixGroup::closure(a, &r, 10_000)
            .unwrap()
            .elements()
            .iter()
            .copied()
            .collect()
    };
    let farey: Vec<_> = side_pairing_generators(&parse_hfs(PENTAGON).unwrap())
        .unwrap()
        .into_iter()
        .map(|g| g.generator)
        .collect();
    let listed = image(matrices);
    assert_eq!(listed.len(), 7500);
    assert_eq!(listed, image(farey));
}

fn criterion_10() {
    let p5 = Presentation::new(5);
    let words: Vec<FpWord> = vec!["y".parse().unwrap(), "xyx".parse().unwrap()];
    assert_eq!(
        todd_coxeter(&p5, &words, DEFAULT_COSET_CAP)
            .unwrap()
            .index(),
        2
    );
    let subs = low_index_subgroups(&p5, 5).unwrap();
    assert!(subs.iter().all(|s| s.index() != 3 && s.index() != 4));
    assert_eq!(
        subs.iter().filter(|s| s.normal && s.index() == 5).count(),
        1
    );
    let subs3 = low_index_subgroups(&Presentation::new(3), 7).unwrap();
    for n in 2..=7 {
        assert!(
            subs3.iter().any(|s| s.index() == n),
            "no subgroup of index {n} in the modular group"
        );
    }
}

fn criterion_11() {
    assert_eq!(
        abelianization_subgroup(&[5, 5], 0).commutator_index,
        Some(25)
    );
    assert_eq!(
        abelianization_subgroup(&[2; 5], 0).commutator_index,
        Some(32)
    );
    assert_eq!(
        abelianization_subgroup(&[2, 5], 0).commutator_index,
        Some(10)
    );
}

fn random_word(rng: &mut StdRng) -> Word {
    let len = rng.gen_range(0..=20);
    Word::new((0..len).map(|_| [Letter::S, Letter::T, Letter::TInv][rng.gen_range(0..3)]))
}

fn criterion_12() {
    let mut rng = StdRng::seed_from_u64(12);
    for q in [3u32, 5] {
        for _ in 0..500 {
            let g = random_word(&mut rng).eval(q).unwrap();
            assert_eq!(decompose(&g).unwrap().eval(q).unwrap(), g);
        }
    }
    let arith = [m5(), ResidueMatrices::new(&e(&[2, 1])).unwrap()];
    for i in 0..1000 {
        let m = &arith[i % 2];
        let g = random_word(&mut rng).eval(5).unwrap();
        let h = random_word(&mut rng).eval(5).unwrap();
        assert_eq!(
            reduce_matrix(&g.mul(&h), m),
            m.mul(reduce_matrix(&g, m), reduce_matrix(&h, m))
        );
    }
    let mut moduli = 0;
    while moduli < 20 {
        let (a, b) = (rng.gen_range(-80i64..80), rng.gen_range(-80i64..80));
        let norm = (a * a + a * b - b * b).abs();
        if norm == 0 || norm > 10_000 {
            continue;
        }
        let (x, y, z) = (e(&[a, b]), e(&[b, -a]), e(&[a + b, 1]));
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        assert_eq!(quotient_ring(&x).unwrap().cardinality(), norm as u64);
        moduli += 1;
    }
    for q in 3..=23u32 {
        let p = min_poly(q).unwrap();
        let root = 2.0 * (std::f64::consts::PI / q as f64).cos();
        assert!(p.eval_f64(root).abs() < 1e-9, "q = {q}");
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn()); 12] = [
        ("1  matrix identity for a and its membership", criterion_1),
        ("2  reductions of a, b, c mod 5", criterion_2),
        ("3  quotient orders and the order-125 kernel", criterion_3),
        ("4  forms of r, s, t and the conjugation table", criterion_4),
        ("5  invariant subgroup scan", criterion_5),
        ("6  no normal index-5 subgroup of Q5", criterion_6),
        ("7  non-congruence pipeline verdict", criterion_7),
        ("8  symbol invariants and Riemann-Hurwitz", criterion_8),
        ("9  pentagon involutions cross-check", criterion_9),
        ("10 coset enumeration and low-index scans", criterion_10),
        ("11 abelianization orders", criterion_11),
        ("12 property suites", criterion_12),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f));
        match outcome {
            Ok(()) => println!("PASS  {name}"),
            Err(payload) => {
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  {name}: {msg}");
                failed.push(name);
            }
        }
    }
    let _ = std::panic::take_hook();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
