//! The named checks. Each returns one or more [`Check`] records; errors are
//! recorded as failures rather than propagated.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::congruence::{
    abelianization_order, bfs_cap, delta, eq51_factor, eq51_matrix, image_group,
    invariant_subgroup_scan, is_congruence_member, kernel_structure, prop52_pipeline,
    rst_relations, standard_generators, FiniteMatrixGroup, ResidueMatrices,
};
use crate::farey::{
    cusp_data, invariants, parse_hfs, serialize_hfs, side_pairing_generators, HeckeFareySymbol,
};
use crate::fpenum::{
    abelianization_subgroup, low_index_subgroups, todd_coxeter, FpWord, Presentation,
    DEFAULT_COSET_CAP,
};
use crate::group::{decompose, GroupElement, Letter, Mat2, Word};
use crate::ring::{euclid_gcd, min_poly, quotient_ring, RingElement};

use super::{Catalog, Check, Status};

type Res<T> = Result<T, Box<dyn std::error::Error + Send + Sync>>;

pub const CHECK_NAMES: &[&str] = &[
    "minpoly",
    "ring",
    "eq51",
    "eq52",
    "quotient-orders",
    "kernel",
    "a1-table",
    "lemma-a1",
    "no-index5",
    "eq31",
    "pentagon",
    "full-group",
    "hfs-catalog",
    "example34",
    "fp-index2",
    "low-index",
    "abelianization",
    "decompose-roundtrip",
    "prop52",
];

fn anchor(name: &str) -> &'static str {
    match name {
        "minpoly" => "minimal polynomial of 2cos(π/q) by cyclotomic folding",
        "ring" => "Euclidean gcd, units and residue-ring cardinalities in Z[λ_5]",
        "eq51" => "a = T⁻²·[[3λ+2,−2λ−3],[4λ+3,−4λ−2]] lies in G(5,λ+2) but not G(5,5)",
        "eq52" => "a, SaS⁻¹, JaJ⁻¹ reduce mod 5 to I+(λ+2)U",
        "quotient-orders" => "orders of the images of G_5 in PSL₂(Z[λ]/(α))",
        "kernel" => "kernel of G_5/G(5,5) → G_5/G(5,λ+2) is elementary abelian of order 125",
        "a1-table" => "forms of r, s, t and their conjugates under S, T, J",
        "lemma-a1" => "invariant subgroups of ⟨a,b,c⟩ under S, T, J",
        "no-index5" => "G_5/G(5,5) has no normal subgroup of index 5",
        "eq31" => "invariants of the index-2 symbol {−∞, 0, ∞} with two odd edges",
        "pentagon" => "invariants and cusp width of the pentagon symbol of G_5^5",
        "full-group" => "invariants of the symbol of G_5 itself",
        "hfs-catalog" => "every catalog symbol parses, round-trips and satisfies Riemann-Hurwitz",
        "example34" => "the five involutions generating G_5^5",
        "fp-index2" => "⟨y, xyx⟩ has index 2 in ⟨x,y | x², y⁵⟩",
        "low-index" => "low-index subgroups of G_5 and of the modular group",
        "abelianization" => "orders of abelianizations from Kurosh signatures",
        "decompose-roundtrip" => "every short word survives decompose after evaluation",
        _ => "the chained non-congruence argument for G_5^5 and G_5'",
    }
}

fn record(name: &str, ok: bool, details: Value) -> Check {
    Check {
        check: name.into(),
        anchor: anchor(name).into(),
        status: if ok { Status::Pass } else { Status::Fail },
        details,
    }
}

struct Quotients {
    q5: FiniteMatrixGroup,
    qpi: FiniteMatrixGroup,
}

pub(crate) struct Context {
    catalog: Catalog,
    quotients: OnceLock<Result<Quotients, String>>,
}

impl Context {
    pub(crate) fn new(catalog: Catalog) -> Self {
        Self {
            catalog,
            quotients: OnceLock::new(),
        }
    }

    fn quotients(&self) -> Res<&Quotients> {
        self.quotients
            .get_or_init(|| {
                let build = || -> Res<Quotients> {
                    let gens = standard_generators(5)?;
                    let cap = bfs_cap();
                    Ok(Quotients {
                        q5: image_group(&gens, &RingElement::integer(5, 5)?, cap)?,
                        qpi: image_group(&gens, &pi()?, cap)?,
                    })
                };
                build().map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(|e| e.clone().into())
    }

    fn symbol(&self, text: &str) -> Res<HeckeFareySymbol> {
        Ok(parse_hfs(text)?)
    }
}

fn pi() -> Res<RingElement> {
    Ok(RingElement::from_i64s(5, &[2, 1])?)
}

pub(crate) fn run(ctx: &Context, name: &str) -> Vec<Check> {
    let result: Res<Vec<Check>> = match name {
        "prop52" => prop52(ctx),
        _ => single(ctx, name).map(|(ok, d)| vec![record(name, ok, d)]),
    };
    result.unwrap_or_else(|e| vec![record(name, false, json!({ "error": e.to_string() }))])
}

fn single(ctx: &Context, name: &str) -> Res<(bool, Value)> {
    match name {
        "minpoly" => minpoly(),
        "ring" => ring(),
        "eq51" => eq51(),
        "eq52" => eq52(),
        "quotient-orders" => quotient_orders(ctx),
        "kernel" => kernel(ctx),
        "a1-table" => a1_table(ctx),
        "lemma-a1" => lemma_a1(ctx),
        "no-index5" => no_index5(ctx),
        "eq31" => symbol_invariants(ctx, &ctx.catalog.index2, [2, 0, 2, 1, 0]),
        "pentagon" => pentagon(ctx),
        "full-group" => symbol_invariants(ctx, &ctx.catalog.full_group, [1, 1, 1, 1, 0]),
        "hfs-catalog" => hfs_catalog(ctx),
        "example34" => example34(ctx),
        "fp-index2" => fp_index2(),
        "low-index" => low_index(),
        "abelianization" => abelianization(),
        "decompose-roundtrip" => decompose_roundtrip(),
        other => Err(format!("no such check {other:?}").into()),
    }
}

fn minpoly() -> Res<(bool, Value)> {
    let mut rows = Vec::new();
    let mut ok = true;
    for q in 3..=23u32 {
        let p = min_poly(q)?;
        let residual = p.eval_f64(p.lambda_f64()).abs();
        ok &= residual < 1e-9;
        rows.push(json!({ "q": q, "poly": p.to_string(), "residual": residual }));
    }
    let q5 = min_poly(5)?.to_string();
    ok &= q5 == "x^2 - x - 1";
    Ok((ok, json!({ "q5": q5, "table": rows })))
}

fn ring() -> Res<(bool, Value)> {
    let five = RingElement::integer(5, 5)?;
    let lambda = RingElement::lambda(5)?;
    let pi = pi()?;
    let g = euclid_gcd(&five, &pi)?;
    let gcd_ok = g.divides(&pi) && pi.divides(&g);
    let unit = euclid_gcd(&lambda, &(&lambda + &RingElement::one(5)?))?;
    // 5 = λ⁻²(λ+2)², i.e. λ²·5 = (λ+2)²
    let five_factor = (&(&lambda * &lambda) * &five) == (&pi * &pi);
    let mut cards = Vec::new();
    let mut card_ok = true;
    for (coeffs, expected) in [
        (&[5i64, 0][..], 25u64),
        (&[2, 1], 5),
        (&[2, 0], 4),
        (&[0, 1], 1),
    ] {
        let alpha = RingElement::from_i64s(5, coeffs)?;
        let r = quotient_ring(&alpha)?;
        let norm = alpha.norm().magnitude().clone();
        card_ok &= r.cardinality() == expected && num_bigint::BigUint::from(expected) == norm;
        cards.push(json!({ "modulus": alpha.to_string(), "cardinality": r.cardinality(), "norm": norm.to_string() }));
    }
    let ok = gcd_ok && unit.is_unit() && lambda.is_unit() && five_factor && card_ok;
    Ok((
        ok,
        json!({
            "gcd(5, λ+2)": g.to_string(),
            "gcd(λ, λ+1)": unit.to_string(),
            "lambda_is_unit": lambda.is_unit(),
            "five_is_unit_times_pi_squared": five_factor,
            "quotients": cards,
        }),
    ))
}

fn eq51() -> Res<(bool, Value)> {
    let t_inv2 = Mat2::from_i64s(5, [&[1], &[0, -2], &[0], &[1]])?;
    let factor = Mat2::from_i64s(5, [&[2, 3], &[-3, -2], &[3, 4], &[-2, -4]])?;
    let stated = Mat2::from_i64s(5, [&[-6, -11], &[5, 10], &[3, 4], &[-2, -4]])?;
    let product = t_inv2.mul(&factor);
    let exact = product == stated;
    let t_power = GroupElement::t(5)?.pow(-2).into_matrix() == t_inv2;
    let a = eq51_matrix()?;
    let via_group = GroupElement::t(5)?.pow(-2).mul(&eq51_factor()?) == a;
    let in_pi = is_congruence_member(&a, &pi()?)?;
    let in_five = is_congruence_member(&a, &RingElement::integer(5, 5)?)?;
    Ok((
        exact && t_power && via_group && in_pi && !in_five,
        json!({
            "product": product.to_string(),
            "stated": stated.to_string(),
            "exact": exact,
            "in_G(5,λ+2)": in_pi,
            "in_G(5,5)": in_five,
        }),
    ))
}

fn eq52() -> Res<(bool, Value)> {
    let m5 = ResidueMatrices::new(&RingElement::integer(5, 5)?)?;
    let computed = delta(&m5)?;
    let us: [[i64; 4]; 3] = [[4, 0, 4, 1], [1, 1, 0, 4], [1, 4, 0, 4]];
    let mut rows = Vec::new();
    let mut ok = true;
    for ((name, u), x) in ["a", "b", "c"].iter().zip(us).zip(computed) {
        let e = crate::congruence::i_plus_pi(u);
        let want = m5.reduce_entries([&e[0], &e[1], &e[2], &e[3]]);
        ok &= want == x;
        rows.push(json!({
            "element": name,
            "U": u,
            "expected": m5.display(want),
            "computed": m5.display(x),
        }));
    }
    Ok((ok, json!({ "forms": rows })))
}

fn quotient_orders(ctx: &Context) -> Res<(bool, Value)> {
    let gens = standard_generators(5)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for line in ctx
        .catalog
        .quotient_orders
        .lines()
        .filter(|l| !l.trim().is_empty())
    {
        let (modulus, expected) = line
            .trim()
            .rsplit_once(' ')
            .ok_or_else(|| format!("malformed line {line:?}"))?;
        let expected: usize = expected.parse()?;
        let alpha = RingElement::parse(5, modulus.trim())?;
        let q = ctx.quotients()?;
        let order = if alpha == RingElement::integer(5, 5)? {
            q.q5.order()
        } else if alpha == pi()? {
            q.qpi.order()
        } else {
            image_group(&gens, &alpha, bfs_cap())?.order()
        };
        ok &= order == expected;
        rows.push(json!({ "modulus": alpha.to_string(), "expected": expected, "order": order }));
    }
    Ok((ok && !rows.is_empty(), json!({ "orders": rows })))
}

fn kernel(ctx: &Context) -> Res<(bool, Value)> {
    let q = ctx.quotients()?;
    let k = kernel_structure(&q.q5, &q.qpi)?;
    let ok = k.order == 125
        && k.abelian
        && k.exponent == 5
        && k.delta_generates
        && k.qpi_order == 60
        && k.q5_order == 7500;
    Ok((ok, serde_json::to_value(k)?))
}

fn a1_table(ctx: &Context) -> Res<(bool, Value)> {
    let q = ctx.quotients()?;
    let rep = rst_relations(q.q5.arith())?;
    Ok((rep.all_hold(), serde_json::to_value(&rep)?))
}

fn lemma_a1(ctx: &Context) -> Res<(bool, Value)> {
    let q = ctx.quotients()?;
    let scan = invariant_subgroup_scan(q.q5.arith())?;
    let orders: Vec<usize> = scan.invariant.iter().map(|s| s.order).collect();
    let ok = scan.candidates == 64 && orders == [1, 125];
    Ok((ok, serde_json::to_value(&scan)?))
}

fn no_index5(ctx: &Context) -> Res<(bool, Value)> {
    let q = ctx.quotients()?;
    let q5_ab = abelianization_order(&q.q5)?;
    let a5_ab = abelianization_order(&q.qpi)?;
    Ok((
        q5_ab % 5 != 0 && a5_ab == 1,
        json!({
            "q5_order": q.q5.order(),
            "q5_abelianization_order": q5_ab,
            "a5_abelianization_order": a5_ab,
        }),
    ))
}

fn symbol_invariants(ctx: &Context, text: &str, expected: [u64; 5]) -> Res<(bool, Value)> {
    let s = ctx.symbol(text)?;
    let inv = invariants(&s)?;
    let got = [inv.d, inv.v2, inv.vq, inv.v_inf, inv.g];
    let rh = inv.riemann_hurwitz_holds(s.q());
    Ok((
        got == expected && rh,
        json!({ "invariants": inv, "expected": expected, "riemann_hurwitz": rh }),
    ))
}

fn pentagon(ctx: &Context) -> Res<(bool, Value)> {
    let (ok, mut details) = symbol_invariants(ctx, &ctx.catalog.g5_power5, [5, 5, 0, 1, 0])?;
    let c = cusp_data(&ctx.symbol(&ctx.catalog.g5_power5)?)?;
    details["widths"] = json!(c.widths);
    details["geometric_width"] = json!(c.geometric_width);
    Ok((
        ok && c.geometric_width == 5 && c.widths.iter().sum::<u64>() == 5,
        details,
    ))
}

fn hfs_catalog(ctx: &Context) -> Res<(bool, Value)> {
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, text) in ctx.catalog.symbols() {
        let row = (|| -> Res<Value> {
            let s = ctx.symbol(text)?;
            let round_trip = parse_hfs(&serialize_hfs(&s))? == s;
            let inv = invariants(&s)?;
            let c = cusp_data(&s)?;
            let widths_sum = c.widths.iter().sum::<u64>() == inv.d;
            let fine = round_trip && inv.riemann_hurwitz_holds(s.q()) && widths_sum;
            Ok(json!({
                "file": name,
                "ok": fine,
                "round_trip": round_trip,
                "invariants": inv,
                "widths": c.widths,
            }))
        })()
        .unwrap_or_else(|e| json!({ "file": name, "ok": false, "error": e.to_string() }));
        ok &= row["ok"] == true;
        rows.push(row);
    }
    let gamma2 = ctx.symbol(&ctx.catalog.gamma2_q3)?;
    let widths = cusp_data(&gamma2)?.widths;
    ok &= invariants(&gamma2)?.d == 6 && widths == [2, 2, 2];
    Ok((ok, json!({ "symbols": rows, "gamma2_widths": widths })))
}

fn example34(ctx: &Context) -> Res<(bool, Value)> {
    let matrices: Vec<GroupElement> = ctx
        .catalog
        .example34_matrices
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| GroupElement::parse(5, l.trim()))
        .collect::<Result<_, _>>()?;
    let golden: Vec<Word> = ctx
        .catalog
        .example34_words
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.trim().parse())
        .collect::<Result<_, _>>()?;
    if matrices.len() != 5 || golden.len() != 5 {
        return Err(format!(
            "expected 5 matrices and 5 words, got {} and {}",
            matrices.len(),
            golden.len()
        )
        .into());
    }
    let p = Presentation::new(5);
    let mut rows = Vec::new();
    let mut ok = true;
    let mut words = Vec::new();
    for (m, w) in matrices.iter().zip(&golden) {
        let trace0 = m.trace().is_zero();
        let det1 = m.matrix().det().is_one();
        let found = decompose(m)?;
        let member = found.eval(5)? == *m && w.eval(5)? == *m;
        ok &= trace0 && det1 && member;
        rows.push(json!({
            "matrix": m.to_string(),
            "trace_zero": trace0,
            "det_one": det1,
            "word": found.to_string(),
            "golden_word": w.to_string(),
            "member": member,
        }));
        words.push(p.translate(&found));
    }
    let index = todd_coxeter(&p, &words, DEFAULT_COSET_CAP)?.index();

    let pentagon = ctx.symbol(&ctx.catalog.g5_power5)?;
    let farey: Vec<GroupElement> = side_pairing_generators(&pentagon)?
        .into_iter()
        .map(|g| g.generator)
        .collect();
    let same_set = matrices.iter().collect::<HashSet<_>>() == farey.iter().collect::<HashSet<_>>();

    let q = ctx.quotients()?;
    let a = q.q5.arith();
    let image = |gs: &[GroupElement]| -> Res<BTreeSet<_>> {
        let res: Vec<_> = gs.iter().map(|g| a.reduce(g)).collect();
        Ok(FiniteMatrixGroup::closure(a, &res, q.q5.order())?
            .elements()
            .iter()
            .copied()
            .collect())
    };
    let listed = image(&matrices)?;
    let from_farey = image(&farey)?;
    let same_image = listed == from_farey;
    ok &= index == 5 && same_image && listed.len() == 7500;
    Ok((
        ok,
        json!({
            "matrices": rows,
            "todd_coxeter_index": index,
            "image_order": listed.len(),
            "farey_image_order": from_farey.len(),
            "same_image": same_image,
            "same_generator_set": same_set,
        }),
    ))
}

fn fp_index2() -> Res<(bool, Value)> {
    let p = Presentation::new(5);
    let words: Vec<FpWord> = vec!["y".parse()?, "xyx".parse()?];
    let index = todd_coxeter(&p, &words, DEFAULT_COSET_CAP)?.index();
    Ok((
        index == 2,
        json!({ "subgroup": ["y", "xyx"], "index": index }),
    ))
}

fn low_index() -> Res<(bool, Value)> {
    let count = |q: u32, max: usize| -> Res<(Vec<usize>, Vec<usize>)> {
        let subs = low_index_subgroups(&Presentation::new(q), max)?;
        let mut all = vec![0; max + 1];
        let mut normal = vec![0; max + 1];
        for s in subs {
            all[s.index()] += 1;
            normal[s.index()] += s.normal as usize;
        }
        Ok((all, normal))
    };
    let (g5, g5_normal) = count(5, 5)?;
    let (g3, _) = count(3, 7)?;
    let ok = g5[3] == 0 && g5[4] == 0 && g5_normal[5] == 1 && (2..=7).all(|n| g3[n] > 0);
    Ok((
        ok,
        json!({
            "q5_classes_by_index": g5,
            "q5_normal_by_index": g5_normal,
            "q3_classes_by_index": g3,
        }),
    ))
}

fn abelianization() -> Res<(bool, Value)> {
    let cases: [(&[u64], usize, u64); 3] = [(&[5, 5], 0, 25), (&[2; 5], 0, 32), (&[2, 5], 0, 10)];
    let mut rows = Vec::new();
    let mut ok = true;
    for (orders, free, expected) in cases {
        let ab = abelianization_subgroup(orders, free);
        ok &= ab.commutator_index == Some(expected);
        rows.push(json!({ "elliptic_orders": orders, "free_rank": free, "result": ab, "expected": expected }));
    }
    Ok((ok, json!({ "cases": rows })))
}

fn decompose_roundtrip() -> Res<(bool, Value)> {
    const MAX_LEN: usize = 6;
    let mut failures = Vec::new();
    let mut tested = 0usize;
    for q in [3u32, 5] {
        let mut layer = vec![Word::empty()];
        for _ in 0..MAX_LEN {
            let mut next = Vec::new();
            for w in &layer {
                for l in [Letter::S, Letter::T, Letter::TInv] {
                    let longer = w.concat(&Word::new([l]));
                    if longer.len() == w.len() + 1 {
                        next.push(longer);
                    }
                }
            }
            for w in &next {
                tested += 1;
                let g = w.eval(q)?;
                if decompose(&g)?.eval(q)? != g {
                    failures.push(format!("q={q}: {w}"));
                }
            }
            layer = next;
        }
    }
    Ok((
        failures.is_empty(),
        json!({ "max_length": MAX_LEN, "words_tested": tested, "failures": failures }),
    ))
}

fn prop52(ctx: &Context) -> Res<Vec<Check>> {
    let pentagon = ctx.symbol(&ctx.catalog.g5_power5)?;
    let q = ctx.quotients()?;
    Ok(prop52_pipeline(&pentagon, &q.q5, &q.qpi).checks)
}
