//! The chained argument that `G_5^5` and `G_5'` are not congruence.

use serde_json::json;

use crate::farey::{cusp_data, side_pairing_generators, HeckeFareySymbol};
use crate::fpenum::{
    abelianization_subgroup, low_index_subgroups, todd_coxeter, FpWord, Gen, Presentation,
    DEFAULT_COSET_CAP,
};
use crate::report::{Check, Status, VerificationReport};

use super::{abelianization_order, invariant_subgroup_scan, FiniteMatrixGroup};

pub const VERDICT_NOT_CONGRUENCE: &str = "not congruence";
pub const VERDICT_INCONCLUSIVE: &str = "inconclusive";

fn check(name: &str, anchor: &str, ok: bool, details: serde_json::Value) -> Check {
    Check {
        check: name.into(),
        anchor: anchor.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        details,
    }
}

fn failed(name: &str, anchor: &str, err: impl std::fmt::Display) -> Check {
    check(name, anchor, false, json!({ "error": err.to_string() }))
}

/// Runs every leg; a leg that errors is recorded as failed and the verdict
/// becomes inconclusive.
///
/// `pentagon` is the Hecke-Farey symbol of `G_5^5`; `q5` and `qpi` are the
/// images of `G_5` modulo `5` and `λ+2`.
pub fn prop52_pipeline(
    pentagon: &HeckeFareySymbol,
    q5: &FiniteMatrixGroup,
    qpi: &FiniteMatrixGroup,
) -> VerificationReport {
    let mut legs = Vec::new();

    let anchor = "geometric level of G_5^5 (lcm of cusp widths)";
    legs.push(match cusp_data(pentagon) {
        Ok(c) => check(
            "prop52-width",
            anchor,
            c.geometric_width == 5,
            json!({ "widths": c.widths, "geometric_width": c.geometric_width }),
        ),
        Err(e) => failed("prop52-width", anchor, e),
    });

    legs.push(Check {
        check: "prop52-premise".into(),
        anchor: "a congruence subgroup of G_5 with geometric level N contains G(5,N)".into(),
        status: Status::Premise,
        details: json!({
            "statement": "if G_5^5 were congruence then G(5,5) ⊆ G_5^5",
            "source": "external theorem on levels of congruence subgroups of Hecke groups; not re-proven",
        }),
    });

    let anchor = "G(5,5) ⊆ G_5^5 would make G_5^5 the full preimage of its image in G_5/G(5,5)";
    legs.push(match image_leg(pentagon, q5) {
        Ok((image, index)) => check(
            "prop52-image",
            anchor,
            image == q5.order() && index == 5,
            json!({
                "image_order": image,
                "q5_order": q5.order(),
                "index_of_g5_power5": index,
                "conclusion": "image is all of G_5/G(5,5) but the index is 5, so G(5,5) ⊄ G_5^5",
            }),
        ),
        Err(e) => failed("prop52-image", anchor, e),
    });

    let anchor = "no S,T,J-invariant subgroup of order 25 in G(5,λ+2)/G(5,5)";
    legs.push(
        match (
            invariant_subgroup_scan(q5.arith()),
            abelianization_order(qpi),
        ) {
            (Ok(scan), Ok(ab)) => {
                let orders: Vec<usize> = scan.invariant.iter().map(|s| s.order).collect();
                check(
                    "prop52-invariant-route",
                    anchor,
                    !orders.contains(&25) && ab % 5 != 0,
                    json!({
                        "invariant_orders": orders,
                        "a5_abelianization_order": ab,
                        "conclusion": "D = (G_5^5 ∩ G(5,λ+2))/G(5,5) of order 25 cannot exist",
                    }),
                )
            }
            (Err(e), _) | (_, Err(e)) => failed("prop52-invariant-route", anchor, e),
        },
    );

    let anchor = "G_5' ⊆ G_5^5 since G_5/G_5' has order 10 and G_5^5 is the unique normal subgroup of index 5";
    legs.push(match commutator_leg(pentagon) {
        Ok(d) => {
            let ok = d["abelianization_order"] == 10
                && d["normal_index5_count"] == 1
                && d["unique_normal_is_g5_power5"] == true
                && d["commutator_in_g5_power5"] == true;
            check("prop52-commutator", anchor, ok, d)
        }
        Err(e) => failed("prop52-commutator", anchor, e),
    });

    let verdict = if legs.iter().all(|c| c.status != Status::Fail) {
        VERDICT_NOT_CONGRUENCE
    } else {
        VERDICT_INCONCLUSIVE
    };
    VerificationReport::new(5, legs, verdict)
}

fn pentagon_words(pentagon: &HeckeFareySymbol) -> Result<Vec<FpWord>, crate::farey::HfsError> {
    let p = Presentation::new(pentagon.q());
    Ok(side_pairing_generators(pentagon)?
        .iter()
        .map(|g| p.translate(&g.word))
        .collect())
}

fn image_leg(
    pentagon: &HeckeFareySymbol,
    q5: &FiniteMatrixGroup,
) -> Result<(usize, usize), Box<dyn std::error::Error>> {
    let gens = side_pairing_generators(pentagon)?;
    let residues: Vec<_> = gens
        .iter()
        .map(|g| q5.arith().reduce(&g.generator))
        .collect();
    let image = FiniteMatrixGroup::closure(q5.arith(), &residues, q5.order())?;
    let words = pentagon_words(pentagon)?;
    let index = todd_coxeter(&Presentation::new(5), &words, DEFAULT_COSET_CAP)?.index();
    Ok((image.order(), index))
}

fn commutator_leg(
    pentagon: &HeckeFareySymbol,
) -> Result<serde_json::Value, Box<dyn std::error::Error>> {
    let p = Presentation::new(5);
    let ab = abelianization_subgroup(&[2, 5], 0);
    let normal5: Vec<_> = low_index_subgroups(&p, 5)?
        .into_iter()
        .filter(|s| s.normal && s.index() == 5)
        .collect();
    let table = todd_coxeter(&p, &pentagon_words(pentagon)?, DEFAULT_COSET_CAP)?;
    let commutator = FpWord(vec![Gen::X, Gen::Y, Gen::XInv, Gen::YInv]);
    Ok(json!({
        "abelianization": ab.torsion,
        "abelianization_order": ab.commutator_index,
        "normal_index5_count": normal5.len(),
        "unique_normal_is_g5_power5": normal5.len() == 1 && normal5[0].table == table,
        "commutator_in_g5_power5": table.stabilizes(0, &commutator),
    }))
}
