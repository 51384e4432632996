//! Side-pairing generators of a Hecke-Farey symbol.
//!
//! Conventions: edge `i` from `a/b` to `c/d` has matrix `M = [[c, a], [d, b]]`
//! (sending `0 ↦ a/b`, `∞ ↦ c/d`), which must have determinant 1. Then
//!
//! * even: `M·S·M⁻¹`, swapping the endpoints;
//! * odd: `M·S·T⁻¹·M⁻¹`, of order `q`, sending the end to the start;
//! * free pair `(i, j)`: `M_j·S·M_i⁻¹`, sending edge `i` onto edge `j` with
//!   the orientation reversed.

use serde::Serialize;

use crate::group::{decompose, GroupElement, Mat2, Word};
use crate::ring::RingElement;

use super::{HeckeFareySymbol, HfsError, Pairing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairingKind {
    Even,
    Odd,
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidePairing {
    pub generator: GroupElement,
    pub kind: PairingKind,
    /// One edge for even/odd, the ordered pair for free.
    pub edges: Vec<usize>,
    /// Decomposition over `S`, `T`; its existence certifies membership.
    pub word: Word,
}

type Column = (RingElement, RingElement);

fn same_point(u: &Column, v: &Column) -> bool {
    &u.0 * &v.1 == &v.0 * &u.1
}

fn apply(g: &GroupElement, p: &Column) -> Column {
    g.matrix().apply(&p.0, &p.1)
}

fn endpoints(s: &HeckeFareySymbol, edge: usize) -> Result<(Column, Column), HfsError> {
    let q = s.q();
    Ok((
        s.vertices()[edge].column(q)?,
        s.vertices()[edge + 1].column(q)?,
    ))
}

/// The determinant-1 matrix of edge `edge`.
pub fn edge_matrix(s: &HeckeFareySymbol, edge: usize) -> Result<Mat2, HfsError> {
    let (start, end) = endpoints(s, edge)?;
    let m = Mat2::new(end.0, start.0, end.1, start.1);
    let det = m.det();
    if !det.is_one() {
        return Err(HfsError::NotAdjacent {
            edge,
            reason: format!("determinant {det}"),
        });
    }
    Ok(m)
}

fn element(m: Mat2) -> Result<GroupElement, HfsError> {
    Ok(GroupElement::new(m)?)
}

/// One generator per even or odd edge and one per free pair, in order of
/// the (first) edge.
pub fn side_pairing_generators(s: &HeckeFareySymbol) -> Result<Vec<SidePairing>, HfsError> {
    let q = s.q();
    let sgen = GroupElement::s(q)?;
    let odd_core = sgen.mul(&GroupElement::t(q)?.inv());
    let free = s.free_pairs();
    let mut out = Vec::new();
    for (i, p) in s.pairings().iter().enumerate() {
        let m = element(edge_matrix(s, i)?)?;
        let (start, end) = endpoints(s, i)?;
        let (generator, kind, edges, ok) = match p {
            Pairing::Even => {
                let g = m.mul(&sgen).mul(&m.inv());
                let ok =
                    same_point(&apply(&g, &start), &end) && same_point(&apply(&g, &end), &start);
                (g, PairingKind::Even, vec![i], ok)
            }
            Pairing::Odd => {
                let g = m.mul(&odd_core).mul(&m.inv());
                let ok = same_point(&apply(&g, &end), &start);
                (g, PairingKind::Odd, vec![i], ok)
            }
            Pairing::Free(_) => {
                let Some(&(_, j)) = free.iter().find(|&&(a, _)| a == i) else {
                    continue;
                };
                let mj = element(edge_matrix(s, j)?)?;
                let (start_j, end_j) = endpoints(s, j)?;
                let g = mj.mul(&sgen).mul(&m.inv());
                let ok = same_point(&apply(&g, &start), &end_j)
                    && same_point(&apply(&g, &end), &start_j);
                (g, PairingKind::Free, vec![i, j], ok)
            }
        };
        if !ok {
            return Err(HfsError::BadPairing { edge: i });
        }
        let word = decompose(&generator)?;
        out.push(SidePairing {
            generator,
            kind,
            edges,
            word,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ElementKind;

    #[test]
    fn index_two_generators() {
        let s: HeckeFareySymbol = "q=5; vertices=-oo,0,oo; pairings=odd,odd;".parse().unwrap();
        let gens = side_pairing_generators(&s).unwrap();
        let want: Vec<GroupElement> = ["tS", "St"]
            .iter()
            .map(|w| w.parse::<Word>().unwrap().eval(5).unwrap())
            .collect();
        let got: Vec<GroupElement> = gens.iter().map(|g| g.generator.clone()).collect();
        assert_eq!(got, want);
        for g in &gens {
            assert_eq!(g.generator.classify(), ElementKind::Elliptic(5));
        }
    }

    #[test]
    fn full_group_generators() {
        let s: HeckeFareySymbol = "q=5; vertices=-oo,0,oo; pairings=even,odd;"
            .parse()
            .unwrap();
        let gens = side_pairing_generators(&s).unwrap();
        assert_eq!(gens[0].generator, GroupElement::s(5).unwrap());
        assert_eq!(gens[1].word.to_string(), "St");
    }

    #[test]
    fn non_adjacent_edge() {
        let s: HeckeFareySymbol = "q=5; vertices=-oo,0,2,oo; pairings=even,even,even;"
            .parse()
            .unwrap();
        assert!(matches!(
            side_pairing_generators(&s),
            Err(HfsError::NotAdjacent { edge: 1, .. })
        ));
    }

    #[test]
    fn free_pairs_are_hyperbolic_or_parabolic() {
        let s: HeckeFareySymbol = "q=3; vertices=-oo,-1,0,1,oo; pairings=1,2,2,1;"
            .parse()
            .unwrap();
        let gens = side_pairing_generators(&s).unwrap();
        assert_eq!(gens.len(), 2);
        for g in &gens {
            assert_eq!(g.kind, PairingKind::Free);
            assert_eq!(g.generator.classify(), ElementKind::Parabolic);
        }
    }
}
