//! Hecke-Farey symbols: a vertex chain `−∞ < x₁ < ⋯ < x_{n−1} < ∞` with one
//! label per edge, encoding a special polygon and its side pairings.

mod invariants;
mod pairing;
mod text;

pub use invariants::{cusp_data, invariants, CuspData, InvariantSet};
pub use pairing::{edge_matrix, side_pairing_generators, PairingKind, SidePairing};
pub use text::{parse_hfs, serialize_hfs};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::fpenum::FpError;
use crate::group::GroupError;
use crate::ring::{euclid_gcd, RingElement, RingError, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HfsError {
    #[error("line {line}: {msg} (at {token:?})")]
    Syntax {
        line: usize,
        token: String,
        msg: String,
    },
    #[error("pairing count must equal vertex gaps: {vertices} vertices, {pairings} pairings")]
    PairingCount { vertices: usize, pairings: usize },
    #[error("free label {label} occurs {count} time(s); it must occur exactly twice")]
    FreeLabel { label: u64, count: usize },
    #[error("vertex list must start with -oo, end with oo and have them nowhere else")]
    Endpoints,
    #[error("vertex {index} is not greater than its predecessor")]
    NotIncreasing { index: usize },
    #[error("vertex {index} has a non-positive denominator")]
    NonPositiveDenominator { index: usize },
    #[error("vertex {index} is not in lowest terms")]
    NotLowestTerms { index: usize },
    #[error("edge {edge} is not a unimodular Farey edge: {reason}")]
    NotAdjacent { edge: usize, reason: String },
    #[error("pairing on edge {edge} does not map the edge as required")]
    BadPairing { edge: usize },
    #[error("vertex {vertex}: adjacent edge matrices do not differ by S·T^m with m ≥ 0")]
    BadCorner { vertex: usize },
    #[error("genus is not a non-negative integer: 4q·g = {four_q_g}")]
    BadGenus { four_q_g: i64 },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Fp(#[from] FpError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vertex {
    NegInfinity,
    Infinity,
    Finite { num: RingElement, den: RingElement },
}

impl Vertex {
    /// Homogeneous column `(x, y)`; `−∞ = (−1, 0)` and `∞ = (1, 0)`.
    pub fn column(&self, q: u32) -> Result<(RingElement, RingElement), RingError> {
        match self {
            Vertex::NegInfinity => Ok((RingElement::integer(q, -1)?, RingElement::zero(q)?)),
            Vertex::Infinity => Ok((RingElement::one(q)?, RingElement::zero(q)?)),
            Vertex::Finite { num, den } => Ok((num.clone(), den.clone())),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::NegInfinity => f.write_str("-oo"),
            Vertex::Infinity => f.write_str("oo"),
            Vertex::Finite { num, den } if den.is_one() => write!(f, "{num}"),
            Vertex::Finite { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    Even,
    Odd,
    Free(u64),
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pairing::Even => f.write_str("even"),
            Pairing::Odd => f.write_str("odd"),
            Pairing::Free(n) => write!(f, "{n}"),
        }
    }
}

/// A validated Hecke-Farey symbol. Edge `i` joins `vertices[i]` and
/// `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeFareySymbol {
    q: u32,
    vertices: Vec<Vertex>,
    pairings: Vec<Pairing>,
}

impl HeckeFareySymbol {
    pub fn new(q: u32, vertices: Vec<Vertex>, pairings: Vec<Pairing>) -> Result<Self, HfsError> {
        let s = Self {
            q,
            vertices,
            pairings,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    pub fn edge_count(&self) -> usize {
        self.pairings.len()
    }

    /// Free pairs as `(first edge, second edge)`, ordered by first edge.
    pub fn free_pairs(&self) -> Vec<(usize, usize)> {
        let mut by_label: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (i, p) in self.pairings.iter().enumerate() {
            if let Pairing::Free(l) = p {
                by_label.entry(*l).or_default().push(i);
            }
        }
        let mut pairs: Vec<(usize, usize)> = by_label.values().map(|v| (v[0], v[1])).collect();
        pairs.sort_unstable();
        pairs
    }

    fn validate(&self) -> Result<(), HfsError> {
        let n = self.vertices.len();
        if n < 2 || self.pairings.len() != n - 1 {
            return Err(HfsError::PairingCount {
                vertices: n,
                pairings: self.pairings.len(),
            });
        }
        if self.vertices[0] != Vertex::NegInfinity || self.vertices[n - 1] != Vertex::Infinity {
            return Err(HfsError::Endpoints);
        }
        let mut prev: Option<(&RingElement, &RingElement)> = None;
        for (index, v) in self.vertices[1..n - 1]
            .iter()
            .enumerate()
            .map(|(i, v)| (i + 1, v))
        {
            let Vertex::Finite { num, den } = v else {
                return Err(HfsError::Endpoints);
            };
            if num.q() != self.q || den.q() != self.q {
                return Err(RingError::MismatchedQ(self.q, num.q()).into());
            }
            if den.sign()? != Sign::Positive {
                return Err(HfsError::NonPositiveDenominator { index });
            }
            if matches!(self.q, 3 | 5) && !euclid_gcd(num, den)?.is_unit() {
                return Err(HfsError::NotLowestTerms { index });
            }
            if let Some((pn, pd)) = prev {
                // pn/pd < num/den ⇔ pn·den < num·pd, denominators positive
                if (pn * den).cmp_real(&(num * pd))? != Ordering::Less {
                    return Err(HfsError::NotIncreasing { index });
                }
            }
            prev = Some((num, den));
        }
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for p in &self.pairings {
            if let Pairing::Free(l) = p {
                *counts.entry(*l).or_default() += 1;
            }
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(HfsError::FreeLabel { label, count });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(q: u32, n: i64, d: i64) -> Vertex {
        Vertex::Finite {
            num: RingElement::integer(q, n).unwrap(),
            den: RingElement::integer(q, d).unwrap(),
        }
    }

    #[test]
    fn validation_errors() {
        use Pairing::*;
        let ok = |v: Vec<Vertex>, p: Vec<Pairing>| HeckeFareySymbol::new(3, v, p);
        assert!(ok(
            vec![Vertex::NegInfinity, fin(3, 0, 1), Vertex::Infinity],
            vec![Even, Odd]
        )
        .is_ok());
        assert!(matches!(
            ok(
                vec![Vertex::NegInfinity, fin(3, 0, 1), Vertex::Infinity],
                vec![Odd]
            ),
            Err(HfsError::PairingCount { .. })
        ));
        assert!(matches!(
            ok(
                vec![
                    Vertex::NegInfinity,
                    fin(3, 1, 1),
                    fin(3, 0, 1),
                    Vertex::Infinity
                ],
                vec![Even, Even, Even]
            ),
            Err(HfsError::NotIncreasing { index: 2 })
        ));
        assert!(matches!(
            ok(
                vec![Vertex::NegInfinity, fin(3, 2, 2), Vertex::Infinity],
                vec![Even, Even]
            ),
            Err(HfsError::NotLowestTerms { index: 1 })
        ));
        assert!(matches!(
            ok(
                vec![Vertex::NegInfinity, fin(3, 1, -1), Vertex::Infinity],
                vec![Even, Even]
            ),
            Err(HfsError::NonPositiveDenominator { index: 1 })
        ));
        assert!(matches!(
            ok(
                vec![
                    Vertex::NegInfinity,
                    fin(3, 0, 1),
                    fin(3, 1, 1),
                    Vertex::Infinity
                ],
                vec![Free(1), Free(1), Free(1)]
            ),
            Err(HfsError::FreeLabel { label: 1, count: 3 })
        ));
        assert!(matches!(
            ok(vec![fin(3, 0, 1), Vertex::Infinity], vec![Even]),
            Err(HfsError::Endpoints)
        ));
    }
}
