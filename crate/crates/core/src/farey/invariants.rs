//! Index, elliptic and cusp counts, genus, and cusp widths of a symbol.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::fpenum::{todd_coxeter, Presentation, DEFAULT_COSET_CAP};
use crate::group::{GroupElement, Mat2};
use crate::ring::RingElement;

use super::pairing::{edge_matrix, side_pairing_generators};
use super::{HeckeFareySymbol, HfsError, Pairing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantSet {
    pub d: u64,
    pub v2: u64,
    pub vq: u64,
    pub v_inf: u64,
    pub r: u64,
    pub g: u64,
}

impl InvariantSet {
    /// `(q−2)·d = q·v₂ + 2(q−1)·v_q + 4q·g + 2q·v_∞ − 4q`.
    pub fn riemann_hurwitz_holds(&self, q: u32) -> bool {
        let q = q as i64;
        let [d, v2, vq, vi, g] = [self.d, self.v2, self.vq, self.v_inf, self.g].map(|x| x as i64);
        (q - 2) * d == q * v2 + 2 * (q - 1) * vq + 4 * q * g + 2 * q * vi - 4 * q
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspData {
    /// Vertex indices per cusp class; `−∞` and `∞` both appear as index 0.
    pub classes: Vec<Vec<usize>>,
    pub widths: Vec<u64>,
    pub geometric_width: u64,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(parent, a), find(parent, b));
    parent[a.max(b)] = a.min(b);
}

/// `m ≥ 0` with `p = ±T^m`.
fn translation_power(p: &Mat2, vertex: usize) -> Result<u64, HfsError> {
    let bad = || HfsError::BadCorner { vertex };
    if !p.c.is_zero() {
        return Err(bad());
    }
    let sign = if p.a.is_one() {
        1
    } else if (-&p.a).is_one() {
        -1
    } else {
        return Err(bad());
    };
    let lambda = RingElement::lambda(p.q())?;
    let b = p.b.scale(&sign.into());
    let m = b
        .div_exact(&lambda)
        .and_then(|x| x.as_integer().cloned())
        .ok_or_else(bad)?;
    if m.is_negative() {
        return Err(bad());
    }
    m.to_u64().ok_or_else(bad)
}

/// Cusp classes and widths.
///
/// At vertex `k` the incoming and outgoing edge matrices satisfy
/// `M_in = M_out·S·T^m`, i.e. `m` Farey triangles of the tessellation meet
/// there between the two edges. Each such gap contributes two corners and
/// each odd edge at the vertex one more; a class of width `w` collects `2w`
/// corners.
pub fn cusp_data(s: &HeckeFareySymbol) -> Result<CuspData, HfsError> {
    let n = s.edge_count();
    let slot = |v: usize| if v == n { 0 } else { v };
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, p) in s.pairings().iter().enumerate() {
        match p {
            Pairing::Even | Pairing::Odd => union(&mut parent, slot(i), slot(i + 1)),
            Pairing::Free(_) => {}
        }
    }
    for (i, j) in s.free_pairs() {
        union(&mut parent, slot(i), slot(j + 1));
        union(&mut parent, slot(i + 1), slot(j));
    }

    let sm = GroupElement::s(s.q())?.into_matrix();
    let mats = (0..n)
        .map(|i| edge_matrix(s, i))
        .collect::<Result<Vec<_>, _>>()?;
    let is_odd = |e: usize| s.pairings()[e] == Pairing::Odd;
    let mut corners = vec![0u64; n];
    for k in 0..n {
        let incoming = (k + n - 1) % n;
        let p = mats[k].mul(&sm).adjugate().mul(&mats[incoming]);
        let m = translation_power(&p, k)?;
        corners[k] = 2 * m + u64::from(is_odd(k)) + u64::from(is_odd(incoming));
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_of_class: Vec<usize> = Vec::new();
    for k in 0..n {
        let r = find(&mut parent, k);
        match root_of_class.iter().position(|&x| x == r) {
            Some(c) => classes[c].push(k),
            None => {
                root_of_class.push(r);
                classes.push(vec![k]);
            }
        }
    }
    let widths: Vec<u64> = classes
        .iter()
        .map(|c| c.iter().map(|&k| corners[k]).sum::<u64>() / 2)
        .collect();
    let geometric_width = widths.iter().fold(1u64, |acc, &w| acc.lcm(&w));
    Ok(CuspData {
        classes,
        widths,
        geometric_width,
    })
}

/// Counts from the labels, `d` by coset enumeration on the side-pairing
/// words, and the genus solved from the Riemann–Hurwitz relation.
pub fn invariants(s: &HeckeFareySymbol) -> Result<InvariantSet, HfsError> {
    let q = s.q();
    let gens = side_pairing_generators(s)?;
    let pres = Presentation::new(q);
    let words: Vec<_> = gens.iter().map(|g| pres.translate(&g.word)).collect();
    let d = todd_coxeter(&pres, &words, DEFAULT_COSET_CAP)?.index() as u64;
    let count = |want: &Pairing| s.pairings().iter().filter(|p| *p == want).count() as u64;
    let v2 = count(&Pairing::Even);
    let vq = count(&Pairing::Odd);
    let r = s.free_pairs().len() as u64;
    let v_inf = cusp_data(s)?.classes.len() as u64;

    let qi = q as i64;
    let four_q_g =
        (qi - 2) * d as i64 - qi * v2 as i64 - 2 * (qi - 1) * vq as i64 - 2 * qi * v_inf as i64
            + 4 * qi;
    if four_q_g < 0 || four_q_g % (4 * qi) != 0 {
        return Err(HfsError::BadGenus { four_q_g });
    }
    Ok(InvariantSet {
        d,
        v2,
        vq,
        v_inf,
        r,
        g: (four_q_g / (4 * qi)) as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(text: &str) -> HeckeFareySymbol {
        text.parse().unwrap()
    }

    #[test]
    fn index_two() {
        let s = sym("q=5; vertices=-oo,0,oo; pairings=odd,odd;");
        let inv = invariants(&s).unwrap();
        assert_eq!((inv.d, inv.v2, inv.vq, inv.v_inf, inv.g), (2, 0, 2, 1, 0));
        assert!(inv.riemann_hurwitz_holds(5));
        let c = cusp_data(&s).unwrap();
        assert_eq!(c.widths, vec![2]);
    }

    #[test]
    fn whole_group() {
        let s = sym("q=5; vertices=-oo,0,oo; pairings=even,odd;");
        let inv = invariants(&s).unwrap();
        assert_eq!((inv.d, inv.v2, inv.vq, inv.v_inf, inv.g), (1, 1, 1, 1, 0));
        assert_eq!(cusp_data(&s).unwrap().widths, vec![1]);
    }

    #[test]
    fn level_two_modular() {
        let s = sym("q=3; vertices=-oo,-1,0,1,oo; pairings=1,2,2,1;");
        let inv = invariants(&s).unwrap();
        assert_eq!((inv.d, inv.v_inf, inv.r, inv.g), (6, 3, 2, 0));
        let c = cusp_data(&s).unwrap();
        assert_eq!(c.classes, vec![vec![0], vec![1, 3], vec![2]]);
        assert_eq!(c.widths, vec![2, 2, 2]);
        assert_eq!(c.geometric_width, 2);
    }
}
