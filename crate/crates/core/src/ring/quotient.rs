//! `Z[λ]/(α)` as a finite ring.
//!
//! The ideal `α·Z[λ]` is a full-rank sublattice of `Z^n`. Diagonalizing it
//! gives `Z[λ]/(α) ≅ ⊕ Z/d_i`; a residue is stored as a single mixed-radix
//! index over the nontrivial `d_i`, which makes residues cheap to hash and
//! lets small rings use dense operation tables.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::snf::smith;
use super::{RingElement, RingError};

/// Residues with index beyond this are rejected.
const MAX_CARDINALITY: u64 = 1 << 31;
/// Rings up to this size get dense add/mul tables.
const TABLE_LIMIT: u64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Residue(pub u32);

#[derive(Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

#[derive(Clone)]
pub struct FiniteRing {
    modulus: RingElement,
    moduli: Vec<u64>,
    strides: Vec<u64>,
    encode_rows: Vec<Vec<BigInt>>,
    lift_cols: Vec<Vec<BigInt>>,
    /// `mul_consts[(i*k + j)*k + l]`: digit `l` of `lift_i · lift_j`.
    mul_consts: Vec<u64>,
    cardinality: u64,
    tables: Option<Tables>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("modulus", &self.modulus)
            .field("moduli", &self.moduli)
            .field("cardinality", &self.cardinality)
            .finish()
    }
}

pub fn quotient_ring(alpha: &RingElement) -> Result<FiniteRing, RingError> {
    FiniteRing::new(alpha)
}

impl FiniteRing {
    pub fn new(alpha: &RingElement) -> Result<Self, RingError> {
        if alpha.is_zero() {
            return Err(RingError::ZeroModulus);
        }
        let s = smith(alpha.multiplication_matrix());
        let card: BigInt = s.diag.iter().product();
        let cardinality = card
            .to_u64()
            .filter(|&c| c <= MAX_CARDINALITY)
            .ok_or_else(|| RingError::QuotientTooLarge(card.clone()))?;
        let n = alpha.degree();
        let nontrivial: Vec<usize> = (0..n).filter(|&i| !s.diag[i].is_one()).collect();
        let moduli: Vec<u64> = nontrivial
            .iter()
            .map(|&i| s.diag[i].to_u64().expect("bounded by cardinality"))
            .collect();
        let mut strides = Vec::with_capacity(moduli.len());
        let mut acc = 1u64;
        for &m in &moduli {
            strides.push(acc);
            acc *= m;
        }
        let encode_rows = nontrivial.iter().map(|&i| s.row[i].clone()).collect();
        let lift_cols = nontrivial
            .iter()
            .map(|&i| (0..n).map(|r| s.row_inv[r][i].clone()).collect())
            .collect();
        let mut ring = Self {
            modulus: alpha.clone(),
            moduli,
            strides,
            encode_rows,
            lift_cols,
            mul_consts: Vec::new(),
            cardinality,
            tables: None,
        };
        let k = ring.moduli.len();
        let lifts: Vec<RingElement> = (0..k).map(|i| ring.lift_basis(i)).collect();
        let mut consts = Vec::with_capacity(k * k * k);
        for a in &lifts {
            for b in &lifts {
                consts.extend(ring.digits_of(&(a * b)));
            }
        }
        ring.mul_consts = consts;
        if cardinality <= TABLE_LIMIT {
            ring.tables = Some(ring.build_tables());
        }
        Ok(ring)
    }

    pub fn modulus(&self) -> &RingElement {
        &self.modulus
    }

    pub fn q(&self) -> u32 {
        self.modulus.q()
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    /// Nontrivial invariant factors of the additive group.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.moduli
    }

    fn lift_basis(&self, i: usize) -> RingElement {
        RingElement::from_coeffs(self.q(), self.lift_cols[i].clone()).expect("valid q")
    }

    fn digits_of(&self, a: &RingElement) -> Vec<u64> {
        self.encode_rows
            .iter()
            .zip(&self.moduli)
            .map(|(row, &m)| {
                let dot: BigInt = row.iter().zip(a.coeffs()).map(|(u, c)| u * c).sum();
                dot.mod_floor(&BigInt::from(m)).to_u64().expect("reduced")
            })
            .collect()
    }

    fn digits(&self, r: Residue) -> impl Iterator<Item = u64> + '_ {
        self.moduli
            .iter()
            .zip(&self.strides)
            .map(move |(&m, &s)| (r.0 as u64 / s) % m)
    }

    fn from_digits(&self, digits: impl IntoIterator<Item = u64>) -> Residue {
        let idx: u64 = digits
            .into_iter()
            .zip(&self.strides)
            .map(|(d, s)| d * s)
            .sum();
        Residue(idx as u32)
    }

    pub fn reduce(&self, a: &RingElement) -> Residue {
        assert_eq!(a.q(), self.q(), "reducing across rings");
        self.from_digits(self.digits_of(a))
    }

    pub fn reduce_int(&self, n: i64) -> Residue {
        self.reduce(&self.modulus.from_int_like(n))
    }

    /// A canonical preimage in `Z[λ]`.
    pub fn lift(&self, r: Residue) -> RingElement {
        let mut coeffs = vec![BigInt::zero(); self.modulus.degree()];
        for (d, col) in self.digits(r).zip(&self.lift_cols) {
            for (c, x) in coeffs.iter_mut().zip(col) {
                *c += x * BigInt::from(d);
            }
        }
        RingElement::from_coeffs(self.q(), coeffs).expect("valid q")
    }

    pub fn zero(&self) -> Residue {
        Residue(0)
    }

    pub fn one(&self) -> Residue {
        self.reduce_int(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = Residue> {
        (0..self.cardinality as u32).map(Residue)
    }

    fn build_tables(&self) -> Tables {
        let n = self.cardinality as usize;
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = self.add_slow(Residue(a as u32), Residue(b as u32)).0;
                mul[a * n + b] = self.mul_slow(Residue(a as u32), Residue(b as u32)).0;
            }
        }
        let neg = (0..n).map(|a| self.neg_slow(Residue(a as u32)).0).collect();
        Tables { add, mul, neg }
    }

    fn add_slow(&self, a: Residue, b: Residue) -> Residue {
        let d: Vec<u64> = self
            .digits(a)
            .zip(self.digits(b))
            .zip(&self.moduli)
            .map(|((x, y), &m)| (x + y) % m)
            .collect();
        self.from_digits(d)
    }

    fn neg_slow(&self, a: Residue) -> Residue {
        let d: Vec<u64> = self
            .digits(a)
            .zip(&self.moduli)
            .map(|(x, &m)| (m - x) % m)
            .collect();
        self.from_digits(d)
    }

    fn mul_slow(&self, a: Residue, b: Residue) -> Residue {
        let k = self.moduli.len();
        let da: Vec<u64> = self.digits(a).collect();
        let db: Vec<u64> = self.digits(b).collect();
        let mut out = vec![0u128; k];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                let xy = da[i] as u128 * db[j] as u128;
                for (l, o) in out.iter_mut().enumerate() {
                    *o = (*o + xy * self.mul_consts[(i * k + j) * k + l] as u128)
                        % self.moduli[l] as u128;
                }
            }
        }
        self.from_digits(out.into_iter().map(|x| x as u64))
    }

    pub fn add(&self, a: Residue, b: Residue) -> Residue {
        match &self.tables {
            Some(t) => Residue(t.add[a.0 as usize * self.cardinality as usize + b.0 as usize]),
            None => self.add_slow(a, b),
        }
    }

    pub fn neg(&self, a: Residue) -> Residue {
        match &self.tables {
            Some(t) => Residue(t.neg[a.0 as usize]),
            None => self.neg_slow(a),
        }
    }

    pub fn sub(&self, a: Residue, b: Residue) -> Residue {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Residue, b: Residue) -> Residue {
        match &self.tables {
            Some(t) => Residue(t.mul[a.0 as usize * self.cardinality as usize + b.0 as usize]),
            None => self.mul_slow(a, b),
        }
    }

    /// Whether `self.modulus` lies in the ideal of `coarser`, so reduction
    /// factors through this ring.
    pub fn refines(&self, coarser: &FiniteRing) -> bool {
        coarser.reduce(&self.modulus) == coarser.zero()
    }

    /// The induced map `Z[λ]/(α) → Z[λ]/(β)` for `β | α`.
    pub fn project(&self, coarser: &FiniteRing, r: Residue) -> Residue {
        coarser.reduce(&self.lift(r))
    }

    /// Human-readable preimage, e.g. `4+4L`.
    pub fn display(&self, r: Residue) -> String {
        let lifted = self.lift(r);
        // integer moduli: print coefficients in 0..m
        match self.modulus.as_integer() {
            Some(m) => {
                let m = m.abs();
                let coeffs = lifted.coeffs().iter().map(|c| c.mod_floor(&m)).collect();
                RingElement::from_coeffs(self.q(), coeffs)
                    .expect("valid q")
                    .to_string()
            }
            _ => lifted.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(c: &[i64]) -> RingElement {
        RingElement::from_i64s(5, c).unwrap()
    }

    #[test]
    fn mod_pi_is_field_of_five() {
        let r = quotient_ring(&e(&[2, 1])).unwrap();
        assert_eq!(r.cardinality(), 5);
        assert_eq!(r.reduce(&e(&[0, 1])), r.reduce_int(3));
        assert_eq!(r.reduce(&e(&[2, 1])), r.zero());
    }

    #[test]
    fn mod_five() {
        let r = quotient_ring(&e(&[5])).unwrap();
        assert_eq!(r.cardinality(), 25);
        assert_eq!(r.invariant_factors(), &[5, 5]);
        assert_eq!(r.reduce(&e(&[5, 10])), r.zero());
        assert_eq!(r.reduce(&e(&[-6, -11])), r.reduce(&e(&[4, 4])));
        let l = r.reduce(&e(&[0, 1]));
        let f = r.sub(r.sub(r.mul(l, l), l), r.one());
        assert_eq!(f, r.zero());
        let pi = r.reduce(&e(&[2, 1]));
        assert_ne!(pi, r.zero());
        assert_eq!(r.mul(pi, pi), r.zero());
        assert_eq!(r.display(r.reduce(&e(&[-6, -11]))), "4+4L");
    }

    #[test]
    fn unit_modulus() {
        let r = quotient_ring(&e(&[0, 1])).unwrap();
        assert_eq!(r.cardinality(), 1);
        assert_eq!(r.one(), r.zero());
    }

    #[test]
    fn zero_modulus_rejected() {
        assert!(matches!(
            quotient_ring(&e(&[0])),
            Err(RingError::ZeroModulus)
        ));
    }

    #[test]
    fn projection_between_levels() {
        let r5 = quotient_ring(&e(&[5])).unwrap();
        let rp = quotient_ring(&e(&[2, 1])).unwrap();
        assert!(r5.refines(&rp));
        assert!(!rp.refines(&r5));
        for x in r5.elements() {
            assert_eq!(r5.project(&rp, x), rp.reduce(&r5.lift(x)));
        }
    }

    #[test]
    fn large_ring_without_tables_agrees() {
        // N(40+L) = 1600 + 40 - 1
        let a = e(&[40, 1]);
        let r = quotient_ring(&a).unwrap();
        assert_eq!(r.cardinality(), 1639);
        assert!(r.tables.is_none());
        let x = e(&[123, -45]);
        let y = e(&[-7, 99]);
        assert_eq!(r.mul(r.reduce(&x), r.reduce(&y)), r.reduce(&(&x * &y)));
        assert_eq!(r.add(r.reduce(&x), r.reduce(&y)), r.reduce(&(&x + &y)));
    }
}
