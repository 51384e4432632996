use std::fmt;

use crate::ring::{RingElement, Sign};

use super::GroupError;

/// A 2×2 matrix over `Z[λ_q]` with no determinant constraint.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: RingElement,
    pub b: RingElement,
    pub c: RingElement,
    pub d: RingElement,
}

impl Mat2 {
    pub fn new(a: RingElement, b: RingElement, c: RingElement, d: RingElement) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_i64s(q: u32, entries: [&[i64]; 4]) -> Result<Self, GroupError> {
        let [a, b, c, d] = entries.map(|e| RingElement::from_i64s(q, e));
        Ok(Self::new(a?, b?, c?, d?))
    }

    pub fn identity(q: u32) -> Result<Self, GroupError> {
        Self::from_i64s(q, [&[1], &[0], &[0], &[1]])
    }

    /// The swap `[[0,1],[1,0]]`, determinant −1.
    pub fn swap(q: u32) -> Result<Self, GroupError> {
        Self::from_i64s(q, [&[0], &[1], &[1], &[0]])
    }

    pub fn q(&self) -> u32 {
        self.a.q()
    }

    pub fn entries(&self) -> [&RingElement; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> RingElement {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> RingElement {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn adjugate(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn scale(&self, k: &RingElement) -> Self {
        Self {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
        }
    }

    /// Applies the matrix to a column vector `(x, y)`, i.e. to the point
    /// `x/y` of the projective line.
    pub fn apply(&self, x: &RingElement, y: &RingElement) -> (RingElement, RingElement) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    pub fn is_scalar_pm_one(&self) -> bool {
        self.b.is_zero()
            && self.c.is_zero()
            && ((self.a.is_one() && self.d.is_one())
                || ((-&self.a).is_one() && (-&self.d).is_one()))
    }

    /// Parses `[[a,b],[c,d]]` with ring-element entries.
    pub fn parse(q: u32, text: &str) -> Result<Self, GroupError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || GroupError::Parse(text.to_string());
        let inner = s
            .strip_prefix("[[")
            .and_then(|r| r.strip_suffix("]]"))
            .ok_or_else(bad)?;
        let (row1, row2) = inner.split_once("],[").ok_or_else(bad)?;
        let split = |row: &str| -> Result<(RingElement, RingElement), GroupError> {
            let (x, y) = row.split_once(',').ok_or_else(bad)?;
            Ok((RingElement::parse(q, x)?, RingElement::parse(q, y)?))
        };
        let (a, b) = split(row1)?;
        let (c, d) = split(row2)?;
        Ok(Self::new(a, b, c, d))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Conjugacy-invariant type of a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Identity,
    Elliptic(u32),
    Parabolic,
    Hyperbolic,
}

/// An element of `PSL₂(Z[λ_q])`: determinant one, stored with the sign
/// normalized so `M` and `−M` compare equal. The first nonzero entry in
/// row-major order is positive under the real embedding.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(Mat2);

impl GroupElement {
    pub fn new(m: Mat2) -> Result<Self, GroupError> {
        if !m.det().is_one() {
            return Err(GroupError::NotUnimodular(m.to_string()));
        }
        Self::canonical(m)
    }

    fn canonical(m: Mat2) -> Result<Self, GroupError> {
        let first = m
            .entries()
            .into_iter()
            .find(|e| !e.is_zero())
            .expect("determinant one")
            .sign()?;
        Ok(Self(if first == Sign::Negative { m.neg() } else { m }))
    }

    pub fn identity(q: u32) -> Result<Self, GroupError> {
        Ok(Self(Mat2::identity(q)?))
    }

    /// `S = [[0,1],[-1,0]]`.
    pub fn s(q: u32) -> Result<Self, GroupError> {
        Self::new(Mat2::from_i64s(q, [&[0], &[1], &[-1], &[0]])?)
    }

    /// `T = [[1,λ],[0,1]]`.
    pub fn t(q: u32) -> Result<Self, GroupError> {
        Self::new(Mat2::from_i64s(q, [&[1], &[0, 1], &[0], &[1]])?)
    }

    pub fn q(&self) -> u32 {
        self.0.q()
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn into_matrix(self) -> Mat2 {
        self.0
    }

    pub fn trace(&self) -> RingElement {
        self.0.trace()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::canonical(self.0.mul(&o.0)).expect("sign of a nonzero entry")
    }

    pub fn inv(&self) -> Self {
        Self::canonical(self.0.adjugate()).expect("sign of a nonzero entry")
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::identity(self.q()).expect("valid q");
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_scalar_pm_one()
    }

    /// `h·g·h⁻¹` for `det h = ±1`; `h` need not lie in the group.
    pub fn conjugate_by(&self, h: &Mat2) -> Result<Self, GroupError> {
        let det = h.det();
        let unit = det.is_one() || (-&det).is_one();
        if !unit {
            return Err(GroupError::NotUnimodular(h.to_string()));
        }
        // h⁻¹ = det·adj(h) when det = ±1
        let h_inv = h.adjugate().scale(&det);
        Self::new(h.mul(&self.0).mul(&h_inv))
    }

    pub fn conjugate(&self, h: &GroupElement) -> Self {
        h.mul(self).mul(&h.inv())
    }

    /// Exact classification; elliptic orders are found by powering up to `2q`.
    pub fn classify(&self) -> ElementKind {
        if self.is_identity() {
            return ElementKind::Identity;
        }
        let tr = self.trace();
        let two = tr.from_int_like(2);
        if tr == two || tr == -&two {
            return ElementKind::Parabolic;
        }
        let mut p = self.clone();
        for n in 2..=2 * self.q() {
            p = p.mul(self);
            if p.is_identity() {
                return ElementKind::Elliptic(n);
            }
        }
        ElementKind::Hyperbolic
    }

    pub fn parse(q: u32, text: &str) -> Result<Self, GroupError> {
        Self::new(Mat2::parse(q, text)?)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
