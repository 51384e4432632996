use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::minpoly::{bigint_to_f64, min_poly, MinPoly};
use super::RingError;

/// Sign of a ring element under the real embedding `λ ↦ 2cos(π/q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    fn of_bigint(n: &BigInt) -> Self {
        if n.is_zero() {
            Sign::Zero
        } else if n.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Bisection cap for the interval sign test on degree ≥ 3 rings.
pub const DEFAULT_SIGN_REFINEMENTS: u32 = 4096;

/// An element `Σ coeffs[i]·λ^i` of `Z[λ_q]`, always reduced modulo the
/// minimal polynomial so equal values have identical coefficient vectors.
#[derive(Clone)]
pub struct RingElement {
    poly: Arc<MinPoly>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.poly.q() == other.poly.q() && self.coeffs == other.coeffs
    }
}

impl Eq for RingElement {}

impl Hash for RingElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.poly.q().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl RingElement {
    /// Builds an element from arbitrary-length coefficients, reducing them.
    pub fn from_coeffs(q: u32, coeffs: Vec<BigInt>) -> Result<Self, RingError> {
        Ok(Self::reduced(min_poly(q)?, coeffs))
    }

    pub fn from_i64s(q: u32, coeffs: &[i64]) -> Result<Self, RingError> {
        Self::from_coeffs(q, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn integer(q: u32, n: i64) -> Result<Self, RingError> {
        Self::from_i64s(q, &[n])
    }

    pub fn zero(q: u32) -> Result<Self, RingError> {
        Self::integer(q, 0)
    }

    pub fn one(q: u32) -> Result<Self, RingError> {
        Self::integer(q, 1)
    }

    pub fn lambda(q: u32) -> Result<Self, RingError> {
        Self::from_i64s(q, &[0, 1])
    }

    pub(crate) fn reduced(poly: Arc<MinPoly>, mut coeffs: Vec<BigInt>) -> Self {
        let n = poly.degree();
        let mp = poly.coeffs();
        while coeffs.len() > n {
            let top = coeffs.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - n;
            for (i, c) in mp[..n].iter().enumerate() {
                coeffs[shift + i] -= &top * c;
            }
        }
        coeffs.resize(n, BigInt::zero());
        Self { poly, coeffs }
    }

    fn sibling(&self, coeffs: Vec<BigInt>) -> Self {
        Self::reduced(Arc::clone(&self.poly), coeffs)
    }

    pub fn from_int_like(&self, n: i64) -> Self {
        self.sibling(vec![BigInt::from(n)])
    }

    pub fn q(&self) -> u32 {
        self.poly.q()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn min_poly(&self) -> &Arc<MinPoly> {
        &self.poly
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The integer value if the element lies in `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_same(&self, other: &Self) -> Result<(), RingError> {
        if self.q() != other.q() {
            return Err(RingError::MismatchedQ(self.q(), other.q()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            poly: Arc::clone(&self.poly),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            poly: Arc::clone(&self.poly),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let n = self.degree();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(self.sibling(prod))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            poly: Arc::clone(&self.poly),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.from_int_like(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Column `j` is `self·λ^j`; the lattice `self·Z[λ]` is its column span.
    pub fn multiplication_matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.degree();
        let lambda = self.sibling(vec![BigInt::zero(), BigInt::one()]);
        let mut cols = Vec::with_capacity(n);
        let mut cur = self.clone();
        for _ in 0..n {
            cols.push(cur.coeffs.clone());
            cur = &cur * &lambda;
        }
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    /// Field norm, the determinant of multiplication by `self`.
    pub fn norm(&self) -> BigInt {
        bareiss_det(self.multiplication_matrix())
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// `self / d` when the quotient lies in `Z[λ]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if self.q() != d.q() || d.is_zero() {
            return None;
        }
        let m = d.multiplication_matrix();
        let rhs: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let sol = solve_rational(m, rhs)?;
        let coeffs = sol
            .into_iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(self.sibling(coeffs))
    }

    pub fn divides(&self, a: &Self) -> bool {
        a.div_exact(self).is_some()
    }

    /// Real value under `λ ↦ 2cos(π/q)`, approximate.
    pub fn to_f64(&self) -> f64 {
        let x = self.poly.lambda_f64();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    /// Exact sign for degree ≤ 2; bisection on an isolating interval of `λ`
    /// otherwise.
    pub fn sign(&self) -> Result<Sign, RingError> {
        self.sign_with_cap(DEFAULT_SIGN_REFINEMENTS)
    }

    pub fn sign_with_cap(&self, max_refinements: u32) -> Result<Sign, RingError> {
        if self.is_zero() {
            return Ok(Sign::Zero);
        }
        match self.degree() {
            1 => Ok(Sign::of_bigint(&self.coeffs[0])),
            2 => Ok(self.quadratic_sign()),
            _ => interval_sign(self, max_refinements),
        }
    }

    /// Total order by real value.
    pub fn cmp_real(&self, other: &Self) -> Result<Ordering, RingError> {
        Ok(self.try_sub(other)?.sign()?.to_ordering())
    }

    fn quadratic_sign(&self) -> Sign {
        // λ = (-b + √D)/2 for x² + bx + c, the larger root.
        let mp = self.poly.coeffs();
        let (c, b) = (&mp[0], &mp[1]);
        let disc = b * b - BigInt::from(4) * c;
        let (a0, a1) = (&self.coeffs[0], &self.coeffs[1]);
        // 2·value = u + v√D
        let u = BigInt::from(2) * a0 - a1 * b;
        let v = a1.clone();
        sign_of_surd(&u, &v, &disc)
    }

    /// Galois conjugate for degree-2 rings: `λ ↦ -b - λ`.
    pub fn quadratic_conjugate(&self) -> Option<Self> {
        if self.degree() != 2 {
            return None;
        }
        let b = &self.poly.coeffs()[1];
        let (a0, a1) = (&self.coeffs[0], &self.coeffs[1]);
        Some(self.sibling(vec![a0 - a1 * b, -a1]))
    }

    /// Parses `INT ( ("+"|"-") UINT "L" ( "^" UINT )? )*`, whitespace ignored.
    pub fn parse(q: u32, text: &str) -> Result<Self, RingError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| RingError::Parse {
            text: text.to_string(),
            msg: msg.to_string(),
        };
        let bytes = s.as_bytes();
        let mut pos = 0;
        let read_uint = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (start < *pos).then(|| s[start..*pos].parse().expect("digits"))
        };
        let neg = if bytes.first() == Some(&b'-') {
            pos += 1;
            true
        } else {
            false
        };
        let a0 = read_uint(&mut pos).ok_or_else(|| err("expected integer constant term"))?;
        let mut coeffs = vec![if neg { -a0 } else { a0 }];
        while pos < bytes.len() {
            let sign = match bytes[pos] {
                b'+' => BigInt::one(),
                b'-' => -BigInt::one(),
                _ => return Err(err("expected '+' or '-'")),
            };
            pos += 1;
            let mag = read_uint(&mut pos).ok_or_else(|| err("expected coefficient"))?;
            if bytes.get(pos) != Some(&b'L') {
                return Err(err("expected 'L'"));
            }
            pos += 1;
            let power = if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                read_uint(&mut pos)
                    .and_then(|p| p.to_usize())
                    .filter(|&p| p >= 1)
                    .ok_or_else(|| err("expected exponent"))?
            } else {
                1
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += sign * mag;
        }
        Self::from_coeffs(q, coeffs)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs[0])?;
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            let op = if c.is_negative() { '-' } else { '+' };
            if i == 1 {
                write!(f, "{op}{}L", c.abs())?;
            } else {
                write!(f, "{op}{}L^{i}", c.abs())?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$try(rhs).expect("ring elements over different q")
            }
        }
        impl $tr<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            poly: Arc::clone(&self.poly),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// Sign of `u + v√d` for a non-square `d > 0`.
fn sign_of_surd(u: &BigInt, v: &BigInt, d: &BigInt) -> Sign {
    let su = Sign::of_bigint(u);
    let sv = Sign::of_bigint(v);
    match (su, sv) {
        (Sign::Zero, s) | (s, Sign::Zero) => s,
        (a, b) if a == b => a,
        _ => {
            let lhs = u * u;
            let rhs = v * v * d;
            match lhs.cmp(&rhs) {
                Ordering::Greater => su,
                Ordering::Less => sv,
                Ordering::Equal => Sign::Zero,
            }
        }
    }
}

fn eval_poly_rational(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    })
}

fn rational_sign(r: &BigRational) -> Sign {
    if r.is_zero() {
        Sign::Zero
    } else if r.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Bisection on `[lo, hi] ∋ λ` until the interval image of the element
/// excludes zero. All of `[lo, hi]` is positive since `λ ≥ 1`.
fn interval_sign(a: &RingElement, max_refinements: u32) -> Result<Sign, RingError> {
    let mp = a.poly.coeffs();
    let approx = a.poly.lambda_f64();
    let to_rat = |x: f64| BigRational::from_float(x).expect("finite");
    let mut lo = to_rat(approx - 1e-9);
    let mut hi = to_rat(approx + 1e-9);
    let s_lo = rational_sign(&eval_poly_rational(mp, &lo));
    let s_hi = rational_sign(&eval_poly_rational(mp, &hi));
    if s_lo == s_hi || s_lo == Sign::Zero || s_hi == Sign::Zero {
        return Err(RingError::PrecisionExhausted(a.q()));
    }
    for _ in 0..max_refinements {
        let (mut lower, mut upper) = (BigRational::zero(), BigRational::zero());
        let (mut plo, mut phi) = (BigRational::one(), BigRational::one());
        for c in &a.coeffs {
            let c = BigRational::from_integer(c.clone());
            if c.is_positive() {
                lower += &c * &plo;
                upper += &c * &phi;
            } else {
                lower += &c * &phi;
                upper += &c * &plo;
            }
            plo *= &lo;
            phi *= &hi;
        }
        if lower.is_positive() {
            return Ok(Sign::Positive);
        }
        if upper.is_negative() {
            return Ok(Sign::Negative);
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        let s_mid = rational_sign(&eval_poly_rational(mp, &mid));
        if s_mid == Sign::Zero {
            // λ is irrational for degree ≥ 2; unreachable in practice.
            return Err(RingError::PrecisionExhausted(a.q()));
        }
        if s_mid == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(RingError::PrecisionExhausted(a.q()))
}

/// Fraction-free determinant.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn solve_rational(m: Vec<Vec<BigInt>>, rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .into_iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut row: Vec<BigRational> =
                row.into_iter().map(BigRational::from_integer).collect();
            row.push(r);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Rounds `num/den` to the nearest integer, ties away from zero. `den > 0`.
pub(crate) fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (two.clone() * num + den).div_floor(&(two * den))
}

impl RingElement {
    pub(crate) fn sign_flip_if_negative(self) -> Result<Self, RingError> {
        Ok(match self.sign()? {
            Sign::Negative => -self,
            _ => self,
        })
    }
}
