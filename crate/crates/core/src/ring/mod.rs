//! Exact arithmetic in `Z[λ_q]` and its finite quotients by principal ideals.

mod element;
mod minpoly;
mod quotient;
pub(crate) mod snf;

pub use element::{RingElement, Sign, DEFAULT_SIGN_REFINEMENTS};
pub use minpoly::{min_poly, MinPoly};
pub use quotient::{quotient_ring, FiniteRing, Residue};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("q must be at least 3, got {0}")]
    InvalidQ(u32),
    #[error("ring elements belong to different rings (q={0} and q={1})")]
    MismatchedQ(u32, u32),
    #[error("sign test for q={0} exhausted its refinement budget")]
    PrecisionExhausted(u32),
    #[error("gcd is only implemented for q=3 and q=5, got q={0}")]
    UnsupportedQ(u32),
    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,
    #[error("cannot form the quotient by the zero ideal")]
    ZeroModulus,
    #[error("quotient ring of cardinality {0} is too large")]
    QuotientTooLarge(BigInt),
    #[error("cannot parse ring element {text:?}: {msg}")]
    Parse { text: String, msg: String },
}

/// Greatest common divisor in the Euclidean rings `Z` (`q = 3`) and
/// `Z[(1+√5)/2]` (`q = 5`), normalized to be positive under the real
/// embedding.
pub fn euclid_gcd(a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
    if a.q() != b.q() {
        return Err(RingError::MismatchedQ(a.q(), b.q()));
    }
    if !matches!(a.q(), 3 | 5) {
        return Err(RingError::UnsupportedQ(a.q()));
    }
    if a.is_zero() && b.is_zero() {
        return Err(RingError::ZeroGcd);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = euclid_rem(&x, &y);
        x = std::mem::replace(&mut y, r);
    }
    x.sign_flip_if_negative()
}

/// Remainder of division with the quotient rounded coefficientwise; its norm
/// is strictly smaller than `|N(d)|` in both supported rings.
fn euclid_rem(a: &RingElement, d: &RingElement) -> RingElement {
    match d.degree() {
        1 => {
            let (x, y) = (&a.coeffs()[0], &d.coeffs()[0]);
            RingElement::from_coeffs(a.q(), vec![x.mod_floor(y)]).expect("valid q")
        }
        _ => {
            let conj = d.quadratic_conjugate().expect("quadratic ring");
            let mut n = d.norm();
            let mut num = a * &conj;
            if n.is_negative() {
                n = -n;
                num = -num;
            }
            let coeffs: Vec<BigInt> = num
                .coeffs()
                .iter()
                .map(|c| element::round_div(c, &n))
                .collect();
            let quo = RingElement::from_coeffs(a.q(), coeffs).expect("valid q");
            a - &(&quo * d)
        }
    }
}
