//! Minimal polynomial of `λ_q = 2cos(π/q)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// Monic integer polynomial whose largest real root is `2cos(π/q)`.
///
/// Coefficients are stored in ascending order, so `coeffs[i]` multiplies `x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPoly {
    q: u32,
    coeffs: Vec<BigInt>,
}

impl MinPoly {
    /// Computes the polynomial by folding the `2q`-th cyclotomic polynomial
    /// under `x = y + 1/y`.
    pub fn new(q: u32) -> Result<Self, RingError> {
        if q < 3 {
            return Err(RingError::InvalidQ(q));
        }
        let cyc = cyclotomic(2 * q as usize);
        Ok(Self {
            q,
            coeffs: fold_palindromic(&cyc),
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `2cos(π/q)` as a float.
    pub fn lambda_f64(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.q as f64).cos()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }
}

impl fmt::Display for MinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Cached, shared minimal polynomial for `q`.
pub fn min_poly(q: u32) -> Result<Arc<MinPoly>, RingError> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<MinPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("min poly cache poisoned").get(&q) {
        return Ok(Arc::clone(p));
    }
    let p = Arc::new(MinPoly::new(q)?);
    cache
        .lock()
        .expect("min poly cache poisoned")
        .entry(q)
        .or_insert_with(|| Arc::clone(&p));
    Ok(p)
}

pub(crate) fn bigint_to_f64(n: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(n).unwrap_or(f64::NAN)
}

/// `Φ_n(x)`, ascending coefficients.
fn cyclotomic(n: usize) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = -BigInt::one();
    num[n] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        num = div_exact_monic(&num, &cyclotomic(d));
    }
    num
}

fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quo = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= &c * dc;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quo
}

/// Given palindromic `Φ(y)` of degree `2m`, returns `P` with
/// `Φ(y) = y^m P(y + 1/y)`.
fn fold_palindromic(pal: &[BigInt]) -> Vec<BigInt> {
    let m = (pal.len() - 1) / 2;
    // D_k(x) = y^k + y^-k, D_0 = 2, D_1 = x, D_k = x D_{k-1} - D_{k-2}.
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    let mut out = vec![BigInt::zero(); m + 1];
    out[0] = pal[m].clone();
    for k in 1..=m {
        let c = &pal[m + k];
        for (i, d) in cur.iter().enumerate() {
            out[i] += c * d;
        }
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, d) in cur.iter().enumerate() {
            next[i + 1] += d;
        }
        for (i, d) in prev.iter().enumerate() {
            next[i] -= d;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    out
}
