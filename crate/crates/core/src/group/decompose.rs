//! Word decomposition by nearest-multiple λ-continued-fraction reduction.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use crate::ring::RingElement;

use super::{GroupElement, GroupError, Letter, Mat2, Word};

pub const DEFAULT_DECOMPOSE_CAP: usize = 10_000;

/// Compares `a/(cλ)` with `n/2` for odd `n`, exactly.
fn cmp_half(a: &RingElement, c: &RingElement, n: i64) -> Result<Ordering, GroupError> {
    let lambda_c = c.scale(&n.into()) * RingElement::lambda(c.q())?;
    let diff = a.scale(&2.into()) - lambda_c;
    let s = diff.sign()?.to_ordering();
    Ok(match c.sign()?.to_ordering() {
        Ordering::Less => s.reverse(),
        _ => s,
    })
}

/// The integer `k` nearest to `a/(cλ)`, ties to even. `c ≠ 0`.
fn nearest_multiple(a: &RingElement, c: &RingElement) -> Result<i64, GroupError> {
    let lambda = c.min_poly().lambda_f64();
    let guess = (a.to_f64() / (c.to_f64() * lambda)).round();
    let guess = if guess.is_finite() && guess.abs() < 1e15 {
        guess as i64
    } else {
        0
    };
    // f(k) ⇔ a/(cλ) ≥ k − ½; monotone in k. Find the largest k with f(k).
    let f =
        |k: i64| -> Result<bool, GroupError> { Ok(cmp_half(a, c, 2 * k - 1)? != Ordering::Less) };
    let (mut lo, mut hi);
    let mut step = 1i64;
    if f(guess)? {
        lo = guess;
        loop {
            hi = lo + step;
            if !f(hi)? {
                break;
            }
            lo = hi;
            step *= 2;
        }
    } else {
        hi = guess;
        loop {
            lo = hi - step;
            if f(lo)? {
                break;
            }
            hi = lo;
            step *= 2;
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if f(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut k = lo;
    if k % 2 != 0 && cmp_half(a, c, 2 * k - 1)? == Ordering::Equal {
        k -= 1;
    }
    Ok(k)
}

/// Writes `g` as `T^{k₁} S T^{k₂} S ⋯ T^{kₙ} S T^m`.
///
/// Each step left-multiplies by `S·T^{−k}` with `k` nearest to
/// `a₁₁/(a₂₁λ)`, which strictly shrinks the lower-left entry under the real
/// embedding. Returns [`GroupError::NotInGroup`] if the reduction does not
/// reach an upper-triangular `±T^m` within `cap` steps.
pub fn decompose_with_cap(g: &GroupElement, cap: usize) -> Result<Word, GroupError> {
    let q = g.q();
    let lambda = RingElement::lambda(q)?;
    let mut m: Mat2 = g.matrix().clone();
    let mut exps: Vec<i64> = Vec::new();
    for _ in 0..cap {
        if m.c.is_zero() {
            return finish(&m, &exps, &lambda);
        }
        let k = nearest_multiple(&m.a, &m.c)?;
        let kl = lambda.scale(&k.into());
        let a1 = &m.a - &(&kl * &m.c);
        let b1 = &m.b - &(&kl * &m.d);
        m = Mat2::new(m.c, m.d, -a1, -b1);
        exps.push(k);
    }
    Err(GroupError::NotInGroup {
        steps: cap,
        reason: format!("lower-left entry still nonzero after {cap} steps"),
    })
}

pub fn decompose(g: &GroupElement) -> Result<Word, GroupError> {
    decompose_with_cap(g, DEFAULT_DECOMPOSE_CAP)
}

fn finish(m: &Mat2, exps: &[i64], lambda: &RingElement) -> Result<Word, GroupError> {
    let not_in = |reason: String| GroupError::NotInGroup {
        steps: exps.len(),
        reason,
    };
    // m = ±[[1, mλ],[0, 1]], and a = ±1 undoes the sign
    if !m.a.is_one() && !(-&m.a).is_one() {
        return Err(not_in(format!("diagonal entry {} is not ±1", m.a)));
    }
    let sign = &m.a;
    let shift = (&m.b * sign)
        .div_exact(lambda)
        .and_then(|x| x.as_integer().and_then(|n| n.to_i64()))
        .ok_or_else(|| {
            not_in(format!(
                "upper-right entry {} is not an integer multiple of λ",
                m.b
            ))
        })?;
    let mut letters: Vec<Letter> = Vec::new();
    for &k in exps {
        letters.extend_from_slice(Word::t_power(k).letters());
        letters.push(Letter::S);
    }
    letters.extend_from_slice(Word::t_power(shift).letters());
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_empty() {
        let id = GroupElement::identity(5).unwrap();
        assert!(decompose(&id).unwrap().is_empty());
    }

    #[test]
    fn simple_round_trip() {
        for text in ["TTSt", "St", "tS", "SttSTS"] {
            let w: Word = text.parse().unwrap();
            assert_eq!(decompose(&w.eval(5).unwrap()).unwrap(), w, "{text}");
        }
    }

    #[test]
    fn nearest_with_ties() {
        let e = |c: &[i64]| RingElement::from_i64s(5, c).unwrap();
        // a/(cλ) = 2 for a = 2λ, c = 1
        assert_eq!(nearest_multiple(&e(&[0, 2]), &e(&[1])).unwrap(), 2);
        // exact half: a = 5λ/2 not integral; use c = 2: a/(2λ) = 5/2 → 2
        assert_eq!(nearest_multiple(&e(&[0, 5]), &e(&[2])).unwrap(), 2);
        // 7/2 → 4
        assert_eq!(nearest_multiple(&e(&[0, 7]), &e(&[2])).unwrap(), 4);
        // -3/2 → -2
        assert_eq!(nearest_multiple(&e(&[0, -3]), &e(&[2])).unwrap(), -2);
        assert_eq!(nearest_multiple(&e(&[0, 3]), &e(&[-2])).unwrap(), -2);
    }

    #[test]
    fn non_member_reported() {
        // diag(λ, λ⁻¹) has determinant one but is not in G_5
        let l = RingElement::lambda(5).unwrap();
        let linv = &l - &l.from_int_like(1);
        let zero = l.from_int_like(0);
        let g = GroupElement::new(Mat2::new(l, zero.clone(), zero, linv)).unwrap();
        assert!(matches!(decompose(&g), Err(GroupError::NotInGroup { .. })));
    }

    #[test]
    fn cap_is_enforced() {
        let w: Word = "TTSTSTTTStS".parse().unwrap();
        let g = w.eval(5).unwrap();
        assert!(matches!(
            decompose_with_cap(&g, 1),
            Err(GroupError::NotInGroup { steps: 1, .. })
        ));
    }
}
