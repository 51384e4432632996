//! Smith normal form over `Z`, tracking the row transform only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Matrix = Vec<Vec<BigInt>>;

pub(crate) struct Smith {
    /// Diagonal entries `d_0 | d_1 | ...`, non-negative.
    pub diag: Vec<BigInt>,
    /// Unimodular `U` with `U·A·V = diag(d)` for some unimodular `V`.
    pub row: Matrix,
    pub row_inv: Matrix,
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Row op `r_i += k·r_j`, applied to `U`; the inverse op `c_j -= k·c_i` to `U⁻¹`.
fn add_row(a: &mut Matrix, u: &mut Matrix, uinv: &mut Matrix, i: usize, j: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    for c in 0..a[0].len() {
        let v = &a[j][c] * k;
        a[i][c] += v;
    }
    for c in 0..u[0].len() {
        let v = &u[j][c] * k;
        u[i][c] += v;
    }
    for row in uinv.iter_mut() {
        let v = &row[i] * k;
        row[j] -= v;
    }
}

fn swap_rows(a: &mut Matrix, u: &mut Matrix, uinv: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    u.swap(i, j);
    for row in uinv.iter_mut() {
        row.swap(i, j);
    }
}

fn negate_row(a: &mut Matrix, u: &mut Matrix, uinv: &mut Matrix, i: usize) {
    for x in a[i].iter_mut() {
        *x = -&*x;
    }
    for x in u[i].iter_mut() {
        *x = -&*x;
    }
    for row in uinv.iter_mut() {
        row[i] = -&row[i];
    }
}

fn add_col(a: &mut Matrix, i: usize, j: usize, k: &BigInt) {
    for row in a.iter_mut() {
        let v = &row[j] * k;
        row[i] += v;
    }
}

fn swap_cols(a: &mut Matrix, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

pub(crate) fn smith(mut a: Matrix) -> Smith {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    let mut u = identity(n);
    let mut uinv = identity(n);
    let mut diag = Vec::new();
    for t in 0..n.min(m) {
        loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..m {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            swap_rows(&mut a, &mut u, &mut uinv, t, pi);
            swap_cols(&mut a, t, pj);
            let mut clean = true;
            for i in t + 1..n {
                let k = -a[i][t].div_floor(&a[t][t]);
                add_row(&mut a, &mut u, &mut uinv, i, t, &k);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..m {
                let k = -a[t][j].div_floor(&a[t][t]);
                add_col(&mut a, j, t, &k);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..n).find(|&i| (t + 1..m).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => add_row(&mut a, &mut u, &mut uinv, t, i, &BigInt::one()),
                None => break,
            }
        }
        if a[t][t].is_negative() {
            negate_row(&mut a, &mut u, &mut uinv, t);
        }
        diag.push(a[t][t].clone());
    }
    Smith {
        diag,
        row: u,
        row_inv: uinv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn mul(a: &Matrix, b: &Matrix) -> Matrix {
        (0..a.len())
            .map(|i| {
                (0..b[0].len())
                    .map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn diagonalizes_and_tracks_inverse() {
        let a = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(a.clone());
        let d: Vec<i64> = s.diag.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
        assert_eq!(mul(&s.row, &s.row_inv), identity(3));
        // columns of U·A lie in the diagonal lattice
        let ua = mul(&s.row, &a);
        for (i, row) in ua.iter().enumerate() {
            for x in row {
                assert!(x.is_multiple_of(&s.diag[i]));
            }
        }
    }

    #[test]
    fn five_lambda_plus_two() {
        // multiplication by λ+2 in Z[λ]/(λ²-λ-1)
        let s = smith(mat(&[&[2, 1], &[1, 3]]));
        let d: Vec<i64> = s.diag.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 5]);
    }
}
