//! Abelian invariants of finite-index subgroups of `Z₂ * Z_q`.
//!
//! Such a subgroup is a free product of finite cyclic groups and a free
//! group (Kurosh), so its abelianization is the direct sum of the factors.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::ring::snf::smith;

use super::{CosetTable, Gen};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    /// Torsion invariant factors `d₁ | d₂ | ⋯`, all greater than one.
    pub torsion: Vec<u64>,
    pub free_rank: usize,
    /// `[H : H']`, or `None` when infinite.
    pub commutator_index: Option<u64>,
}

/// Abelianization of `Z_{o₁} * ⋯ * Z_{oₖ} * F_r`.
pub fn abelianization_subgroup(orders: &[u64], free_rank: usize) -> AbelianInvariants {
    let n = orders.len();
    let mat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(orders[i])
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut torsion: Vec<u64> = smith(mat)
        .diag
        .iter()
        .filter_map(|d| d.to_u64())
        .filter(|&d| d > 1)
        .collect();
    torsion.sort_unstable();
    let free = free_rank + orders.iter().filter(|&&o| o == 0).count();
    let commutator_index = (free == 0).then(|| torsion.iter().product());
    AbelianInvariants {
        torsion,
        free_rank: free,
        commutator_index,
    }
}

/// Orders of the finite free factors and the free rank of the subgroup
/// described by `table`, read off from the cycle types of `x` and `y` and
/// the Euler characteristic.
pub fn kurosh_signature(table: &CosetTable, q: u32) -> (Vec<u64>, usize) {
    let n = table.index();
    let mut orders = Vec::new();
    for c in 0..n as u32 {
        if table.image(c, Gen::X) == c {
            orders.push(2);
        }
    }
    let mut seen = vec![false; n];
    for c in 0..n {
        if seen[c] {
            continue;
        }
        let mut len = 0u64;
        let mut d = c as u32;
        while !seen[d as usize] {
            seen[d as usize] = true;
            len += 1;
            d = table.image(d, Gen::Y);
        }
        let ord = q as u64 / len;
        if ord > 1 {
            orders.push(ord);
        }
    }
    orders.sort_unstable();
    // χ(H) = n·χ(G) = Σ 1/|Cᵢ| − k + 1 − r
    let chi_g = Ratio::new(1i64, 2) + Ratio::new(1, q as i64) - Ratio::one();
    let chi_h = chi_g * Ratio::from_integer(n as i64);
    let sum: Ratio<i64> = orders.iter().map(|&o| Ratio::new(1, o as i64)).sum();
    let r = sum - Ratio::from_integer(orders.len() as i64) + Ratio::one() - chi_h;
    debug_assert!(r.is_integer() && r >= Ratio::zero());
    (orders, r.to_integer() as usize)
}
