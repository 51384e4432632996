//! Commutator subgroups of finite matrix groups by normal closure.

use super::{CongruenceError, FiniteMatrixGroup};

/// `G'` as the normal closure of the commutators of the generators.
pub fn derived_subgroup(g: &FiniteMatrixGroup) -> Result<FiniteMatrixGroup, CongruenceError> {
    let a = g.arith();
    let gens = g.generators();
    let mut seeds = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            let c = a.commutator(x, y);
            if c != a.identity() && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    let cap = g.order();
    let mut h = FiniteMatrixGroup::closure(a, &seeds, cap)?;
    loop {
        let missing = h
            .generators()
            .iter()
            .flat_map(|&n| gens.iter().map(move |&x| (n, x)))
            .map(|(n, x)| a.conj(n, x))
            .find(|c| !h.contains(c));
        match missing {
            Some(c) => {
                seeds.push(c);
                h = FiniteMatrixGroup::closure(a, &seeds, cap)?;
            }
            None => return Ok(h),
        }
    }
}

/// `|G/G'|`.
pub fn abelianization_order(g: &FiniteMatrixGroup) -> Result<usize, CongruenceError> {
    Ok(g.order() / derived_subgroup(g)?.order())
}

/// A normal subgroup of index 5 would give a quotient of order 5 of the
/// abelianization, so its absence follows from `5 ∤ |G/G'|`.
pub fn no_normal_index5(g: &FiniteMatrixGroup) -> Result<bool, CongruenceError> {
    Ok(abelianization_order(g)? % 5 != 0)
}
