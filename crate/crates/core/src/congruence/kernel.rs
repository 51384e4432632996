//! The kernel of `G_5/G(5,5) → G_5/G(5,λ+2)` and its generators `a, b, c`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::group::{GroupElement, GroupError, Mat2};
use crate::ring::{Residue, RingElement};

use super::{CongruenceError, FiniteMatrixGroup, ProjectiveResidueMatrix, ResidueMatrices};

/// `[[3λ+2, −2λ−3], [4λ+3, −4λ−2]]`.
pub fn eq51_factor() -> Result<GroupElement, GroupError> {
    GroupElement::new(Mat2::from_i64s(
        5,
        [&[2, 3], &[-3, -2], &[3, 4], &[-2, -4]],
    )?)
}

/// `a = [[−11λ−6, 10λ+5], [4λ+3, −4λ−2]] = T⁻²·[[3λ+2, −2λ−3], [4λ+3, −4λ−2]]`.
pub fn eq51_matrix() -> Result<GroupElement, GroupError> {
    GroupElement::new(Mat2::from_i64s(
        5,
        [&[-6, -11], &[5, 10], &[3, 4], &[-2, -4]],
    )?)
}

/// `I + π·U` with `π = λ + 2`, entries of `U` in row-major order.
pub fn i_plus_pi(u: [i64; 4]) -> [RingElement; 4] {
    let pi = RingElement::from_i64s(5, &[2, 1]).expect("q = 5");
    let delta = [1, 0, 0, 1];
    std::array::from_fn(|i| &pi.scale(&u[i].into()) + &pi.from_int_like(delta[i]))
}

/// `[ā, b̄, c̄]` in the given quotient, with `b = S·a·S⁻¹` and `c = J·a·J⁻¹`.
pub fn delta(arith: &ResidueMatrices) -> Result<[ProjectiveResidueMatrix; 3], GroupError> {
    let a = eq51_matrix()?;
    let b = a.conjugate(&GroupElement::s(5)?);
    let c = a.conjugate_by(&Mat2::swap(5)?)?;
    Ok([arith.reduce(&a), arith.reduce(&b), arith.reduce(&c)])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub q5_order: usize,
    pub qpi_order: usize,
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub delta_order: usize,
    pub delta_generates: bool,
}

/// Kernel elements of `Q₅ → Q_π`, in `Q₅` order.
pub fn kernel_elements(
    q5: &FiniteMatrixGroup,
    qpi: &FiniteMatrixGroup,
) -> Vec<ProjectiveResidueMatrix> {
    let (big, small) = (q5.arith(), qpi.arith());
    let id = small.identity();
    q5.elements()
        .iter()
        .copied()
        .filter(|x| {
            let projected = x.0.map(|r| big.ring().project(small.ring(), Residue(r)).0);
            small.canonical(projected) == id
        })
        .collect()
}

/// Order, commutativity (all pairs), exponent, and whether `ā, b̄, c̄`
/// generate the kernel.
pub fn kernel_structure(
    q5: &FiniteMatrixGroup,
    qpi: &FiniteMatrixGroup,
) -> Result<KernelReport, CongruenceError> {
    if !q5.arith().ring().refines(qpi.arith().ring()) {
        return Err(CongruenceError::Structure(
            "Q₅ does not map onto Q_π".into(),
        ));
    }
    let kernel = kernel_elements(q5, qpi);
    let a = q5.arith();
    let abelian = kernel
        .iter()
        .all(|&x| kernel.iter().all(|&y| a.mul(x, y) == a.mul(y, x)));
    let exponent = kernel
        .iter()
        .map(|&x| q5.element_order(x))
        .fold(1, num_integer::lcm);
    let d = FiniteMatrixGroup::closure(a, &delta(a)?, kernel.len().max(1) * 2)?;
    let ks: BTreeSet<_> = kernel.iter().collect();
    let ds: BTreeSet<_> = d.elements().iter().collect();
    Ok(KernelReport {
        q5_order: q5.order(),
        qpi_order: qpi.order(),
        order: kernel.len(),
        abelian,
        exponent,
        delta_order: d.order(),
        delta_generates: ks == ds,
    })
}
