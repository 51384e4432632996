//! Finite quotients `G_q → PSL₂(Z[λ]/(α))` and the non-congruence argument
//! for the power subgroup `G_5^5` and the commutator subgroup `G_5'`.

mod derived;
mod kernel;
mod pipeline;
mod rst;

pub use derived::{abelianization_order, derived_subgroup, no_normal_index5};
pub use kernel::{delta, eq51_factor, eq51_matrix, i_plus_pi, kernel_structure, KernelReport};
pub use pipeline::{prop52_pipeline, VERDICT_INCONCLUSIVE, VERDICT_NOT_CONGRUENCE};
pub use rst::{
    invariant_subgroup_scan, invariant_subgroup_scan_with, rst_basis, rst_relations, s_t_residues,
    Coords, RstReport, ScanReport,
};

use std::collections::HashMap;
use std::sync::Arc;

use crate::group::{GroupElement, GroupError};
use crate::ring::{FiniteRing, Residue, RingElement, RingError};

pub const DEFAULT_BFS_CAP: usize = 10_000_000;

/// The closure cap, overridable through `HECKE_BFS_CAP`.
pub fn bfs_cap() -> usize {
    std::env::var("HECKE_BFS_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BFS_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error("group closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("{0}")]
    Structure(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A residue matrix up to sign, stored as the lexicographically smaller of
/// the encodings of `M` and `−M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveResidueMatrix(pub [u32; 4]);

/// Matrix arithmetic over one finite ring.
#[derive(Clone, Debug)]
pub struct ResidueMatrices {
    ring: Arc<FiniteRing>,
}

impl ResidueMatrices {
    pub fn new(alpha: &RingElement) -> Result<Self, RingError> {
        Ok(Self {
            ring: Arc::new(FiniteRing::new(alpha)?),
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn canonical(&self, m: [u32; 4]) -> ProjectiveResidueMatrix {
        let r = &self.ring;
        let neg = m.map(|x| r.neg(Residue(x)).0);
        ProjectiveResidueMatrix(m.min(neg))
    }

    pub fn identity(&self) -> ProjectiveResidueMatrix {
        let (o, z) = (self.ring.one().0, self.ring.zero().0);
        self.canonical([o, z, z, o])
    }

    pub fn reduce(&self, g: &GroupElement) -> ProjectiveResidueMatrix {
        self.reduce_entries(g.matrix().entries())
    }

    pub fn reduce_entries(&self, e: [&RingElement; 4]) -> ProjectiveResidueMatrix {
        self.canonical(e.map(|x| self.ring.reduce(x).0))
    }

    pub fn mul(
        &self,
        x: ProjectiveResidueMatrix,
        y: ProjectiveResidueMatrix,
    ) -> ProjectiveResidueMatrix {
        let r = &self.ring;
        let [a, b, c, d] = x.0.map(Residue);
        let [e, f, g, h] = y.0.map(Residue);
        let dot = |p, q, s, t| r.add(r.mul(p, q), r.mul(s, t)).0;
        self.canonical([
            dot(a, e, b, g),
            dot(a, f, b, h),
            dot(c, e, d, g),
            dot(c, f, d, h),
        ])
    }

    pub fn inv(&self, x: ProjectiveResidueMatrix) -> ProjectiveResidueMatrix {
        let r = &self.ring;
        let [a, b, c, d] = x.0.map(Residue);
        self.canonical([d.0, r.neg(b).0, r.neg(c).0, a.0])
    }

    pub fn pow(&self, x: ProjectiveResidueMatrix, e: i64) -> ProjectiveResidueMatrix {
        let base = if e < 0 { self.inv(x) } else { x };
        (0..e.unsigned_abs()).fold(self.identity(), |acc, _| self.mul(acc, base))
    }

    /// `J·M·J⁻¹` with `J = [[0,1],[1,0]]`.
    pub fn twist(&self, x: ProjectiveResidueMatrix) -> ProjectiveResidueMatrix {
        let [a, b, c, d] = x.0;
        self.canonical([d, c, b, a])
    }

    /// `h·x·h⁻¹`.
    pub fn conj(
        &self,
        x: ProjectiveResidueMatrix,
        h: ProjectiveResidueMatrix,
    ) -> ProjectiveResidueMatrix {
        self.mul(self.mul(h, x), self.inv(h))
    }

    pub fn commutator(
        &self,
        x: ProjectiveResidueMatrix,
        y: ProjectiveResidueMatrix,
    ) -> ProjectiveResidueMatrix {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    /// Entries as ring elements, e.g. `[[1,0],[4+4L,1]]`.
    pub fn display(&self, x: ProjectiveResidueMatrix) -> String {
        let e = x.0.map(|v| self.ring.display(Residue(v)));
        format!("[[{},{}],[{},{}]]", e[0], e[1], e[2], e[3])
    }
}

/// `g ≡ ±I` modulo `(α)`.
pub fn is_congruence_member(g: &GroupElement, alpha: &RingElement) -> Result<bool, RingError> {
    let m = ResidueMatrices::new(alpha)?;
    Ok(m.reduce(g) == m.identity())
}

pub fn reduce_matrix(g: &GroupElement, m: &ResidueMatrices) -> ProjectiveResidueMatrix {
    m.reduce(g)
}

/// A finite group of residue matrices, elements in BFS discovery order.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    arith: ResidueMatrices,
    generators: Vec<ProjectiveResidueMatrix>,
    elements: Vec<ProjectiveResidueMatrix>,
    index: HashMap<ProjectiveResidueMatrix, u32>,
}

impl FiniteMatrixGroup {
    /// Closure of `generators` under left multiplication by generators and
    /// their inverses.
    pub fn closure(
        arith: &ResidueMatrices,
        generators: &[ProjectiveResidueMatrix],
        cap: usize,
    ) -> Result<Self, CongruenceError> {
        let mut steps: Vec<ProjectiveResidueMatrix> = generators.to_vec();
        steps.extend(generators.iter().map(|&g| arith.inv(g)));
        let id = arith.identity();
        let mut elements = vec![id];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &g in &steps {
                let y = arith.mul(g, x);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(CongruenceError::CapExceeded(cap));
                    }
                    index.insert(y, elements.len() as u32);
                    elements.push(y);
                }
            }
            i += 1;
        }
        Ok(Self {
            arith: arith.clone(),
            generators: generators.to_vec(),
            elements,
            index,
        })
    }

    pub fn arith(&self) -> &ResidueMatrices {
        &self.arith
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[ProjectiveResidueMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[ProjectiveResidueMatrix] {
        &self.elements
    }

    pub fn contains(&self, x: &ProjectiveResidueMatrix) -> bool {
        self.index.contains_key(x)
    }

    pub fn is_abelian(&self) -> bool {
        let a = &self.arith;
        self.generators
            .iter()
            .all(|&x| self.generators.iter().all(|&y| a.mul(x, y) == a.mul(y, x)))
    }

    /// Order of `x` (assumed to lie in the group).
    pub fn element_order(&self, x: ProjectiveResidueMatrix) -> usize {
        let id = self.arith.identity();
        let mut p = x;
        let mut n = 1;
        while p != id {
            p = self.arith.mul(p, x);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> usize {
        self.elements
            .iter()
            .map(|&x| self.element_order(x))
            .fold(1, num_integer::lcm)
    }
}

/// The image of `G_q`-elements in `PSL₂(Z[λ]/(α))`.
pub fn image_group(
    generators: &[GroupElement],
    alpha: &RingElement,
    cap: usize,
) -> Result<FiniteMatrixGroup, CongruenceError> {
    let arith = ResidueMatrices::new(alpha)?;
    let gens: Vec<_> = generators.iter().map(|g| arith.reduce(g)).collect();
    FiniteMatrixGroup::closure(&arith, &gens, cap)
}

/// `{S, T}` for `G_q`.
pub fn standard_generators(q: u32) -> Result<Vec<GroupElement>, GroupError> {
    Ok(vec![GroupElement::s(q)?, GroupElement::t(q)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Word;

    fn e(c: &[i64]) -> RingElement {
        RingElement::from_i64s(5, c).unwrap()
    }

    #[test]
    fn quotient_orders() {
        let gens = standard_generators(5).unwrap();
        assert_eq!(image_group(&gens, &e(&[2, 1]), 1000).unwrap().order(), 60);
        assert_eq!(image_group(&gens, &e(&[1]), 10).unwrap().order(), 1);
        assert_eq!(image_group(&gens, &e(&[5]), 100_000).unwrap().order(), 7500);
    }

    #[test]
    fn cap_reported() {
        let gens = standard_generators(5).unwrap();
        assert_eq!(
            image_group(&gens, &e(&[5]), 100).unwrap_err(),
            CongruenceError::CapExceeded(100)
        );
    }

    #[test]
    fn membership() {
        let t = GroupElement::t(5).unwrap();
        assert!(!is_congruence_member(&t, &e(&[5])).unwrap());
        assert!(is_congruence_member(&GroupElement::identity(5).unwrap(), &e(&[0, 3])).unwrap());
        // T^5 ≡ I mod λ+2 since λ ≡ 3 and 5λ ≡ 0
        assert!(is_congruence_member(&t.pow(5), &e(&[2, 1])).unwrap());
    }

    #[test]
    fn reduction_is_multiplicative() {
        let m = ResidueMatrices::new(&e(&[5])).unwrap();
        let words = ["TTSt", "StSTTS", "tttS", "STSTST"];
        for u in words {
            for v in words {
                let (gu, gv) = (
                    u.parse::<Word>().unwrap().eval(5).unwrap(),
                    v.parse::<Word>().unwrap().eval(5).unwrap(),
                );
                assert_eq!(m.reduce(&gu.mul(&gv)), m.mul(m.reduce(&gu), m.reduce(&gv)));
                assert_eq!(m.reduce(&gu.inv()), m.inv(m.reduce(&gu)));
            }
        }
    }
}
