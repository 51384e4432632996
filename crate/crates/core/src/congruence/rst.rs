//! The basis `r, s, t` of the order-125 kernel, the conjugation table of
//! `S`, `T`, `J` on it, and the scan for invariant subgroups.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::group::GroupElement;

use super::kernel::{delta, i_plus_pi};
use super::{CongruenceError, FiniteMatrixGroup, ProjectiveResidueMatrix, ResidueMatrices};

type Vec3 = [u8; 3];

/// Exponent coordinates `(i, j, k)` of `rⁱ sʲ tᵏ` in the kernel.
#[derive(Clone, Debug)]
pub struct Coords {
    arith: ResidueMatrices,
    basis: [ProjectiveResidueMatrix; 3],
    table: HashMap<ProjectiveResidueMatrix, Vec3>,
}

impl Coords {
    /// Fails unless `r, s, t` are independent of order 5.
    pub fn new(
        arith: &ResidueMatrices,
        basis: [ProjectiveResidueMatrix; 3],
    ) -> Result<Self, CongruenceError> {
        let mut table = HashMap::new();
        for i in 0..5u8 {
            for j in 0..5u8 {
                for k in 0..5u8 {
                    let [r, s, t] = basis;
                    let x = arith.mul(
                        arith.mul(arith.pow(r, i as i64), arith.pow(s, j as i64)),
                        arith.pow(t, k as i64),
                    );
                    table.insert(x, [i, j, k]);
                }
            }
        }
        if table.len() != 125 {
            return Err(CongruenceError::Structure(format!(
                "r, s, t span {} elements, expected 125",
                table.len()
            )));
        }
        Ok(Self {
            arith: arith.clone(),
            basis,
            table,
        })
    }

    pub fn basis(&self) -> [ProjectiveResidueMatrix; 3] {
        self.basis
    }

    pub fn of(&self, x: ProjectiveResidueMatrix) -> Option<Vec3> {
        self.table.get(&x).copied()
    }

    pub fn element(&self, v: Vec3) -> ProjectiveResidueMatrix {
        let a = &self.arith;
        (0..3).fold(a.identity(), |acc, i| {
            a.mul(acc, a.pow(self.basis[i], v[i] as i64))
        })
    }

    /// `r s^-1 t^2` style; exponents shown in `-2..=2`.
    pub fn word(v: Vec3) -> String {
        let parts: Vec<String> = ["r", "s", "t"]
            .iter()
            .zip(v)
            .filter(|(_, e)| *e % 5 != 0)
            .map(|(name, e)| match e % 5 {
                1 => name.to_string(),
                2 => format!("{name}^2"),
                3 => format!("{name}^-2"),
                _ => format!("{name}^-1"),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    fn image(
        &self,
        f: &dyn Fn(ProjectiveResidueMatrix) -> ProjectiveResidueMatrix,
    ) -> Option<[Vec3; 3]> {
        let mut cols = [[0u8; 3]; 3];
        for (i, b) in self.basis.iter().enumerate() {
            cols[i] = self.of(f(*b))?;
        }
        Some(cols)
    }
}

fn apply(cols: &[Vec3; 3], v: Vec3) -> Vec3 {
    std::array::from_fn(|row| {
        ((0..3)
            .map(|i| cols[i][row] as u32 * v[i] as u32)
            .sum::<u32>()
            % 5) as u8
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormCheck {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub stated: String,
    pub computed: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RstReport {
    pub forms: Vec<FormCheck>,
    pub identities: Vec<IdentityCheck>,
    /// `⟨r, s, t⟩ = ⟨ā, b̄, c̄⟩`.
    pub same_subgroup: bool,
    /// `(I+πU)(I+πV) ≡ I+π(U+V)` on the `U` of `a, b, c`.
    pub additive_model: bool,
}

impl RstReport {
    pub fn all_hold(&self) -> bool {
        self.same_subgroup
            && self.additive_model
            && self.forms.iter().all(|f| f.holds)
            && self.identities.iter().all(|i| i.holds)
    }
}

fn form(arith: &ResidueMatrices, u: [i64; 4]) -> ProjectiveResidueMatrix {
    let e = i_plus_pi(u);
    arith.reduce_entries([&e[0], &e[1], &e[2], &e[3]])
}

/// `r = (ac)(ab)`, `s = (ac)(ab)⁻¹`, `t = bc` in the mod-5 quotient.
pub fn rst_basis(arith: &ResidueMatrices) -> Result<[ProjectiveResidueMatrix; 3], CongruenceError> {
    let [a, b, c] = delta(arith)?;
    let ac = arith.mul(a, c);
    let ab = arith.mul(a, b);
    Ok([
        arith.mul(ac, ab),
        arith.mul(ac, arith.inv(ab)),
        arith.mul(b, c),
    ])
}

/// Residues of `S` and `T` in `arith`.
pub fn s_t_residues(
    arith: &ResidueMatrices,
) -> Result<[ProjectiveResidueMatrix; 2], CongruenceError> {
    Ok([
        arith.reduce(&GroupElement::s(5)?),
        arith.reduce(&GroupElement::t(5)?),
    ])
}

/// The displayed forms of `r, s, t`, the nine conjugation identities
/// `x^B = B·x·B⁻¹` for `B ∈ {S, T, J}`, and `⟨r,s,t⟩ = ⟨a,b,c⟩`.
pub fn rst_relations(arith: &ResidueMatrices) -> Result<RstReport, CongruenceError> {
    let basis = rst_basis(arith)?;
    let coords = Coords::new(arith, basis)?;
    let [sm, tm] = s_t_residues(arith)?;

    let forms = [
        ("r", [0, 0, 3, 0]),
        ("s", [0, 3, 0, 0]),
        ("t", [-3, 0, 0, 3]),
    ]
    .iter()
    .zip(basis)
    .map(|(&(name, u), x)| {
        let want = form(arith, u);
        FormCheck {
            name: name.into(),
            expected: arith.display(want),
            computed: arith.display(x),
            holds: want == x,
        }
    })
    .collect();

    let conj = |x, by: &str| match by {
        "S" => arith.conj(x, sm),
        "T" => arith.conj(x, tm),
        _ => arith.twist(x),
    };
    // (base, conjugator, stated right-hand side as exponents of r, s, t)
    let table: [(usize, &str, Vec3); 9] = [
        (0, "S", [0, 4, 0]),
        (0, "T", [1, 4, 2]),
        (0, "J", [0, 1, 0]),
        (1, "S", [4, 0, 0]),
        (1, "T", [0, 1, 0]),
        (1, "J", [1, 0, 0]),
        (2, "S", [0, 0, 4]),
        (2, "T", [0, 1, 1]),
        (2, "J", [0, 0, 4]),
    ];
    let names = ["r", "s", "t"];
    let mut identities = Vec::new();
    for (base, by, rhs) in table {
        let lhs = conj(basis[base], by);
        let computed = coords
            .of(lhs)
            .ok_or_else(|| CongruenceError::Structure("conjugate left the kernel".into()))?;
        identities.push(IdentityCheck {
            identity: format!("{}^{}", names[base], by),
            stated: Coords::word(rhs),
            computed: Coords::word(computed),
            holds: computed == rhs,
        });
    }

    let cap = 1000;
    let abc = FiniteMatrixGroup::closure(arith, &delta(arith)?, cap)?;
    let rst = FiniteMatrixGroup::closure(arith, &basis, cap)?;
    let set = |g: &FiniteMatrixGroup| g.elements().iter().copied().collect::<BTreeSet<_>>();
    let same_subgroup = set(&abc) == set(&rst);

    let us = [[4, 0, 4, 1], [1, 1, 0, 4], [1, 4, 0, 4]];
    let additive_model = us.iter().all(|u| {
        us.iter().all(|v| {
            let sum = std::array::from_fn(|i| u[i] + v[i]);
            arith.mul(form(arith, *u), form(arith, *v)) == form(arith, sum)
        })
    });

    Ok(RstReport {
        forms,
        identities,
        same_subgroup,
        additive_model,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantSubgroup {
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub candidates: usize,
    pub by_order: Vec<(usize, usize)>,
    pub invariant: Vec<InvariantSubgroup>,
    /// Whether the plane `⟨s, t⟩` is invariant.
    pub st_plane_invariant: bool,
}

struct Candidate {
    basis: Vec<Vec3>,
    elements: BTreeSet<Vec3>,
}

fn span(basis: &[Vec3]) -> BTreeSet<Vec3> {
    let mut out = BTreeSet::from([[0u8; 3]]);
    for b in basis {
        let prev: Vec<Vec3> = out.iter().copied().collect();
        for v in prev {
            for c in 1..5u8 {
                out.insert(std::array::from_fn(|i| (v[i] + c * b[i]) % 5));
            }
        }
    }
    out
}

/// Nonzero vectors whose first nonzero entry is 1.
fn projective_points() -> Vec<Vec3> {
    let mut pts = Vec::new();
    for i in 0..5u8 {
        for j in 0..5u8 {
            for k in 0..5u8 {
                let v = [i, j, k];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

/// All 64 subgroups of `(Z/5)³`: trivial, 31 lines, 31 planes, full.
fn all_subgroups() -> Vec<Candidate> {
    let mut out = vec![Candidate {
        basis: vec![],
        elements: span(&[]),
    }];
    let pts = projective_points();
    for &p in &pts {
        out.push(Candidate {
            basis: vec![p],
            elements: span(&[p]),
        });
    }
    for &f in &pts {
        let plane: Vec<Vec3> = pts
            .iter()
            .copied()
            .filter(|v| (0..3).map(|i| f[i] as u32 * v[i] as u32).sum::<u32>() % 5 == 0)
            .collect();
        let first = plane[0];
        let second = *plane
            .iter()
            .find(|v| !span(&[first]).contains(*v))
            .expect("a plane has two independent points");
        out.push(Candidate {
            basis: vec![first, second],
            elements: span(&[first, second]),
        });
    }
    let full = vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    out.push(Candidate {
        elements: span(&full),
        basis: full,
    });
    out
}

/// Subgroups of `⟨r, s, t⟩` invariant under conjugation by each of
/// `conjugators` and, if `with_twist`, under `J`.
pub fn invariant_subgroup_scan_with(
    arith: &ResidueMatrices,
    conjugators: &[ProjectiveResidueMatrix],
    with_twist: bool,
) -> Result<ScanReport, CongruenceError> {
    let coords = Coords::new(arith, rst_basis(arith)?)?;
    let mut actions = Vec::new();
    for &h in conjugators {
        actions.push(coords.image(&|x| arith.conj(x, h)).ok_or_else(|| {
            CongruenceError::Structure("conjugator does not normalize the kernel".into())
        })?);
    }
    if with_twist {
        actions.push(
            coords.image(&|x| arith.twist(x)).ok_or_else(|| {
                CongruenceError::Structure("J does not preserve the kernel".into())
            })?,
        );
    }
    let candidates = all_subgroups();
    let invariant_set = |c: &Candidate| {
        actions
            .iter()
            .all(|a| c.basis.iter().all(|&b| c.elements.contains(&apply(a, b))))
    };
    let mut by_order: Vec<(usize, usize)> = Vec::new();
    for c in &candidates {
        let n = c.elements.len();
        match by_order.iter_mut().find(|(o, _)| *o == n) {
            Some(e) => e.1 += 1,
            None => by_order.push((n, 1)),
        }
    }
    let invariant = candidates
        .iter()
        .filter(|c| invariant_set(c))
        .map(|c| InvariantSubgroup {
            order: c.elements.len(),
            generators: c.basis.iter().map(|&b| Coords::word(b)).collect(),
        })
        .collect();
    let st = Candidate {
        basis: vec![[0, 1, 0], [0, 0, 1]],
        elements: span(&[[0, 1, 0], [0, 0, 1]]),
    };
    Ok(ScanReport {
        candidates: candidates.len(),
        by_order,
        invariant,
        st_plane_invariant: invariant_set(&st),
    })
}

/// The scan under `S`, `T` and `J`.
pub fn invariant_subgroup_scan(arith: &ResidueMatrices) -> Result<ScanReport, CongruenceError> {
    let [s, t] = s_t_residues(arith)?;
    invariant_subgroup_scan_with(arith, &[s, t], true)
}
