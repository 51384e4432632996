//! Golden inputs, embedded at build time. A [`Catalog`] can also be built
//! by hand to run the checks against altered files.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    /// Whole group `G_5`: `{−∞, 0, ∞}` with an even and an odd edge.
    pub full_group: String,
    /// The index-2 subgroup `{−∞, 0, ∞}` with two odd edges.
    pub index2: String,
    /// The power subgroup `G_5^5`: an ideal pentagon with five even edges.
    pub g5_power5: String,
    /// `Γ(2)` in the modular group, with two free pairs.
    pub gamma2_q3: String,
    /// The five involutions generating `G_5^5`, one matrix literal per line.
    pub example34_matrices: String,
    /// Their decompositions over `S`, `T`, `t`.
    pub example34_words: String,
    /// `<modulus> <order of the image of G_5>` per line.
    pub quotient_orders: String,
}

impl Catalog {
    pub fn embedded() -> Self {
        Self {
            full_group: include_str!("../../catalog/full_group.hfs").into(),
            index2: include_str!("../../catalog/index2.hfs").into(),
            g5_power5: include_str!("../../catalog/g5_power5.hfs").into(),
            gamma2_q3: include_str!("../../catalog/gamma2_q3.hfs").into(),
            example34_matrices: include_str!("../../catalog/example34_matrices.txt").into(),
            example34_words: include_str!("../../catalog/example34_words.txt").into(),
            quotient_orders: include_str!("../../catalog/quotient_orders.txt").into(),
        }
    }

    /// `(name, text)` for every symbol file.
    pub fn symbols(&self) -> [(&'static str, &str); 4] {
        [
            ("full_group.hfs", &self.full_group),
            ("index2.hfs", &self.index2),
            ("g5_power5.hfs", &self.g5_power5),
            ("gamma2_q3.hfs", &self.gamma2_q3),
        ]
    }
}
