//! Exact computation in Hecke groups `G_q = ⟨S, T⟩ ⊂ PSL₂(Z[λ_q])`.
//!
//! * [`ring`]: arithmetic in `Z[λ_q]` and its finite quotients.
//! * [`group`]: projective matrices, words in `S`, `T`, and decomposition.
//! * [`farey`]: Hecke-Farey symbols, side pairings and geometric invariants.
//! * [`fpenum`]: coset enumeration and low-index subgroups of `Z₂ * Z_q`.
//! * [`congruence`]: finite quotients of `G_5` and the non-congruence checks.
//! * [`report`]: the aggregated verification report.

pub mod congruence;
pub mod farey;
pub mod fpenum;
pub mod group;
pub mod report;
pub mod ring;
