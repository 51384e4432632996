//! Projective 2×2 matrices over `Z[λ_q]`, words in the generators `S`, `T`
//! and decomposition of group elements into such words.

mod decompose;
mod matrix;
mod word;

pub use decompose::{decompose, decompose_with_cap, DEFAULT_DECOMPOSE_CAP};
pub use matrix::{ElementKind, GroupElement, Mat2};
pub use word::{Letter, Word};

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("matrix {0} does not have determinant 1")]
    NotUnimodular(String),
    #[error("not in the Hecke group after {steps} reduction steps: {reason}")]
    NotInGroup { steps: usize, reason: String },
    #[error("cannot parse matrix literal {0:?}")]
    Parse(String),
    #[error("invalid word letter {0:?} (expected S, T or t)")]
    BadLetter(char),
}
