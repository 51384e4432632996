//! The free product `Z₂ * Z_q = ⟨x, y | x², y^q⟩` and its subgroups:
//! coset enumeration, low-index search and abelianization arithmetic.

mod abelian;
mod low_index;
mod todd_coxeter;

pub use abelian::{abelianization_subgroup, kurosh_signature, AbelianInvariants};
pub use low_index::{low_index_subgroups, LowIndexSubgroup, MAX_LOW_INDEX};
pub use todd_coxeter::{todd_coxeter, CosetTable, DEFAULT_COSET_CAP};

use std::fmt;
use std::str::FromStr;

use crate::group::{GroupElement, GroupError, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FpError {
    #[error("coset enumeration exceeded {0} cosets (subgroup may have infinite index)")]
    CapExceeded(usize),
    #[error("low-index search limited to index {max}, got {requested}")]
    MaxIndexTooLarge { requested: usize, max: usize },
    #[error("invalid presentation word letter {0:?} (expected x, X, y or Y)")]
    BadLetter(char),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Generator or inverse; doubles as a coset-table column index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X = 0,
    XInv = 1,
    Y = 2,
    YInv = 3,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::X, Gen::XInv, Gen::Y, Gen::YInv];

    pub fn col(self) -> usize {
        self as usize
    }

    pub fn inverse(self) -> Gen {
        match self {
            Gen::X => Gen::XInv,
            Gen::XInv => Gen::X,
            Gen::Y => Gen::YInv,
            Gen::YInv => Gen::Y,
        }
    }

    fn as_char(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::XInv => 'X',
            Gen::Y => 'y',
            Gen::YInv => 'Y',
        }
    }
}

/// A word over `x, y` and their inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FpWord(pub Vec<Gen>);

impl FpWord {
    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for FpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for FpWord {
    type Err = FpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'x' => Ok(Gen::X),
                'X' => Ok(Gen::XInv),
                'y' => Ok(Gen::Y),
                'Y' => Ok(Gen::YInv),
                other => Err(FpError::BadLetter(other)),
            })
            .collect::<Result<_, _>>()
            .map(FpWord)
    }
}

/// `G_q ≅ ⟨x, y | x², y^q⟩` with `x ↦ S`, `y ↦ S·T⁻¹`, hence `T = y⁻¹x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Presentation {
    q: u32,
}

impl Presentation {
    pub fn new(q: u32) -> Self {
        Self { q }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn relators(&self) -> Vec<FpWord> {
        vec![
            FpWord(vec![Gen::X, Gen::X]),
            FpWord(vec![Gen::Y; self.q as usize]),
        ]
    }

    /// Rewrites an `S, T` word: `S → x`, `T → y⁻¹x`, `T⁻¹ → x⁻¹y`.
    pub fn translate(&self, w: &Word) -> FpWord {
        let mut out = Vec::with_capacity(2 * w.len());
        for l in w.letters() {
            match l {
                Letter::S => out.push(Gen::X),
                Letter::T => out.extend([Gen::YInv, Gen::X]),
                Letter::TInv => out.extend([Gen::XInv, Gen::Y]),
            }
        }
        FpWord(out)
    }

    /// Evaluates with `x = S`, `y = S·T⁻¹`.
    pub fn eval(&self, w: &FpWord) -> Result<GroupElement, GroupError> {
        let x = GroupElement::s(self.q)?;
        let y = x.mul(&GroupElement::t(self.q)?.inv());
        let imgs = [x.clone(), x.inv(), y.clone(), y.inv()];
        let mut acc = GroupElement::identity(self.q)?;
        for g in &w.0 {
            acc = acc.mul(&imgs[g.col()]);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translation_is_a_homomorphism() {
        let p = Presentation::new(5);
        for s in ["S", "T", "t", "TTSt", "StTSTTTS"] {
            let w: Word = s.parse().unwrap();
            assert_eq!(p.eval(&p.translate(&w)).unwrap(), w.eval(5).unwrap(), "{s}");
        }
    }

    #[test]
    fn relators_evaluate_trivially() {
        for q in [3, 5, 7] {
            let p = Presentation::new(q);
            for r in p.relators() {
                assert!(p.eval(&r).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn word_text() {
        let w: FpWord = "xyX Y".parse().unwrap();
        assert_eq!(w.to_string(), "xyXY");
        assert_eq!(w.inverse().to_string(), "yxYX");
        assert!("xz".parse::<FpWord>().is_err());
    }
}
