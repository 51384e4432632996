use std::fmt;
use std::str::FromStr;

use super::{GroupElement, GroupError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S,
    T,
    /// `T⁻¹`, written `t`.
    TInv,
}

impl Letter {
    pub fn inverse(self) -> Self {
        match self {
            Letter::S => Letter::S,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::S => 'S',
            Letter::T => 'T',
            Letter::TInv => 't',
        }
    }

    pub fn element(self, q: u32) -> GroupElement {
        let e = match self {
            Letter::S => GroupElement::s(q),
            Letter::T => GroupElement::t(q),
            Letter::TInv => GroupElement::t(q).map(|t| t.inv()),
        };
        e.expect("q validated by caller")
    }
}

/// A freely reduced word in `S`, `T`, `T⁻¹`; `S` is treated as an involution,
/// so `SS` cancels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self(out)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::new(self.0.iter().chain(&other.0).copied())
    }

    /// `T^k` as a word.
    pub fn t_power(k: i64) -> Self {
        let l = if k >= 0 { Letter::T } else { Letter::TInv };
        Self(vec![l; k.unsigned_abs() as usize])
    }

    pub fn eval(&self, q: u32) -> Result<GroupElement, GroupError> {
        let s = GroupElement::s(q)?;
        let t = GroupElement::t(q)?;
        let t_inv = t.inv();
        let mut acc = GroupElement::identity(q)?;
        for l in &self.0 {
            acc = acc.mul(match l {
                Letter::S => &s,
                Letter::T => &t,
                Letter::TInv => &t_inv,
            });
        }
        Ok(acc)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = GroupError;

    /// Letters `S`, `T`, `t`; whitespace ignored. Input is freely reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'S' => Ok(Letter::S),
                'T' => Ok(Letter::T),
                't' => Ok(Letter::TInv),
                other => Err(GroupError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w: Word = "TtSSTTStT".parse().unwrap();
        assert_eq!(w.to_string(), "TTS");
        assert!("tTSS".parse::<Word>().unwrap().is_empty());
        assert!("TxS".parse::<Word>().is_err());
    }

    #[test]
    fn evaluation() {
        assert!(Word::empty().eval(5).unwrap().is_identity());
        let s: Word = "S".parse().unwrap();
        assert_eq!(s.eval(5).unwrap(), GroupElement::s(5).unwrap());
        let w: Word = "TTSt".parse().unwrap();
        let e = w.eval(5).unwrap();
        assert!(e.mul(&w.inverse().eval(5).unwrap()).is_identity());
    }

    #[test]
    fn hecke_relation() {
        // (ST)^q = 1 projectively
        for q in [3u32, 5, 7] {
            let w = Word::new((0..q).flat_map(|_| [Letter::S, Letter::T]));
            assert!(w.eval(q).unwrap().is_identity(), "q={q}");
        }
    }
}
