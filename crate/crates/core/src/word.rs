use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

use crate::alphabet::Letter;
use crate::error::Error;

/// A finite word, possibly empty.
///
/// Words do not carry their alphabet; letters are validated where a word
/// meets an alphabet-bound object (an antimorphism, a bi-sequence).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    /// `w v^{-1}`: removes the suffix `v`, defined only when `v` is a suffix.
    pub fn strip_suffix(&self, suffix: &[Letter]) -> Option<Word> {
        self.0.strip_suffix(suffix).map(|s| Word(s.to_vec()))
    }

    /// `u^{-1} w`: removes the prefix `u`, defined only when `u` is a prefix.
    pub fn strip_prefix(&self, prefix: &[Letter]) -> Option<Word> {
        self.0.strip_prefix(prefix).map(|s| Word(s.to_vec()))
    }

    /// `self` repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = core::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses a word written with the default glyphs `0-9a-z`.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| {
                Letter::from_default_glyph(c)
                    .ok_or_else(|| Error::Domain(alloc::format!("{c:?} is not a default glyph")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn quotients_are_partial() {
        assert_eq!(w("01100").strip_suffix(&w("00")), Some(w("011")));
        assert_eq!(w("01100").strip_suffix(&w("01")), None);
        assert_eq!(w("01100").strip_prefix(&w("011")), Some(w("00")));
        assert_eq!(w("01100").strip_prefix(&w("1")), None);
        assert_eq!(w("01").strip_suffix(&w("")), Some(w("01")));
    }

    #[test]
    fn empty_word_has_length_zero() {
        assert_eq!(Word::empty().len(), 0);
        assert_eq!(w("").to_string(), "");
        assert_eq!(w("0110").len(), 4);
    }
}
